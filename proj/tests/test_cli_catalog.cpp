// Generators, the expression parser, the facet file format and the JSON /
// text reports that the command-line tool emits.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include <flagreg/flagreg.hpp>

#include "oracles.hpp"

using namespace flagreg;

TEST_CASE("built-in generators have the advertised face counts")
{
    CHECK(cycle(6).f_vector().counts == std::vector<long long>{1, 6, 6});
    CHECK(simplex(4).f_vector().counts == std::vector<long long>{1, 4, 6, 4, 1});
    CHECK(simplex_boundary(3).f_vector().counts == std::vector<long long>{1, 4, 6, 4});
    CHECK(cross_polytope_boundary(3).f_vector().counts ==
          std::vector<long long>{1, 6, 12, 8});
    CHECK(icosahedron().f_vector().counts == std::vector<long long>{1, 12, 30, 20});
    CHECK(rp2_6().f_vector().counts == std::vector<long long>{1, 6, 15, 10});

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(simplex_boundary(0), std::invalid_argument);
    CHECK_THROWS_AS(cross_polytope_boundary(0), std::invalid_argument);
    CHECK_THROWS_AS(random_flag(0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_flag(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("icosahedron invariants")
{
    auto ico = icosahedron();
    CHECK(ico.is_pure());
    CHECK(is_closed_pseudomanifold(ico).holds);
    CHECK(is_flag_no_square(ico).holds);
    // Every vertex has exactly five neighbors.
    Graph g = ico.one_skeleton();
    for (Vertex v = 0; v < 12; ++v)
        CHECK(g.neighbors(v).size() == 5);
}

TEST_CASE("random generator is deterministic and always flag")
{
    auto a = random_flag(9, 0.45, 123);
    auto b = random_flag(9, 0.45, 123);
    CHECK(a == b);
    auto c = random_flag(9, 0.45, 124);
    CHECK_FALSE(a == c);  // a different seed virtually surely differs
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto r = random_flag(7, 0.5, seed);
        CHECK(r.is_flag().flag);
        CHECK(oracle::brute_is_flag(r));
    }
    // Edge probabilities at the extremes.
    CHECK(random_flag(5, 0.0, 7) == SimplicialComplex::from_facets(
                                        5, {Face{0}, Face{1}, Face{2}, Face{3}, Face{4}}));
    CHECK(random_flag(5, 1.0, 7) == simplex(5));
}

TEST_CASE("generator expressions")
{
    CHECK(generate("cycle(5)") == cycle(5));
    CHECK(generate(" cycle( 5 ) ") == cycle(5));
    CHECK(generate("icosahedron") == icosahedron());
    CHECK(generate("icosahedron()") == icosahedron());
    CHECK(generate("rp2_6") == rp2_6());
    CHECK(generate("cone(cycle(6))") == cone(cycle(6)));
    CHECK(generate("suspension(simplex(2))") == suspension(simplex(2)));
    CHECK(generate("join(cycle(4),simplex(1))") == cycle(4).join(simplex(1)));
    CHECK(generate("random_flag(8,0.4,17)") == random_flag(8, 0.4, 17));
    CHECK(generate("cross_polytope_boundary(2)") == cross_polytope_boundary(2));

    CHECK_THROWS_AS(generate("frobnicate(3)"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle(5) trailing"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle(x)"), std::invalid_argument);
    CHECK_THROWS_AS(generate("cone(cycle(5)"), std::invalid_argument);
    CHECK_THROWS_AS(generate("join(cycle(4))"), std::invalid_argument);
    CHECK_THROWS_AS(generate(""), std::invalid_argument);
    CHECK_THROWS_AS(generate("icosahedron(3)"), std::invalid_argument);
}

TEST_CASE("standard catalog is well formed")
{
    auto cat = standard_catalog();
    CHECK(cat.size() == 17);
    std::set<std::string> names;
    for (const auto& [name, c] : cat) {
        names.insert(name);
        CHECK_FALSE(c.is_void());
    }
    CHECK(names.size() == cat.size());  // names are unique
    // The catalog deliberately mixes flag and non-flag entries.
    int flag_count = 0;
    for (const auto& [name, c] : cat)
        flag_count += c.is_flag().flag ? 1 : 0;
    CHECK(flag_count == 14);
}

TEST_CASE("facet files parse with first-appearance labels")
{
    auto r = parse_facets("a b c\nc d\n");
    CHECK(r.warnings.empty());
    CHECK(r.complex.ground_size() == 4);
    CHECK(r.complex.labels() == std::vector<std::string>{"a", "b", "c", "d"});
    REQUIRE(r.complex.facets().size() == 2);
    CHECK(r.complex.facets()[0] == Face({0, 1, 2}));
    CHECK(r.complex.facets()[1] == Face({2, 3}));

    // Comments, blank lines, stray spacing.
    auto r2 = parse_facets("# header\n\n  1 2 3   # a facet\n\n3 4\n");
    CHECK(r2.complex.f_vector().counts == std::vector<long long>{1, 4, 4, 1});
    CHECK(r2.complex.labels() == std::vector<std::string>{"1", "2", "3", "4"});

    // Numeric-looking labels are still labels: "10" is one token.
    auto r3 = parse_facets("10 2\n");
    CHECK(r3.complex.ground_size() == 2);
    CHECK(r3.complex.label(0) == "10");
}

TEST_CASE("facet file warnings and errors")
{
    auto r = parse_facets("a b c\na b\n");
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0] ==
          "line 2: facet {a b} is contained in another facet; pruned");

    auto r2 = parse_facets("a b\nc d\na b\n");
    REQUIRE(r2.warnings.size() == 1);
    CHECK(r2.warnings[0] == "line 3: facet {a b} repeats an earlier line; dropped");

    CHECK_THROWS_WITH(parse_facets("a b\nc c\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_facets("# only comments\n\n"),
                      Catch::Matchers::ContainsSubstring("no facet lines"));
}

TEST_CASE("facet files round-trip")
{
    // With labels.
    const std::string text = "a b c\nb c d\nd e\n";
    auto r = parse_facets(text);
    CHECK(serialize_facets(r.complex) == text);

    // Without labels: vertices print 1-based.
    CHECK(serialize_facets(cycle(4)) == "1 2\n1 4\n2 3\n3 4\n");
    auto back = parse_facets(serialize_facets(icosahedron()));
    CHECK(back.complex.f_vector().counts == icosahedron().f_vector().counts);
    CHECK(back.warnings.empty());

    CHECK_THROWS_AS(serialize_facets(SimplicialComplex::from_facets(0, {})),
                    std::invalid_argument);
    CHECK_THROWS_AS(serialize_facets(SimplicialComplex::from_facets(0, {Face{}})),
                    std::invalid_argument);
}

TEST_CASE("analyze produces the full report")
{
    auto result = analyze(cycle(5), {});
    CHECK_FALSE(result.assertion_violated);
    const json& rep = result.report;
    REQUIRE(rep.contains("summary"));
    CHECK(rep["summary"]["n"] == 5);
    CHECK(rep["summary"]["dim"] == 1);
    CHECK(rep["summary"]["f_vector"] == json::array({1, 5, 5}));
    CHECK(rep["summary"]["h_vector"] == json::array({1, 3, 1}));

    REQUIRE(rep.contains("flags"));
    CHECK(rep["flags"]["flag"] == true);
    CHECK(rep["flags"]["flag_no_square"] == true);
    CHECK(rep["flags"]["pseudomanifold"] == true);
    CHECK(rep["flags"]["orientable"] == true);
    CHECK(rep["flags"]["gorenstein"]["gf2"] == true);
    CHECK(rep["flags"]["gorenstein_star"]["gf2"] == true);

    REQUIRE(rep.contains("systole"));
    CHECK(rep["systole"]["length"] == 5);
    CHECK(rep["systole"]["cycle"].size() == 5);

    REQUIRE(rep.contains("betti"));
    REQUIRE(rep["betti"].is_array());
    CHECK(rep["betti"][0]["field"] == "gf2");
    CHECK(rep["betti"][0]["regularity"] == 2);
    // Rows are (i, j, beta) triples sorted by (i, j).
    const json& table = rep["betti"][0]["table"];
    REQUIRE(table.size() == 4);
    CHECK(table[0] == json{{"i", 0}, {"j", 0}, {"beta", 1}});
    CHECK(table[1] == json{{"i", 1}, {"j", 2}, {"beta", 5}});
    CHECK(table[2] == json{{"i", 2}, {"j", 3}, {"beta", 5}});
    CHECK(table[3] == json{{"i", 3}, {"j", 5}, {"beta", 1}});

    REQUIRE(rep.contains("np"));
    REQUIRE(rep["np"].is_array());
    CHECK(rep["np"].size() == 3);  // p = 2, 3, 4
    CHECK(rep["np"][0]["p"] == 2);
    CHECK(rep["np"][0]["via_cycles"]["satisfied"] == true);
    CHECK(rep["np"][0]["via_betti"][0]["satisfied"] == true);
    CHECK(rep["np"][1]["via_cycles"]["satisfied"] == false);
    CHECK(rep["np"][1]["via_cycles"]["cycle"].size() == 5);
    CHECK(rep["np"][1]["via_betti"][0]["witness"]["i"] == 3);
    CHECK(rep["np"][1]["via_betti"][0]["witness"]["j"] == 5);

    REQUIRE(rep.contains("bounds"));
    bool saw_thm1 = false, saw_thm2 = false;
    for (const json& b : rep["bounds"]) {
        if (b["name"] == "theorem1_p2") {
            saw_thm1 = true;
            CHECK(b["applicable"] == true);
            CHECK(b["holds"] == true);
        }
        if (b["name"] == "theorem2")
            saw_thm2 = true;
    }
    CHECK(saw_thm1);
    CHECK(saw_thm2);
}

TEST_CASE("analyze respects the section selection")
{
    AnalyzeOptions opts;
    opts.checks = {"summary", "systole"};
    auto result = analyze(icosahedron(), opts);
    CHECK(result.report.contains("summary"));
    CHECK(result.report.contains("systole"));
    CHECK_FALSE(result.report.contains("betti"));
    CHECK_FALSE(result.report.contains("np"));
    CHECK_FALSE(result.report.contains("bounds"));
    CHECK_FALSE(result.report.contains("flags"));

    AnalyzeOptions bad;
    bad.checks = {"bogus"};
    CHECK_THROWS_AS(analyze(cycle(4), bad), std::invalid_argument);
}

TEST_CASE("analyze marks sections skipped beyond the subset limit")
{
    AnalyzeOptions opts;
    opts.hochster_limit = 4;
    auto result = analyze(cycle(5), opts);
    const json& rep = result.report;
    CHECK(rep["betti"]["skipped"] == true);
    CHECK(rep["betti"]["reason"].get<std::string>().find("exceeds") !=
          std::string::npos);
    CHECK(rep["np"][0]["via_betti"]["skipped"] == true);
    // Summary and systole still run; theorem 4 does not apply in dim 1.
    CHECK(rep.contains("summary"));
    CHECK(rep["systole"]["length"] == 5);
    for (const json& b : rep["bounds"])
        CHECK(b["skipped"] == true);
    CHECK_FALSE(result.assertion_violated);
}

TEST_CASE("analyze with several fields deduplicates")
{
    AnalyzeOptions opts;
    opts.fields = {FieldSpec::gf2(), FieldSpec::rational(), FieldSpec::gf2()};
    opts.checks = {"betti"};
    auto result = analyze(rp2_6(), opts);
    const json& arr = result.report["betti"];
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["field"] == "gf2");
    CHECK(arr[1]["field"] == "q");
    CHECK(arr[0]["regularity"] == 3);
    CHECK(arr[1]["regularity"] == 2);
}

TEST_CASE("non-flag complexes analyze without the flag-only sections")
{
    auto result = analyze(rp2_6(), {});
    const json& rep = result.report;
    CHECK(rep["flags"]["flag"] == false);
    CHECK(rep["flags"]["nonface_witness"].is_array());
    CHECK(rep["systole"]["note"].get<std::string>().find("flag") !=
          std::string::npos);
    CHECK(rep["np"]["note"].is_string());
    // Only theorem 4 appears among the bounds, as an inapplicable report.
    REQUIRE(rep["bounds"].size() == 1);
    CHECK(rep["bounds"][0]["name"] == "theorem4");
    CHECK(rep["bounds"][0]["applicable"] == false);
    CHECK_FALSE(result.assertion_violated);
}

TEST_CASE("json rational encoding uses decimal strings")
{
    json j = rational_to_json(Rational(-22, 7));
    CHECK(j["num"] == "-22");
    CHECK(j["den"] == "7");
    // Large values stay exact.
    auto b = js_lower_bounds(8);
    json big = rational_to_json(b.closed_form);
    CHECK(big["num"].get<std::string>().size() > 20);

    auto rep = thm4_verdict(icosahedron());
    json enc = bound_report_to_json(rep, icosahedron());
    CHECK(enc["checks"][0]["observed"]["num"] == "20");
    CHECK(enc["checks"][0]["observed"]["den"] == "1");
    CHECK(enc["checks"][0]["bound"]["num"] == "25");
    CHECK(enc["checks"][0]["bound"]["den"] == "12");
    CHECK(enc["holds"] == true);
}

TEST_CASE("text rendering mentions every section")
{
    auto result = analyze(icosahedron(), {});
    std::string text = render_text(result.report);
    for (const char* needle :
         {"f-vector", "flag = true", "systole = 5", "betti over gf2",
          "regularity 3", "theorem1_p2", "theorem2: holds", "theorem4: holds",
          "N_2: via_cycles true"})
        CHECK(text.find(needle) != std::string::npos);
}
