// Numeric bounds and theorem verdicts: the logarithmic and floor bounds,
// Dehn-Sommerville symmetry, half h-vectors, the facet-per-face average, the
// exact product lemma, the doubly exponential recursion and the three
// theorem report builders.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <flagreg/flagreg.hpp>

#include "oracles.hpp"

using namespace flagreg;
using Catch::Matchers::WithinAbs;

TEST_CASE("logarithmic regularity bound")
{
    CHECK_THAT(dhs_bound(12, 2), WithinAbs(4.71191944144785, 1e-12));
    CHECK_THAT(dhs_bound(5, 2), WithinAbs(3.75647079736603, 1e-12));
    CHECK_THAT(dhs_bound(12, 3), WithinAbs(3.892789260714372, 1e-12));
    CHECK_THAT(dhs_bound(6, 2), WithinAbs(3.95544864408182, 1e-12));
    CHECK_THROWS_AS(dhs_bound(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(dhs_bound(5, 1), std::invalid_argument);
}

TEST_CASE("floor regularity bound")
{
    CHECK(aci_bound(12, 2) == 9);
    CHECK(aci_bound(5, 2) == 3);
    CHECK(aci_bound(12, 3) == 7);
    CHECK(aci_bound(24, 2) == 17);
    CHECK(aci_bound(100, 5) == 33);
    CHECK(aci_bound(3, 7) == 1);
    CHECK_THROWS_AS(aci_bound(0, 1), std::invalid_argument);
}

TEST_CASE("dehn-sommerville symmetry")
{
    CHECK(dehn_sommerville(h_vector(cross_polytope_boundary(3).f_vector())));
    CHECK(dehn_sommerville(h_vector(icosahedron().f_vector())));
    CHECK(dehn_sommerville(h_vector(cycle(7).f_vector())));
    CHECK(dehn_sommerville(h_vector(simplex_boundary(4).f_vector())));
    // rp2 is a pseudomanifold but not Eulerian: h = (1, 3, 6, 0) fails.
    CHECK_FALSE(dehn_sommerville(h_vector(rp2_6().f_vector())));
    auto path3 = SimplicialComplex::from_facets(3, {Face{0, 1}, Face{1, 2}});
    CHECK_FALSE(dehn_sommerville(h_vector(path3.f_vector())));
}

TEST_CASE("half h-vector")
{
    // Odd d: plain prefix.
    auto h_octa = h_vector(cross_polytope_boundary(3).f_vector());
    auto hh = hhat(h_octa, 3);
    REQUIRE(hh.entries.size() == 2);
    CHECK(hh.entries[0] == Rational(1));
    CHECK(hh.entries[1] == Rational(3));

    auto hh_ico = hhat(h_vector(icosahedron().f_vector()), 3);
    CHECK(hh_ico.entries == std::vector<Rational>{Rational(1), Rational(9)});

    // Even d: the middle entry is halved (and can be a half-integer).
    auto h_c4 = h_vector(cycle(4).f_vector());  // (1, 2, 1), d = 2
    auto hh_c4 = hhat(h_c4, 2);
    REQUIRE(hh_c4.entries.size() == 2);
    CHECK(hh_c4.entries[0] == Rational(1));
    CHECK(hh_c4.entries[1] == Rational(1));

    auto h_c5 = h_vector(cycle(5).f_vector());  // (1, 3, 1), d = 2
    auto hh_c5 = hhat(h_c5, 2);
    CHECK(hh_c5.entries[1] == Rational(3, 2));

    CHECK_THROWS_AS(hhat(h_octa, 4), std::invalid_argument);  // wrong length
    auto h_path = h_vector(SimplicialComplex::from_facets(
                               3, {Face{0, 1}, Face{1, 2}}).f_vector());
    CHECK_THROWS_AS(hhat(h_path, 2), std::domain_error);  // symmetry fails
}

TEST_CASE("average facets per codimension-3 face")
{
    CHECK(face_average_A(icosahedron()) == Rational(5));
    CHECK(face_average_A(cross_polytope_boundary(3)) == Rational(4));
    // Hollow tetrahedron: every vertex lies in three of the four facets.
    CHECK(face_average_A(simplex_boundary(3)) == Rational(3));
    // One dimension up (d = 4): every edge of the 4-simplex boundary lies in
    // three facets.
    CHECK(face_average_A(simplex_boundary(4)) == Rational(3));

    CHECK_THROWS_AS(face_average_A(cycle(5)), std::invalid_argument);  // dim 1
    CHECK_THROWS_AS(face_average_A(SimplicialComplex::from_facets(
                        4, {Face{0, 1, 2}, Face{2, 3}})),
                    std::invalid_argument);  // not pure
}

TEST_CASE("averaging case bound")
{
    CHECK(average_bound(3) == Rational(6));
    CHECK(average_bound(4) == Rational(6));
    CHECK(average_bound(5) == Rational(5));
    CHECK(average_bound(6) == Rational(5));
    CHECK(average_bound(7) == Rational(14, 3));
    CHECK_THROWS_AS(average_bound(2), std::invalid_argument);
}

TEST_CASE("exact product lemma")
{
    // The inequality prod (k-i)^(2^i) < 12^(2^(k-3)) is true exactly for
    // 3 <= k <= 6.  From k = 7 on the product wins (at k = 7 the ratio is
    // already 7*6^2*5^4*4^8*3^16 / 12^16 = 2.403...), and the report must
    // say so: exact verification includes refutation.
    for (int k = 3; k <= 16; ++k) {
        auto r = lemma3_check(k);
        INFO("k = " << k);
        CHECK(r.applicable);
        REQUIRE(r.holds.has_value());
        CHECK(*r.holds == (k <= 6));
        CHECK(r.ok() == (k <= 6));
        if (k >= 7) {
            REQUIRE_FALSE(r.notes.empty());
            CHECK(r.notes.back().find("refutes") != std::string::npos);
        }
    }
    // The first counterexample, in full.
    auto r7 = lemma3_check(7);
    CHECK(*r7.checks[0].observed ==
          Rational(Integer(7) * 36 * 625 * 65536 * 43046721));
    CHECK(*r7.checks[0].bound == Rational(Integer(429981696) * 429981696));
    auto r3 = lemma3_check(3);
    CHECK(*r3.checks[0].observed == Rational(3));
    CHECK(*r3.checks[0].bound == Rational(12));
    auto r4 = lemma3_check(4);
    CHECK(*r4.checks[0].observed == Rational(36));
    CHECK(*r4.checks[0].bound == Rational(144));
    auto r5 = lemma3_check(5);
    CHECK(*r5.checks[0].observed == Rational(6480));
    CHECK(*r5.checks[0].bound == Rational(20736));
    auto r6 = lemma3_check(6);
    CHECK(*r6.checks[0].observed == Rational(251942400));
    CHECK(*r6.checks[0].bound == Rational(429981696));

    CHECK_THROWS_AS(lemma3_check(2), std::invalid_argument);
}

TEST_CASE("doubly exponential lower bounds")
{
    auto b2 = js_lower_bounds(2);
    CHECK(b2.recursion == Rational(25, 3));
    CHECK(b2.closed_form == Rational(25, 3));
    CHECK(b2.simplified == Rational(25, 12));

    auto b3 = js_lower_bounds(3);
    CHECK(b3.recursion == Rational(625, 36));
    CHECK(b3.simplified == Rational(625, 144));

    auto b4 = js_lower_bounds(4);
    CHECK(b4.recursion == Rational(78125, 1296));

    // The recursion equals the closed form (checked internally too).  The
    // simplified bound is the smaller of the two only while the product
    // inequality of lemma3_check(d+1) holds, i.e. for d <= 5; afterwards
    // the roles flip, and they are never equal.
    for (int d = 2; d <= 12; ++d) {
        auto b = js_lower_bounds(d);
        INFO("d = " << d);
        CHECK(b.recursion == b.closed_form);
        CHECK((b.closed_form > b.simplified) == (d <= 5));
        CHECK(b.closed_form != b.simplified);
    }
    CHECK_THROWS_AS(js_lower_bounds(1), std::invalid_argument);
}

TEST_CASE("exact and real comparison checks")
{
    auto e = exact_check("x", "<", Rational(3), Rational(4));
    CHECK(e.holds);
    CHECK_FALSE(e.inconclusive);
    CHECK_FALSE(exact_check("x", "<", Rational(4), Rational(4)).holds);
    CHECK(exact_check("x", "<=", Rational(4), Rational(4)).holds);
    CHECK(exact_check("x", ">", Rational(5), Rational(4)).holds);
    CHECK_THROWS_AS(exact_check("x", "!=", Rational(1), Rational(2)),
                    std::invalid_argument);

    auto r = real_check("y", "<", 1.0, 2.0);
    CHECK(r.holds);
    CHECK_FALSE(r.inconclusive);
    auto tie = real_check("y", "<", 2.0, 2.0 + 1e-12);
    CHECK(tie.inconclusive);
    CHECK_FALSE(tie.holds);
    // An inconclusive check does not count against the report.
    BoundReport rep;
    rep.applicable = true;
    rep.checks.push_back(tie);
    rep.finalize();
    REQUIRE(rep.holds.has_value());
    CHECK(*rep.holds);
}

TEST_CASE("regularity bound report for N_p complexes")
{
    auto r = thm1_verdict(cycle(5), 2, FieldSpec::gf2());
    CHECK(r.name == "theorem1_p2");
    CHECK(r.applicable);
    REQUIRE(r.holds.has_value());
    CHECK(*r.holds);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].holds);                       // 2 < 3.756...
    CHECK(*r.checks[1].observed == Rational(2));    // reg
    CHECK(*r.checks[1].bound == Rational(3));       // 2*floor(5/3)+1

    // N_3 fails on the pentagon: inapplicable, witness recorded, ok().
    auto r3 = thm1_verdict(cycle(5), 3, FieldSpec::gf2());
    CHECK_FALSE(r3.applicable);
    CHECK_FALSE(r3.holds.has_value());
    REQUIRE(r3.witness_cycle.has_value());
    CHECK(r3.witness_cycle->size() == 5);
    CHECK(r3.ok());

    auto ri = thm1_verdict(icosahedron(), 2, FieldSpec::gf2());
    CHECK(ri.applicable);
    CHECK(*ri.holds);
    CHECK(*ri.checks[1].bound == Rational(9));

    CHECK_THROWS_AS(thm1_verdict(rp2_6(), 2, FieldSpec::gf2()), std::invalid_argument);
}

TEST_CASE("gorenstein regularity report")
{
    // Icosahedron: all hypotheses hold with N_2; reg 3 <= 4; the averaging
    // witness is a vertex whose link is the pentagonal ring.
    auto r = thm2_verdict(icosahedron(), FieldSpec::gf2());
    CHECK(r.applicable);
    REQUIRE(r.holds.has_value());
    CHECK(*r.holds);
    REQUIRE(r.witness_face.has_value());
    CHECK(r.witness_face->size() == 1);
    REQUIRE(r.witness_cycle.has_value());
    CHECK(r.witness_cycle->size() == 5);
    bool found_avg = false;
    for (const auto& ch : r.checks)
        if (ch.observed && *ch.observed == Rational(5) && *ch.bound == Rational(6))
            found_avg = true;
    CHECK(found_avg);

    // Octahedron: Gorenstein but N_2 fails (squares everywhere), so nothing
    // is asserted; the averaging numbers are still reported (A = 4 < 6).
    auto ro = thm2_verdict(cross_polytope_boundary(3), FieldSpec::gf2());
    CHECK_FALSE(ro.applicable);
    CHECK_FALSE(ro.holds.has_value());
    CHECK(ro.ok());
    bool found_a4 = false;
    for (const auto& ch : ro.checks)
        if (ch.observed && *ch.observed == Rational(4))
            found_a4 = true;
    CHECK(found_a4);

    // Hexagon: Gorenstein* with N_3, so the strong bound reg <= 2 applies.
    auto rh = thm2_verdict(cycle(6), FieldSpec::gf2());
    CHECK(rh.applicable);
    CHECK(*rh.holds);
    bool saw_strong = false;
    for (const auto& ch : rh.checks)
        if (ch.label.find("N_3") != std::string::npos) {
            saw_strong = true;
            CHECK(*ch.bound == Rational(2));
            CHECK(ch.holds);
        }
    CHECK(saw_strong);

    // The three-edge path is not Gorenstein: hypotheses unmet, nothing
    // asserted.  (The two-edge path would not do -- it is a cone, hence
    // Gorenstein, and the theorem applies to it.)
    auto path4 =
        SimplicialComplex::from_facets(4, {Face{0, 1}, Face{1, 2}, Face{2, 3}});
    auto rp = thm2_verdict(path4, FieldSpec::gf2());
    CHECK_FALSE(rp.applicable);
    CHECK(rp.ok());
}

TEST_CASE("doubly exponential face bound report")
{
    auto r = thm4_verdict(icosahedron());
    CHECK(r.applicable);
    REQUIRE(r.holds.has_value());
    CHECK(*r.holds);
    REQUIRE(r.checks.size() == 3);
    CHECK(*r.checks[0].observed == Rational(20));
    CHECK(*r.checks[0].bound == Rational(25, 12));
    CHECK(*r.checks[1].bound == Rational(25, 3));
    CHECK(*r.checks[2].observed == Rational(144));  // f_0^2

    // Octahedron: flag but has squares; hypotheses unmet.
    auto ro = thm4_verdict(cross_polytope_boundary(3));
    CHECK_FALSE(ro.applicable);
    CHECK(ro.ok());
    REQUIRE(ro.witness_cycle.has_value());
    CHECK(ro.witness_cycle->size() == 4);

    // Cone over a pentagon: flag-no-square but the rim edges are free.
    auto rc = thm4_verdict(cone(cycle(5)));
    CHECK_FALSE(rc.applicable);
    bool free_ridge_hyp = false;
    for (const auto& [label, ok] : rc.hypotheses)
        if (label == "no free ridges")
            free_ridge_hyp = !ok;
    CHECK(free_ridge_hyp);

    CHECK_THROWS_AS(thm4_verdict(cycle(5)), std::invalid_argument);  // dim 1
}
