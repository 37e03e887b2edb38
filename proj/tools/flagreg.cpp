// Command-line front end: generators, file ingestion, analyses, bound
// verdicts and the acceptance selftest.
//
// Exit codes: 0 success, 1 violated theorem assertion (or selftest failure),
// 2 usage or input errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <flagreg/flagreg.hpp>

namespace {

using flagreg::FieldSpec;
using flagreg::SimplicialComplex;

struct InputOptions {
    std::string file;
    std::string gen;
    std::vector<std::string> fields;
    int limit = 22;
    int threads = 0;

    void attach(CLI::App* cmd, bool with_fields = true)
    {
        cmd->add_option("file", file, "facet file (one facet per line; '#' comments)");
        cmd->add_option("--gen", gen,
                        "generator expression, e.g. cycle(5), icosahedron, "
                        "cone(cycle(6)), random_flag(8,0.4,17)");
        if (with_fields)
            cmd->add_option("--field", fields, "coefficient field: gf2, gf<p> or q")
                ->expected(-1);
        cmd->add_option("--limit", limit, "max ground size for Hochster enumeration")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--threads", threads, "worker threads (0 = automatic)");
    }

    SimplicialComplex load(std::vector<std::string>& warnings) const
    {
        if (file.empty() == gen.empty())
            throw CLI::ValidationError("input",
                                       "provide exactly one of <file> or --gen");
        if (!gen.empty())
            return flagreg::generate(gen);
        std::ifstream in(file);
        if (!in)
            throw std::runtime_error("cannot open '" + file + "'");
        auto parsed = flagreg::parse_facets(in);
        warnings = parsed.warnings;
        return parsed.complex;
    }

    std::vector<FieldSpec> field_specs() const
    {
        std::vector<FieldSpec> out;
        for (const std::string& f : fields)
            out.push_back(FieldSpec::parse(f));
        if (out.empty())
            out.push_back(FieldSpec::gf2());
        return out;
    }

    flagreg::HochsterOptions hochster() const
    {
        flagreg::HochsterOptions h;
        h.subset_limit = limit;
        h.threads = threads;
        return h;
    }
};

void print_warnings(const std::vector<std::string>& warnings)
{
    for (const std::string& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

std::string label_list(const SimplicialComplex& c, const std::vector<flagreg::Vertex>& vs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += c.label(vs[i]);
    }
    return out + "]";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact regularity / Betti toolkit for flag complexes and edge ideals"};
    app.require_subcommand(1);

    // generate ---------------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("generate", "emit a built-in complex as a facet file");
    std::string gen_expr, gen_out;
    cmd_gen->add_option("name", gen_expr, "generator expression")->required();
    cmd_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // analyze ----------------------------------------------------------------
    auto* cmd_analyze = app.add_subcommand("analyze", "full report on a complex");
    InputOptions in_analyze;
    in_analyze.attach(cmd_analyze);
    std::string checks_list;
    bool as_json = false;
    cmd_analyze->add_option("--checks", checks_list,
                            "comma-separated sections: summary,flags,systole,betti,np,bounds"
                            " (default all; 'structural' = summary,flags,systole)");
    cmd_analyze->add_flag("--json", as_json, "emit the JSON report");

    // betti / reg ------------------------------------------------------------
    auto* cmd_betti = app.add_subcommand("betti", "graded Betti table via Hochster's formula");
    InputOptions in_betti;
    in_betti.attach(cmd_betti);

    auto* cmd_reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
    InputOptions in_reg;
    in_reg.attach(cmd_reg);

    // np ----------------------------------------------------------------------
    auto* cmd_np = app.add_subcommand("np", "property N_p by both deciders");
    InputOptions in_np;
    in_np.attach(cmd_np);
    int np_p = 2;
    cmd_np->add_option("--p", np_p, "which N_p to decide (>= 2)")->required();

    // systole ------------------------------------------------------------------
    auto* cmd_sys = app.add_subcommand("systole", "shortest induced cycle length");
    InputOptions in_sys;
    in_sys.attach(cmd_sys, /*with_fields=*/false);

    // gorenstein ----------------------------------------------------------------
    auto* cmd_gor = app.add_subcommand("gorenstein", "Gorenstein and Gorenstein* tests");
    InputOptions in_gor;
    in_gor.attach(cmd_gor);

    // pm --------------------------------------------------------------------------
    auto* cmd_pm = app.add_subcommand("pm", "pseudomanifold and orientability checks");
    InputOptions in_pm;
    in_pm.attach(cmd_pm);

    // bounds -----------------------------------------------------------------------
    auto* cmd_bounds = app.add_subcommand("bounds", "theorem and lemma verdicts");
    InputOptions in_bounds;
    in_bounds.attach(cmd_bounds);
    int bounds_thm = 0;
    bool bounds_lemma3 = false;
    int bounds_k = 0;
    int bounds_p = 2;
    cmd_bounds->add_option("--thm", bounds_thm, "theorem number: 1, 2 or 4");
    cmd_bounds->add_flag("--lemma3", bounds_lemma3, "check the numerical lemma");
    cmd_bounds->add_option("--k", bounds_k, "k parameter for --lemma3 (>= 3)");
    cmd_bounds->add_option("--p", bounds_p, "p parameter for --thm 1 (default 2)");

    // selftest -------------------------------------------------------------------
    app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_gen->parsed()) {
            SimplicialComplex c = flagreg::generate(gen_expr);
            const std::string text = flagreg::serialize_facets(c);
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(gen_out);
                if (!out)
                    throw std::runtime_error("cannot write '" + gen_out + "'");
                out << text;
            }
            return 0;
        }

        if (cmd_analyze->parsed()) {
            std::vector<std::string> warnings;
            SimplicialComplex c = in_analyze.load(warnings);
            flagreg::AnalyzeOptions opts;
            opts.fields = in_analyze.field_specs();
            opts.hochster_limit = in_analyze.limit;
            opts.threads = in_analyze.threads;
            if (!checks_list.empty()) {
                std::stringstream ss(checks_list);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok == "all")
                        continue;  // empty set means everything
                    if (tok == "structural") {
                        opts.checks.insert({"summary", "flags", "systole"});
                        continue;
                    }
                    if (!tok.empty())
                        opts.checks.insert(tok);
                }
            }
            auto result = flagreg::analyze(c, opts);
            if (!warnings.empty())
                result.report["warnings"] = warnings;
            if (as_json)
                std::cout << result.report.dump(2) << "\n";
            else
                std::cout << flagreg::render_text(result.report);
            return result.assertion_violated ? 1 : 0;
        }

        if (cmd_betti->parsed() || cmd_reg->parsed()) {
            const InputOptions& in = cmd_betti->parsed() ? in_betti : in_reg;
            std::vector<std::string> warnings;
            SimplicialComplex c = in.load(warnings);
            print_warnings(warnings);
            for (const FieldSpec& f : in.field_specs()) {
                if (cmd_reg->parsed()) {
                    std::cout << "regularity over " << f.name() << " = "
                              << flagreg::regularity(c, f, in.hochster()) << "\n";
                    continue;
                }
                flagreg::BettiTable t = flagreg::hochster_table(c, f, in.hochster());
                std::cout << "betti over " << f.name() << ":\n";
                for (const auto& [ij, beta] : t.entries)
                    std::cout << "  beta(" << ij.first << "," << ij.second
                              << ") = " << beta << "\n";
                std::cout << "regularity = " << t.regularity() << "\n";
            }
            return 0;
        }

        if (cmd_np->parsed()) {
            std::vector<std::string> warnings;
            SimplicialComplex c = in_np.load(warnings);
            print_warnings(warnings);
            auto cyc = flagreg::np_via_cycles(c, np_p);
            std::cout << "N_" << np_p << " via cycles: "
                      << (cyc.satisfied ? "satisfied" : "fails");
            if (cyc.cycle_witness)
                std::cout << " (induced " << cyc.cycle_witness->size() << "-cycle "
                          << label_list(c, *cyc.cycle_witness) << ")";
            std::cout << "\n";
            if (c.ground_size() <= in_np.limit) {
                for (const FieldSpec& f : in_np.field_specs()) {
                    auto bet = flagreg::np_via_betti(c, np_p, f, in_np.hochster());
                    std::cout << "N_" << np_p << " via betti over " << f.name() << ": "
                              << (bet.satisfied ? "satisfied" : "fails");
                    if (bet.betti_witness)
                        std::cout << " (beta(" << bet.betti_witness->first << ","
                                  << bet.betti_witness->second << ") != 0)";
                    std::cout << "\n";
                }
            } else {
                std::cout << "betti route skipped: ground size " << c.ground_size()
                          << " exceeds limit " << in_np.limit << "\n";
            }
            return 0;
        }

        if (cmd_sys->parsed()) {
            std::vector<std::string> warnings;
            SimplicialComplex c = in_sys.load(warnings);
            print_warnings(warnings);
            auto hole = flagreg::shortest_induced_cycle(c);
            if (hole)
                std::cout << "systole = " << hole->size() << " via "
                          << label_list(c, *hole) << "\n";
            else
                std::cout << "systole = none (no induced cycle of length >= 4)\n";
            return 0;
        }

        if (cmd_gor->parsed()) {
            std::vector<std::string> warnings;
            SimplicialComplex c = in_gor.load(warnings);
            print_warnings(warnings);
            auto core = flagreg::core_decompose(c);
            if (!core.cone_vertices.empty())
                std::cout << "cone vertices: "
                          << label_list(c, core.cone_vertices.vertices()) << "\n";
            for (const FieldSpec& f : in_gor.field_specs()) {
                auto star = flagreg::is_gorenstein_star(c, f);
                std::cout << "gorenstein* over " << f.name() << ": "
                          << (star.holds ? "yes" : "no");
                if (star.witness)
                    std::cout << " (link of " << label_list(c, star.witness->vertices())
                              << " is not a homology sphere)";
                std::cout << "\n";
                std::cout << "gorenstein over " << f.name() << ": "
                          << (flagreg::is_gorenstein(c, f) ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (cmd_pm->parsed()) {
            std::vector<std::string> warnings;
            SimplicialComplex c = in_pm.load(warnings);
            print_warnings(warnings);
            auto pm = flagreg::is_closed_pseudomanifold(c);
            std::cout << "closed pseudomanifold: " << (pm.holds ? "yes" : "no");
            if (!pm.holds)
                std::cout << " (" << pm.reason << ")";
            std::cout << "\n";
            if (!pm.holds)
                return 0;
            auto o = flagreg::orientation(c);
            std::cout << "orientable (sign propagation): " << (o ? "yes" : "no") << "\n";
            std::cout << "paper orientable (labeling parity): "
                      << (flagreg::paper_orientable(c) ? "yes" : "no") << "\n";
            for (const FieldSpec& f : in_pm.field_specs()) {
                try {
                    bool ok = flagreg::top_cycle_check(c, f);
                    std::cout << "top cycle over " << f.name() << ": "
                              << (ok ? "vanishing boundary" : "nonzero boundary") << "\n";
                } catch (const std::domain_error& e) {
                    std::cout << "top cycle over " << f.name() << ": " << e.what()
                              << "\n";
                }
            }
            return 0;
        }

        if (cmd_bounds->parsed()) {
            if (bounds_lemma3 == (bounds_thm != 0))
                throw CLI::ValidationError("bounds",
                                           "choose exactly one of --thm or --lemma3");
            flagreg::BoundReport report;
            SimplicialComplex c;
            if (bounds_lemma3) {
                if (bounds_k < 3)
                    throw CLI::ValidationError("bounds", "--lemma3 needs --k >= 3");
                report = flagreg::lemma3_check(bounds_k);
            } else {
                std::vector<std::string> warnings;
                c = in_bounds.load(warnings);
                print_warnings(warnings);
                const FieldSpec f = in_bounds.field_specs().front();
                if (bounds_thm == 1)
                    report = flagreg::thm1_verdict(c, bounds_p, f, in_bounds.hochster());
                else if (bounds_thm == 2)
                    report = flagreg::thm2_verdict(c, f, in_bounds.hochster());
                else if (bounds_thm == 4)
                    report = flagreg::thm4_verdict(c);
                else
                    throw CLI::ValidationError("bounds", "--thm must be 1, 2 or 4");
            }
            flagreg::json j;
            j["bounds"] = flagreg::json::array(
                {flagreg::bound_report_to_json(report, c)});
            std::cout << flagreg::render_text(j);
            return report.ok() ? 0 : 1;
        }

        // selftest
        return flagreg::run_acceptance(std::cout) == 0 ? 0 : 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const flagreg::enumeration_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
