#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagreg/betti.hpp"
#include "flagreg/bounds.hpp"
#include "flagreg/catalog.hpp"
#include "flagreg/complex.hpp"
#include "flagreg/field.hpp"
#include "flagreg/structure.hpp"

namespace flagreg {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON encoders.  Keys are lower_snake_case throughout; rationals are
// {"num","den"} with decimal-string values (they exceed 64-bit range).

inline json rational_to_json(const Rational& r)
{
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline json face_to_json(const SimplicialComplex& c, const Face& f)
{
    json a = json::array();
    for (Vertex v : f.vertices())
        a.push_back(c.label(v));
    return a;
}

inline json cycle_to_json(const SimplicialComplex& c, const std::vector<Vertex>& cyc)
{
    json a = json::array();
    for (Vertex v : cyc)
        a.push_back(c.label(v));
    return a;
}

inline json betti_table_to_json(const BettiTable& t)
{
    json rows = json::array();
    for (const auto& [ij, beta] : t.entries)  // map order = sorted by (i, j)
        if (beta != 0)
            rows.push_back(json{{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    return rows;
}

inline json bound_check_to_json(const BoundCheck& c)
{
    json j;
    j["label"] = c.label;
    j["relation"] = c.relation;
    if (c.observed)
        j["observed"] = rational_to_json(*c.observed);
    if (c.bound)
        j["bound"] = rational_to_json(*c.bound);
    if (c.observed_real)
        j["observed_real"] = *c.observed_real;
    if (c.bound_real)
        j["bound_real"] = *c.bound_real;
    j["holds"] = c.holds;
    if (c.inconclusive)
        j["inconclusive"] = true;
    return j;
}

inline json bound_report_to_json(const BoundReport& r, const SimplicialComplex& c)
{
    json j;
    j["name"] = r.name;
    json hyp = json::array();
    for (const auto& [label, ok] : r.hypotheses)
        hyp.push_back(json{{"label", label}, {"holds", ok}});
    j["hypotheses_checked"] = hyp;
    j["applicable"] = r.applicable;
    json checks = json::array();
    for (const BoundCheck& ch : r.checks)
        checks.push_back(bound_check_to_json(ch));
    j["checks"] = checks;
    if (r.holds)
        j["holds"] = *r.holds;
    if (r.witness_face)
        j["witness_face"] = face_to_json(c, *r.witness_face);
    if (r.witness_cycle)
        j["witness_cycle"] = cycle_to_json(c, *r.witness_cycle);
    if (!r.notes.empty())
        j["notes"] = r.notes;
    return j;
}

// ---------------------------------------------------------------------------
// Report assembly.

struct AnalyzeOptions {
    std::vector<FieldSpec> fields = {FieldSpec::gf2()};
    // Sections to emit; empty means all of: summary flags systole betti np bounds.
    std::set<std::string> checks;
    int hochster_limit = 22;
    int threads = 0;
};

struct AnalysisResult {
    json report;
    bool assertion_violated = false;
};

namespace detail {

inline const std::set<std::string>& known_sections()
{
    static const std::set<std::string> s{"summary", "flags", "systole",
                                         "betti",   "np",    "bounds"};
    return s;
}

}  // namespace detail

inline AnalysisResult analyze(const SimplicialComplex& c, AnalyzeOptions opts = {})
{
    if (c.is_void())
        throw std::invalid_argument("analyze: void complex");
    for (const std::string& s : opts.checks)
        if (!detail::known_sections().count(s))
            throw std::invalid_argument("analyze: unknown check '" + s + "'");
    auto wants = [&](const std::string& s) {
        return opts.checks.empty() || opts.checks.count(s) > 0;
    };
    // De-duplicate fields, preserving order.
    std::vector<FieldSpec> fields;
    for (const FieldSpec& f : opts.fields) {
        bool dup = false;
        for (const FieldSpec& g : fields)
            dup = dup || g == f;
        if (!dup)
            fields.push_back(f);
    }
    if (fields.empty())
        fields.push_back(FieldSpec::gf2());

    HochsterOptions hopts;
    hopts.subset_limit = opts.hochster_limit;
    hopts.threads = opts.threads;
    const bool within_limit = c.ground_size() <= opts.hochster_limit;
    const std::string limit_reason =
        "ground size " + std::to_string(c.ground_size()) + " exceeds hochster limit " +
        std::to_string(opts.hochster_limit);

    AnalysisResult out;
    json& rep = out.report;

    const auto flag = c.is_flag();

    if (wants("summary")) {
        json s;
        s["n"] = c.ground_size();
        s["dim"] = c.dim();
        json fv = json::array();
        const FVector f = c.f_vector();
        for (int k = -1; k <= f.dim(); ++k)
            fv.push_back(f.at(k));
        s["f_vector"] = fv;
        json hv = json::array();
        const HVector h = h_vector(f);
        for (int i = 0; i <= h.d(); ++i)
            hv.push_back(h.at(i));
        s["h_vector"] = hv;
        if (!c.labels().empty())
            s["labels"] = c.labels();
        rep["summary"] = s;
    }

    if (wants("flags")) {
        json fl;
        fl["flag"] = flag.flag;
        if (flag.witness)
            fl["nonface_witness"] = face_to_json(c, *flag.witness);
        const auto fns = is_flag_no_square(c);
        fl["flag_no_square"] = fns.holds;
        if (fns.square_witness)
            fl["square_witness"] = cycle_to_json(c, *fns.square_witness);
        const auto pm = is_closed_pseudomanifold(c);
        fl["pseudomanifold"] = pm.holds;
        if (!pm.holds)
            fl["pseudomanifold_reason"] = pm.reason;
        if (pm.holds) {
            fl["orientable"] = orientation(c).has_value();
            fl["paper_orientable"] = paper_orientable(c);
        }
        json gor, gor_star;
        for (const FieldSpec& f : fields) {
            gor[f.name()] = is_gorenstein(c, f);
            gor_star[f.name()] = is_gorenstein_star(c, f).holds;
        }
        fl["gorenstein"] = gor;
        fl["gorenstein_star"] = gor_star;
        rep["flags"] = fl;
    }

    if (wants("systole")) {
        json s;
        if (flag.flag) {
            auto hole = shortest_induced_cycle(c);
            s["length"] = hole ? json(hole->size()) : json(nullptr);
            if (hole)
                s["cycle"] = cycle_to_json(c, *hole);
        } else {
            s["note"] = "systole requires a flag complex";
        }
        rep["systole"] = s;
    }

    if (wants("betti")) {
        if (!within_limit) {
            rep["betti"] = json{{"skipped", true}, {"reason", limit_reason}};
        } else {
            json arr = json::array();
            for (const FieldSpec& f : fields) {
                BettiTable t = hochster_table(c, f, hopts);
                json e;
                e["field"] = f.name();
                e["table"] = betti_table_to_json(t);
                e["regularity"] = t.regularity();
                arr.push_back(e);
            }
            rep["betti"] = arr;
        }
    }

    if (wants("np")) {
        if (!flag.flag) {
            rep["np"] = json{{"note", "N_p via cycles requires a flag complex"}};
        } else {
            json arr = json::array();
            for (int p = 2; p <= 4; ++p) {
                json e;
                e["p"] = p;
                NpVerdict cyc = np_via_cycles(c, p);
                json via_c;
                via_c["satisfied"] = cyc.satisfied;
                if (cyc.cycle_witness)
                    via_c["cycle"] = cycle_to_json(c, *cyc.cycle_witness);
                e["via_cycles"] = via_c;
                if (within_limit) {
                    json vb = json::array();
                    for (const FieldSpec& f : fields) {
                        NpVerdict bet = np_via_betti(c, p, f, hopts);
                        json v;
                        v["field"] = f.name();
                        v["satisfied"] = bet.satisfied;
                        if (bet.betti_witness)
                            v["witness"] = json{{"i", bet.betti_witness->first},
                                                {"j", bet.betti_witness->second}};
                        vb.push_back(v);
                    }
                    e["via_betti"] = vb;
                } else {
                    e["via_betti"] = json{{"skipped", true}, {"reason", limit_reason}};
                }
                arr.push_back(e);
            }
            rep["np"] = arr;
        }
    }

    if (wants("bounds")) {
        json arr = json::array();
        auto add = [&](const BoundReport& r) {
            arr.push_back(bound_report_to_json(r, c));
            if (!r.ok())
                out.assertion_violated = true;
        };
        if (flag.flag) {
            if (within_limit) {
                for (int p : {2, 3})
                    add(thm1_verdict(c, p, fields.front(), hopts));
                for (const FieldSpec& f : fields)
                    add(thm2_verdict(c, f, hopts));
            } else {
                arr.push_back(json{{"name", "theorem1"},
                                   {"skipped", true},
                                   {"reason", limit_reason}});
                arr.push_back(json{{"name", "theorem2"},
                                   {"skipped", true},
                                   {"reason", limit_reason}});
            }
        }
        if (!c.is_void() && c.dim() >= 2)
            add(thm4_verdict(c));
        rep["bounds"] = arr;
    }

    return out;
}

// ---------------------------------------------------------------------------
// Plain-text rendering of a report (the default CLI output).

inline std::string render_text(const json& rep)
{
    std::string out;
    auto line = [&](const std::string& s) { out += s + "\n"; };
    if (rep.contains("summary")) {
        const json& s = rep["summary"];
        line("n = " + s["n"].dump() + ", dim = " + s["dim"].dump());
        line("f-vector = " + s["f_vector"].dump());
        line("h-vector = " + s["h_vector"].dump());
    }
    if (rep.contains("flags")) {
        const json& f = rep["flags"];
        std::string fl = "flag = " + f["flag"].dump();
        if (f.contains("nonface_witness"))
            fl += " (minimal nonface " + f["nonface_witness"].dump() + ")";
        line(fl);
        std::string fns = "flag_no_square = " + f["flag_no_square"].dump();
        if (f.contains("square_witness"))
            fns += " (induced 4-cycle " + f["square_witness"].dump() + ")";
        line(fns);
        std::string pm = "pseudomanifold = " + f["pseudomanifold"].dump();
        if (f.contains("pseudomanifold_reason"))
            pm += " (" + f["pseudomanifold_reason"].get<std::string>() + ")";
        if (f.contains("orientable"))
            pm += ", orientable = " + f["orientable"].dump() +
                  ", paper_orientable = " + f["paper_orientable"].dump();
        line(pm);
        line("gorenstein = " + f["gorenstein"].dump() +
             ", gorenstein_star = " + f["gorenstein_star"].dump());
    }
    if (rep.contains("systole")) {
        const json& s = rep["systole"];
        if (s.contains("note"))
            line("systole: " + s["note"].get<std::string>());
        else if (s["length"].is_null())
            line("systole = none (no induced cycle of length >= 4)");
        else
            line("systole = " + s["length"].dump() + " via " + s["cycle"].dump());
    }
    if (rep.contains("betti")) {
        const json& b = rep["betti"];
        if (b.is_object() && b.contains("skipped")) {
            line("betti: skipped (" + b["reason"].get<std::string>() + ")");
        } else {
            for (const json& e : b) {
                line("betti over " + e["field"].get<std::string>() +
                     " (regularity " + e["regularity"].dump() + "):");
                for (const json& row : e["table"])
                    line("  beta(" + row["i"].dump() + "," + row["j"].dump() +
                         ") = " + row["beta"].dump());
            }
        }
    }
    if (rep.contains("np")) {
        const json& np = rep["np"];
        if (np.is_object() && np.contains("note")) {
            line("np: " + np["note"].get<std::string>());
        } else {
            for (const json& e : np) {
                std::string s = "N_" + e["p"].dump() + ": via_cycles " +
                                e["via_cycles"]["satisfied"].dump();
                if (e["via_cycles"].contains("cycle"))
                    s += " (cycle " + e["via_cycles"]["cycle"].dump() + ")";
                if (e["via_betti"].is_array()) {
                    for (const json& v : e["via_betti"]) {
                        s += ", via_betti[" + v["field"].get<std::string>() + "] " +
                             v["satisfied"].dump();
                        if (v.contains("witness"))
                            s += " (beta at i=" + v["witness"]["i"].dump() +
                                 ",j=" + v["witness"]["j"].dump() + ")";
                    }
                }
                line(s);
            }
        }
    }
    if (rep.contains("bounds")) {
        for (const json& r : rep["bounds"]) {
            if (r.contains("skipped")) {
                line(r["name"].get<std::string>() + ": skipped (" +
                     r["reason"].get<std::string>() + ")");
                continue;
            }
            std::string s = r["name"].get<std::string>() + ": ";
            if (r.contains("holds"))
                s += r["holds"].get<bool>() ? "holds" : "VIOLATED";
            else
                s += "hypotheses unmet; nothing asserted";
            line(s);
            for (const json& h : r["hypotheses_checked"])
                line("  hypothesis: " + h["label"].get<std::string>() + " = " +
                     h["holds"].dump());
            for (const json& ch : r["checks"]) {
                std::string cs = "  check: " + ch["label"].get<std::string>();
                if (ch.contains("observed"))
                    cs += "  [" + ch["observed"]["num"].get<std::string>() +
                          (ch["observed"]["den"].get<std::string>() == "1"
                               ? ""
                               : "/" + ch["observed"]["den"].get<std::string>()) +
                          " vs " + ch["bound"]["num"].get<std::string>() +
                          (ch["bound"]["den"].get<std::string>() == "1"
                               ? ""
                               : "/" + ch["bound"]["den"].get<std::string>()) +
                          "]";
                if (ch.contains("observed_real"))
                    cs += "  [" + std::to_string(ch["observed_real"].get<double>()) +
                          " vs " + std::to_string(ch["bound_real"].get<double>()) + "]";
                cs += ch.contains("inconclusive") ? " inconclusive"
                                                  : (ch["holds"].get<bool>() ? " ok"
                                                                             : " FAIL");
                line(cs);
            }
            if (r.contains("witness_face"))
                line("  witness face: " + r["witness_face"].dump());
            if (r.contains("witness_cycle"))
                line("  witness cycle: " + r["witness_cycle"].dump());
            if (r.contains("notes"))
                for (const json& n : r["notes"])
                    line("  note: " + n.get<std::string>());
        }
    }
    if (rep.contains("warnings"))
        for (const json& w : rep["warnings"])
            line("warning: " + w.get<std::string>());
    return out;
}

}  // namespace flagreg
