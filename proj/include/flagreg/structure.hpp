#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagreg/betti.hpp"
#include "flagreg/complex.hpp"
#include "flagreg/field.hpp"
#include "flagreg/homology.hpp"

namespace flagreg {

/**
 * Flag-no-square test: flag and no induced 4-cycle in the 1-skeleton
 * (equivalently, every induced cycle has length at least 5).  Exactly one
 * witness field is populated on failure.
 */
struct FlagNoSquareVerdict {
    bool holds = false;
    std::optional<Face> nonface_witness;              // minimal nonface, size >= 3
    std::optional<std::vector<Vertex>> square_witness;  // induced 4-cycle
};

inline FlagNoSquareVerdict is_flag_no_square(const SimplicialComplex& c)
{
    FlagNoSquareVerdict v;
    auto flag = c.is_flag();
    if (!flag.flag) {
        v.nonface_witness = flag.witness;
        return v;
    }
    auto hole = c.one_skeleton().shortest_hole();
    if (hole && hole->size() == 4) {
        v.square_witness = hole;
        return v;
    }
    v.holds = true;
    return v;
}

/// Ridges ((dim-1)-faces) of a pure complex contained in exactly one facet.
inline std::vector<Face> free_ridges(const SimplicialComplex& c)
{
    if (c.is_void())
        throw std::invalid_argument("free_ridges: void complex");
    if (!c.is_pure())
        throw std::invalid_argument("free_ridges: complex is not pure");
    const int d = c.dim();
    std::vector<Face> out;
    if (d < 0)
        return out;
    for (const Face& r : c.faces_of_dim(d - 1)) {
        int count = 0;
        for (const Face& f : c.facets())
            if (r.is_subset_of(f))
                ++count;
        if (count == 1)
            out.push_back(r);
    }
    return out;
}

/**
 * Closed pseudomanifold: pure, dimension >= 0, every ridge lies in exactly
 * two facets, and the facet-ridge adjacency graph is connected.
 */
struct PseudomanifoldVerdict {
    bool holds = false;
    std::string reason;  // set when holds is false
};

inline PseudomanifoldVerdict is_closed_pseudomanifold(const SimplicialComplex& c)
{
    if (c.is_void())
        throw std::invalid_argument("is_closed_pseudomanifold: void complex");
    PseudomanifoldVerdict v;
    if (c.dim() < 0) {
        v.reason = "dimension is -1";
        return v;
    }
    if (!c.is_pure()) {
        v.reason = "not pure";
        return v;
    }
    const auto& facets = c.facets();
    std::map<Face, std::vector<int>> ridge_facets;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const Face& f = facets[fi];
        for (std::size_t i = 0; i < f.size(); ++i)
            ridge_facets[f.without_index(i)].push_back(static_cast<int>(fi));
    }
    for (const auto& [r, fs] : ridge_facets) {
        if (fs.size() != 2) {
            v.reason = "ridge " + r.to_string() + " lies in " +
                       std::to_string(fs.size()) + " facets";
            return v;
        }
    }
    // Strong connectivity: walk facet-to-facet across shared ridges.
    std::vector<char> seen(facets.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        const Face& f = facets[static_cast<std::size_t>(cur)];
        for (std::size_t i = 0; i < f.size(); ++i) {
            for (int nb : ridge_facets[f.without_index(i)]) {
                if (!seen[static_cast<std::size_t>(nb)]) {
                    seen[static_cast<std::size_t>(nb)] = 1;
                    ++visited;
                    stack.push_back(nb);
                }
            }
        }
    }
    if (visited != facets.size()) {
        v.reason = "facet-ridge graph is disconnected";
        return v;
    }
    v.holds = true;
    return v;
}

/**
 * Literal labeling-sensitive orientability: for every ridge F with incident
 * facets F+{i} and F+{j}, the quantity |{k in F : k < i}| + |{k in F : k < j}|
 * is odd.  Equivalent to the all-(+1) facet chain being a cycle, so this
 * depends on the vertex labeling.  Requires a closed pseudomanifold.
 */
inline bool paper_orientable(const SimplicialComplex& c)
{
    auto pm = is_closed_pseudomanifold(c);
    if (!pm.holds)
        throw std::invalid_argument("paper_orientable: not a closed pseudomanifold (" +
                                    pm.reason + ")");
    std::map<Face, std::vector<Vertex>> ridge_added;
    for (const Face& f : c.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            ridge_added[f.without_index(i)].push_back(f[i]);
    for (const auto& [r, added] : ridge_added) {
        long long parity = 0;
        for (Vertex v : added)
            for (Vertex k : r.vertices())
                if (k < v)
                    ++parity;
        if (parity % 2 == 0)
            return false;
    }
    return true;
}

/**
 * Labeling-free orientation: an assignment of signs to facets making the
 * signed facet chain a cycle over the integers, found by propagating signs
 * across shared ridges.  Exists iff the pseudomanifold is orientable in the
 * usual sense.  Requires a closed pseudomanifold.
 */
struct Orientation {
    std::vector<int> facet_signs;  // aligned with complex.facets(), each +1/-1
};

namespace detail {

// Sign of the ridge f.without_index(i) inside facet f.
inline int incidence_sign(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

}  // namespace detail

inline std::optional<Orientation> orientation(const SimplicialComplex& c)
{
    auto pm = is_closed_pseudomanifold(c);
    if (!pm.holds)
        throw std::invalid_argument("orientation: not a closed pseudomanifold (" +
                                    pm.reason + ")");
    const auto& facets = c.facets();
    // ridge -> list of (facet index, incidence sign)
    std::map<Face, std::vector<std::pair<int, int>>> incident;
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
        for (std::size_t i = 0; i < facets[fi].size(); ++i)
            incident[facets[fi].without_index(i)].emplace_back(static_cast<int>(fi),
                                                               detail::incidence_sign(i));
    std::vector<int> sign(facets.size(), 0);
    sign[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        const Face& f = facets[static_cast<std::size_t>(cur)];
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face r = f.without_index(i);
            for (auto [other, other_sign] : incident[r]) {
                if (other == cur)
                    continue;
                // Cancellation: sign[cur]*inc(cur) + sign[other]*inc(other) = 0.
                int need = -sign[static_cast<std::size_t>(cur)] *
                           detail::incidence_sign(i) * other_sign;
                if (sign[static_cast<std::size_t>(other)] == 0) {
                    sign[static_cast<std::size_t>(other)] = need;
                    stack.push_back(other);
                } else if (sign[static_cast<std::size_t>(other)] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    // The pseudomanifold is strongly connected, so every facet got a sign.
    Orientation o;
    o.facet_signs = std::move(sign);
    return o;
}

/**
 * Top-degree cycle check: the canonical fundamental chain (all facets with
 * coefficient 1 over characteristic 2, the propagated orientation signs
 * otherwise) has vanishing boundary.  In characteristic != 2 a
 * non-orientable input has no such chain and a domain_error is thrown.
 */
inline bool top_cycle_check(const SimplicialComplex& c, const FieldSpec& spec)
{
    auto pm = is_closed_pseudomanifold(c);
    if (!pm.holds)
        throw std::invalid_argument("top_cycle_check: not a closed pseudomanifold (" +
                                    pm.reason + ")");
    std::vector<int> signs(c.facets().size(), 1);
    if (spec.characteristic() != 2) {
        auto o = orientation(c);
        if (!o)
            throw std::domain_error(
                "top_cycle_check: no orientation exists over characteristic != 2");
        signs = o->facet_signs;
    }
    const int d = c.dim();
    bool ok = with_field(spec, [&](auto field) {
        auto m = boundary_matrix(c, d, field);
        std::vector<typename decltype(field)::Element> chain;
        // Columns of the boundary matrix are the d-faces in lex order, which
        // for a pure complex is exactly facets().
        for (int s : signs)
            chain.push_back(field.from_int(s));
        auto image = apply(m, chain, field);
        for (const auto& e : image)
            if (!field.is_zero(e))
                return false;
        return true;
    });
    if (ok) {
        // Cross-check: a nonzero top cycle forces top homology >= 1.
        BettiVector h = reduced_betti(c, spec);
        if (h.at(d) < 1)
            throw std::logic_error("top_cycle_check: cycle found but H~_top = 0");
    }
    return ok;
}

/**
 * Cone-point decomposition: tau is the set of vertices contained in every
 * facet, and core is the complex on the remaining ground vertices whose
 * faces are the facets with tau removed.  Then Delta = simplex(tau) * core.
 */
struct CoreDecomposition {
    Face cone_vertices;                 // tau, in original indices
    SimplicialComplex core;             // re-indexed to 0..m-1
    std::vector<Vertex> core_to_input;  // core vertex -> original index
};

inline CoreDecomposition core_decompose(const SimplicialComplex& c)
{
    if (c.is_void())
        throw std::invalid_argument("core_decompose: void complex");
    Face tau = c.facets().front();
    for (const Face& f : c.facets())
        tau = tau.intersect_with(f);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < c.ground_size(); ++v)
        if (!tau.contains(v))
            rest.push_back(v);
    std::vector<int> pos(static_cast<std::size_t>(c.ground_size()), -1);
    for (std::size_t i = 0; i < rest.size(); ++i)
        pos[static_cast<std::size_t>(rest[i])] = static_cast<int>(i);
    std::vector<Face> faces;
    for (const Face& f : c.facets()) {
        const Face trimmed = f.minus(tau);
        std::vector<Vertex> kept;
        for (Vertex v : trimmed.vertices())
            kept.push_back(pos[static_cast<std::size_t>(v)]);
        faces.emplace_back(std::move(kept));
    }
    std::vector<std::string> lab;
    if (!c.labels().empty())
        for (Vertex v : rest)
            lab.push_back(c.labels()[static_cast<std::size_t>(v)]);
    CoreDecomposition out;
    out.cone_vertices = tau;
    out.core = SimplicialComplex::from_facets(static_cast<int>(rest.size()),
                                              std::move(faces), std::move(lab));
    out.core_to_input = std::move(rest);
    return out;
}

/**
 * Gorenstein* over a field: every face link (including the link of the empty
 * face, i.e. the complex itself) has the reduced homology of a sphere of its
 * own dimension.  The witness is the first face in (size, lex) order whose
 * link fails.
 */
struct GorensteinVerdict {
    bool holds = true;
    std::optional<Face> witness;
};

inline GorensteinVerdict is_gorenstein_star(const SimplicialComplex& c,
                                            const FieldSpec& spec)
{
    if (c.is_void())
        throw std::invalid_argument("is_gorenstein_star: void complex");
    GorensteinVerdict v;
    for (const Face& sigma : c.all_faces()) {
        SimplicialComplex lk = c.link(sigma);
        const int d = lk.dim();
        BettiVector h = reduced_betti(lk, spec);
        bool sphere = h.at(d) == 1;
        for (int k = h.min_deg; k < d && sphere; ++k)
            if (h.at(k) != 0)
                sphere = false;
        if (!sphere) {
            v.holds = false;
            v.witness = sigma;
            return v;
        }
    }
    return v;
}

/// Gorenstein over a field: the core (cone points removed) is Gorenstein*.
inline bool is_gorenstein(const SimplicialComplex& c, const FieldSpec& spec)
{
    if (c.is_void())
        throw std::invalid_argument("is_gorenstein: void complex");
    return is_gorenstein_star(core_decompose(c).core, spec).holds;
}

/**
 * Elementary collapse in a 2-dimensional flag-no-square complex: the edge e
 * must lie in exactly one facet, and that facet must be a triangle; both are
 * removed.  The flag-no-square property is preserved (and re-checked).
 */
inline SimplicialComplex collapse_2d(const SimplicialComplex& c, const Face& e)
{
    if (c.dim() != 2)
        throw std::invalid_argument("collapse_2d: complex is not 2-dimensional");
    if (!is_flag_no_square(c).holds)
        throw std::invalid_argument("collapse_2d: complex is not flag-no-square");
    if (e.size() != 2 || !c.contains(e))
        throw std::invalid_argument("collapse_2d: " + e.to_string() + " is not an edge");
    std::vector<Face> carriers;
    for (const Face& f : c.faces_of_dim(2))
        if (e.is_subset_of(f))
            carriers.push_back(f);
    if (carriers.size() != 1)
        throw std::invalid_argument("collapse_2d: edge " + e.to_string() + " lies in " +
                                    std::to_string(carriers.size()) +
                                    " triangles; need exactly 1");
    std::vector<Face> faces;
    for (const Face& f : c.all_faces())
        if (!(f == e) && !(f == carriers.front()))
            faces.push_back(f);
    auto out = SimplicialComplex::from_facets(c.ground_size(), std::move(faces),
                                              c.labels());
    if (!is_flag_no_square(out).holds)
        throw std::logic_error("collapse_2d: result lost flag-no-square");
    return out;
}

}  // namespace flagreg
