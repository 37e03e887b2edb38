#pragma once
// Independent reference implementations used to cross-check the library.
//
// Everything here is deliberately naive: dense matrices, exhaustive subset
// enumeration, closed-form formulas.  The only library code shared with the
// implementations under test is the container layer (Face, Graph,
// SimplicialComplex accessors); every algorithm is re-derived from scratch.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <flagreg/complex.hpp>
#include <flagreg/field.hpp>
#include <flagreg/graph.hpp>

namespace oracle {

using flagreg::Face;
using flagreg::Graph;
using flagreg::Rational;
using flagreg::SimplicialComplex;
using flagreg::Vertex;

// ---------------------------------------------------------------------------
// Dense linear algebra.

/// Rank of a dense integer matrix mod p, by textbook Gaussian elimination.
inline int dense_rank_mod_p(std::vector<std::vector<long long>> m, long long p)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (auto& row : m)
        for (auto& x : row)
            x = ((x % p) + p) % p;
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[lead]);
        // Normalize the pivot row via Fermat inverse.
        long long inv = 1, base = m[lead][col] % p, e = p - 2;
        while (e > 0) {
            if (e & 1)
                inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& x : m[lead])
            x = x * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m[r][col] == 0)
                continue;
            const long long factor = m[r][col];
            for (std::size_t cidx = 0; cidx < cols; ++cidx)
                m[r][cidx] = ((m[r][cidx] - factor * m[lead][cidx]) % p + p) % p;
        }
        ++lead;
        ++rank;
    }
    return rank;
}

/// Rank of a dense integer matrix over the rationals (exact arithmetic).
inline int dense_rank_rational(const std::vector<std::vector<long long>>& ints)
{
    if (ints.empty())
        return 0;
    std::vector<std::vector<Rational>> m(ints.size());
    for (std::size_t r = 0; r < ints.size(); ++r)
        for (long long x : ints[r])
            m[r].emplace_back(x);
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[lead]);
        const Rational inv = Rational(1) / m[lead][col];
        for (auto& x : m[lead])
            x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m[r][col] == 0)
                continue;
            const Rational factor = m[r][col];
            for (std::size_t cidx = 0; cidx < cols; ++cidx)
                m[r][cidx] -= factor * m[lead][cidx];
        }
        ++lead;
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Homology from scratch: dense boundary matrices in lex order.

/// Dense matrix of the boundary map C_k -> C_{k-1} with the same conventions
/// as the library (lex-ordered bases, alternating signs, augmentation row at
/// k = 0), built without touching the sparse machinery.
inline std::vector<std::vector<long long>> dense_boundary(const SimplicialComplex& c,
                                                          int k)
{
    const std::vector<Face> cols = c.faces_of_dim(k);
    std::vector<Face> rows;
    if (k > 0)
        rows = c.faces_of_dim(k - 1);
    else if (k == 0)
        rows = {Face{}};
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = i;
    std::vector<std::vector<long long>> m(rows.size(),
                                          std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& vs = cols[j].vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::vector<Vertex> sub;
            for (std::size_t t = 0; t < vs.size(); ++t)
                if (t != i)
                    sub.push_back(vs[t]);
            m[row_index.at(Face(sub))][j] = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

/// Reduced Betti number b~_k via dense ranks.  `p = 0` means rationals.
inline long long dense_reduced_betti(const SimplicialComplex& c, int k, long long p)
{
    if (c.is_void())
        return 0;
    if (c.is_empty_complex())
        return k == -1 ? 1 : 0;
    if (k < 0 || k > c.dim())
        return 0;
    auto rank_of = [&](int deg) -> long long {
        if (deg < 0 || deg > c.dim())
            return 0;
        auto m = dense_boundary(c, deg);
        if (m.empty() || m[0].empty())
            return 0;
        return p == 0 ? dense_rank_rational(m) : dense_rank_mod_p(m, p);
    };
    const long long fk = c.face_count(k);
    return fk - rank_of(k) - rank_of(k + 1);
}

// ---------------------------------------------------------------------------
// Exhaustive graph searches (small n only).

/// Does `mask` induce a cycle in g?  Every chosen vertex must have induced
/// degree exactly 2 and the induced subgraph must be connected.
inline bool induces_cycle(const Graph& g, std::uint32_t mask)
{
    std::vector<Vertex> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask & (1u << v))
            verts.push_back(v);
    if (verts.size() < 3)
        return false;
    for (Vertex v : verts) {
        int deg = 0;
        for (Vertex u : g.neighbors(v))
            if (mask & (1u << u))
                ++deg;
        if (deg != 2)
            return false;
    }
    // Connectivity walk inside the mask.
    std::vector<Vertex> stack{verts[0]};
    std::uint32_t seen = 1u << verts[0];
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
            if ((mask & (1u << u)) && !(seen & (1u << u))) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    return seen == mask;
}

/// Length of the shortest induced cycle of length >= 4, by trying every
/// vertex subset.  Usable up to ~20 vertices.
inline std::optional<int> brute_shortest_hole(const Graph& g)
{
    std::optional<int> best;
    for (std::uint32_t mask = 0; mask < (1u << g.vertex_count()); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < 4 || (best && size >= *best))
            continue;
        if (induces_cycle(g, mask))
            best = size;
    }
    return best;
}

/// Flag test by definition: every clique of the 1-skeleton must be a face.
inline bool brute_is_flag(const SimplicialComplex& c)
{
    const Graph g = c.one_skeleton();
    for (std::uint32_t mask = 1; mask < (1u << g.vertex_count()); ++mask) {
        std::vector<Vertex> verts;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mask & (1u << v))
                verts.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < verts.size() && clique; ++i)
            for (std::size_t j = i + 1; j < verts.size() && clique; ++j)
                if (!g.has_edge(verts[i], verts[j]))
                    clique = false;
        if (clique && !c.contains(Face(verts)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closed forms.

inline long long binom_ll(long long n, long long k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

/// Deterministic random graph for cross-checking, independent of the
/// library's own random_flag sampling scheme.
inline Graph random_graph(int n, int percent, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace oracle
