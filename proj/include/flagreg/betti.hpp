#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flagreg/complex.hpp"
#include "flagreg/field.hpp"
#include "flagreg/homology.hpp"

namespace flagreg {

/// Thrown when a computation would enumerate more vertex subsets than the
/// configured limit allows.
struct enumeration_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HochsterOptions {
    int subset_limit = 22;  // refuse ground sets larger than this
    int threads = 0;        // 0: use FLAGREG_THREADS or hardware concurrency
};

namespace detail {

inline int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("FLAGREG_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// All ascending s-subsets of 0..n-1, lexicographic.
inline std::vector<std::vector<Vertex>> subsets_of_size(int n, int s)
{
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur(static_cast<std::size_t>(s));
    if (s == 0) {
        out.push_back({});
        return out;
    }
    // Standard combination stepping.
    for (int i = 0; i < s; ++i)
        cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - s + i)
            --i;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < s; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Fan a list of work items across worker threads; worker(i) must be safe to
// run concurrently for distinct i.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& worker)
{
    threads = std::min<int>(threads, static_cast<int>(count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            worker(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                worker(i);
        });
    for (auto& th : pool)
        th.join();
}

}  // namespace detail

/**
 * Graded Betti table of the Stanley-Reisner ring S/I_Delta over the given
 * field, stored sparsely as (i,j) -> beta_{i,j}.  beta_{0,0} = 1 always.
 */
struct BettiTable {
    FieldSpec field;
    int n = 0;  // ground size (number of polynomial variables)
    std::map<std::pair<int, int>, long long> entries;

    long long beta(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    // Castelnuovo-Mumford regularity: max j - i over nonzero entries.
    int regularity() const
    {
        int reg = 0;
        for (const auto& [ij, v] : entries)
            if (v != 0)
                reg = std::max(reg, ij.second - ij.first);
        return reg;
    }

    int max_i() const
    {
        int m = 0;
        for (const auto& [ij, v] : entries)
            if (v != 0)
                m = std::max(m, ij.first);
        return m;
    }
};

/**
 * Full graded Betti table via Hochster's formula:
 *   beta_{i,j} = sum over j-subsets W of dim H~_{j-i-1}(Delta_W).
 * Every vertex subset of the ground set is enumerated, so the ground size is
 * capped by opts.subset_limit.
 */
inline BettiTable hochster_table(const SimplicialComplex& c, const FieldSpec& spec,
                                 const HochsterOptions& opts = {})
{
    if (c.is_void())
        throw std::invalid_argument("hochster_table: void complex");
    const int n = c.ground_size();
    if (n > opts.subset_limit)
        throw enumeration_limit_error(
            "hochster_table: ground size " + std::to_string(n) +
            " exceeds subset limit " + std::to_string(opts.subset_limit));

    BettiTable table;
    table.field = spec;
    table.n = n;
    table.entries[{0, 0}] = 1;  // W = emptyset: H~_{-1} of {emptyset}

    const int threads = detail::resolve_threads(opts.threads);
    for (int s = 1; s <= n; ++s) {
        auto subsets = detail::subsets_of_size(n, s);
        std::vector<std::map<std::pair<int, int>, long long>> partial(subsets.size());
        detail::parallel_for(subsets.size(), threads, [&](std::size_t idx) {
            SimplicialComplex sub = c.induced(subsets[idx]);
            if (sub.is_void())
                return;  // W meets no face only if the whole complex is void
            BettiVector h = reduced_betti(sub, spec);
            for (int k = h.min_deg; k <= h.top_degree(); ++k) {
                long long dim = h.at(k);
                if (dim > 0)
                    partial[idx][{s - k - 1, s}] += dim;
            }
        });
        for (const auto& p : partial)
            for (const auto& [ij, v] : p)
                table.entries[ij] += v;
    }
    return table;
}

/**
 * Regularity without assembling the whole table: subsets are scanned by
 * descending size and the scan stops once smaller subsets can no longer
 * improve the bound (a j-subset contributes at most j - i = k + 1 where k is
 * the homology degree, and k <= j - 1).
 */
inline int regularity(const SimplicialComplex& c, const FieldSpec& spec,
                      const HochsterOptions& opts = {})
{
    if (c.is_void())
        throw std::invalid_argument("regularity: void complex");
    const int n = c.ground_size();
    if (n > opts.subset_limit)
        throw enumeration_limit_error("regularity: ground size " + std::to_string(n) +
                                      " exceeds subset limit " +
                                      std::to_string(opts.subset_limit));

    const int threads = detail::resolve_threads(opts.threads);
    int best = 0;
    for (int s = n; s >= 1; --s) {
        if (s <= best)
            break;  // any contribution from an s-subset is at most s
        auto subsets = detail::subsets_of_size(n, s);
        std::vector<int> partial(subsets.size(), 0);
        detail::parallel_for(subsets.size(), threads, [&](std::size_t idx) {
            SimplicialComplex sub = c.induced(subsets[idx]);
            if (sub.is_void())
                return;
            BettiVector h = reduced_betti(sub, spec);
            int local = 0;
            for (int k = h.min_deg; k <= h.top_degree(); ++k)
                if (h.at(k) > 0)
                    local = std::max(local, k + 1);
            partial[idx] = local;
        });
        for (int v : partial)
            best = std::max(best, v);
    }
    return best;
}

/// Krull dimension of the Stanley-Reisner ring: dim Delta + 1.
inline int krull_dim(const SimplicialComplex& c)
{
    if (c.is_void())
        throw std::invalid_argument("krull_dim: void complex");
    return c.dim() + 1;
}

/**
 * Systole of a flag complex: the length of a shortest induced cycle of
 * length >= 4 in the 1-skeleton, or nullopt when none exists.  The witness
 * variant returns the cycle itself in cyclic vertex order.
 */
inline std::optional<std::vector<Vertex>> shortest_induced_cycle(const SimplicialComplex& c)
{
    auto verdict = c.is_flag();
    if (!verdict.flag)
        throw std::invalid_argument("systole: complex is not flag (minimal nonface " +
                                    verdict.witness->to_string() + ")");
    return c.one_skeleton().shortest_hole();
}

inline std::optional<int> systole(const SimplicialComplex& c)
{
    auto hole = shortest_induced_cycle(c);
    if (!hole)
        return std::nullopt;
    return static_cast<int>(hole->size());
}

/**
 * Property N_p verdicts.  Both deciders agree for flag complexes; the cycle
 * route uses the combinatorial characterization (no induced cycle of length
 * 4..p+2), the Betti route reads the graded table directly (beta_{i,j} = 0
 * for 1 <= i <= p and j != i+1).
 */
struct NpVerdict {
    int p = 0;
    bool satisfied = false;
    // Cycle route: a shortest offending induced cycle.
    std::optional<std::vector<Vertex>> cycle_witness;
    // Betti route: lexicographically smallest offending (i, j).
    std::optional<std::pair<int, int>> betti_witness;
};

inline NpVerdict np_via_cycles(const SimplicialComplex& c, int p)
{
    if (p < 2)
        throw std::invalid_argument("np_via_cycles: requires p >= 2");
    NpVerdict v;
    v.p = p;
    auto hole = shortest_induced_cycle(c);  // also enforces flagness
    if (hole && static_cast<int>(hole->size()) <= p + 2) {
        v.satisfied = false;
        v.cycle_witness = hole;
    } else {
        v.satisfied = true;
    }
    return v;
}

inline NpVerdict np_via_betti(const SimplicialComplex& c, int p, const FieldSpec& spec,
                              const HochsterOptions& opts = {})
{
    if (p < 1)
        throw std::invalid_argument("np_via_betti: requires p >= 1");
    NpVerdict v;
    v.p = p;
    v.satisfied = true;
    BettiTable table = hochster_table(c, spec, opts);
    for (const auto& [ij, val] : table.entries) {
        auto [i, j] = ij;
        if (val == 0 || i < 1 || i > p || j == i + 1)
            continue;
        if (!v.betti_witness || ij < *v.betti_witness) {
            v.satisfied = false;
            v.betti_witness = ij;
        }
    }
    return v;
}

}  // namespace flagreg
