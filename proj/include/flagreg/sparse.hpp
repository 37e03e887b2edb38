#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace flagreg {

/**
 * Sparse matrix over a field context F (see field.hpp).  Only nonzero
 * entries are stored.  Row/column counts may be zero; ranks and products are
 * computed with exact field arithmetic.
 */
template <class F>
struct SparseMatrix {
    using Element = typename F::Element;

    int rows = 0;
    int cols = 0;
    // Row-major nonzero entries: entries[r] maps column -> value.
    std::vector<std::map<int, Element>> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r)) {}

    void set(const F& field, int r, int c, Element v)
    {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("SparseMatrix::set: index out of range");
        auto& row = entries[static_cast<std::size_t>(r)];
        if (field.is_zero(v))
            row.erase(c);
        else
            row[c] = std::move(v);
    }

    Element at(const F& field, int r, int c) const
    {
        const auto& row = entries[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? field.zero() : it->second;
    }

    std::size_t nonzero_count() const
    {
        std::size_t n = 0;
        for (const auto& row : entries)
            n += row.size();
        return n;
    }
};

/// Exact rank by sparse Gaussian elimination with persistent pivot rows.
template <class F>
int rank(const SparseMatrix<F>& m, const F& field)
{
    using Element = typename F::Element;
    // pivot column -> normalized row (leading coefficient 1).
    std::map<int, std::map<int, Element>> pivots;
    int rk = 0;
    for (const auto& source : m.entries) {
        std::map<int, Element> row = source;
        while (!row.empty()) {
            const int lead = row.begin()->first;
            auto piv = pivots.find(lead);
            if (piv == pivots.end()) {
                // Normalize and install as a new pivot.
                Element scale = field.inv(row.begin()->second);
                for (auto& [c, v] : row)
                    v = field.mul(v, scale);
                pivots.emplace(lead, std::move(row));
                ++rk;
                break;
            }
            // Eliminate the leading entry against the pivot row.
            Element factor = row.begin()->second;
            for (const auto& [c, v] : piv->second) {
                Element delta = field.mul(factor, v);
                auto it = row.find(c);
                if (it == row.end()) {
                    Element nv = field.neg(delta);
                    if (!field.is_zero(nv))
                        row.emplace(c, std::move(nv));
                } else {
                    it->second = field.sub(it->second, delta);
                    if (field.is_zero(it->second))
                        row.erase(it);
                }
            }
        }
    }
    return rk;
}

/// Product a*b; requires a.cols == b.rows.
template <class F>
SparseMatrix<F> multiply(const SparseMatrix<F>& a, const SparseMatrix<F>& b,
                         const F& field)
{
    if (a.cols != b.rows)
        throw std::invalid_argument("multiply: dimension mismatch");
    SparseMatrix<F> out(a.rows, b.cols);
    for (int r = 0; r < a.rows; ++r) {
        auto& out_row = out.entries[static_cast<std::size_t>(r)];
        for (const auto& [k, av] : a.entries[static_cast<std::size_t>(r)]) {
            for (const auto& [c, bv] : b.entries[static_cast<std::size_t>(k)]) {
                auto it = out_row.find(c);
                typename F::Element term = field.mul(av, bv);
                if (it == out_row.end()) {
                    if (!field.is_zero(term))
                        out_row.emplace(c, std::move(term));
                } else {
                    it->second = field.add(it->second, term);
                    if (field.is_zero(it->second))
                        out_row.erase(it);
                }
            }
        }
    }
    return out;
}

/// Matrix-vector product; v is indexed by column.
template <class F>
std::vector<typename F::Element> apply(const SparseMatrix<F>& m,
                                       const std::vector<typename F::Element>& v,
                                       const F& field)
{
    if (static_cast<int>(v.size()) != m.cols)
        throw std::invalid_argument("apply: dimension mismatch");
    std::vector<typename F::Element> out(static_cast<std::size_t>(m.rows), field.zero());
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, val] : m.entries[static_cast<std::size_t>(r)])
            out[static_cast<std::size_t>(r)] = field.add(
                out[static_cast<std::size_t>(r)],
                field.mul(val, v[static_cast<std::size_t>(c)]));
    return out;
}

}  // namespace flagreg
