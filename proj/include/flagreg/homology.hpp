#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagreg/complex.hpp"
#include "flagreg/field.hpp"
#include "flagreg/sparse.hpp"

namespace flagreg {

/**
 * Reduced Betti numbers indexed by homological degree k >= -1.  Degrees
 * outside the stored range are zero.  For {emptyset} the only nonzero entry
 * is in degree -1.
 */
struct BettiVector {
    int min_deg = -1;
    std::vector<long long> dims;  // dims[k - min_deg]

    long long at(int k) const
    {
        int idx = k - min_deg;
        if (idx < 0 || idx >= static_cast<int>(dims.size()))
            return 0;
        return dims[static_cast<std::size_t>(idx)];
    }

    int top_degree() const { return min_deg + static_cast<int>(dims.size()) - 1; }

    long long total() const
    {
        long long t = 0;
        for (long long d : dims)
            t += d;
        return t;
    }
};

/**
 * Boundary matrix of the augmented (reduced) chain complex in degree k:
 * rows are (k-1)-faces, columns are k-faces, both in lexicographic order.
 * Signs follow the usual alternating rule on sorted vertex lists; for k = 0
 * the single row is the augmentation (all entries +1).  Valid for
 * -1 <= k <= dim + 1; the k = dim + 1 and k = -1 matrices have zero columns
 * and zero rows respectively (zero rows except the augmented case).
 */
template <class F>
SparseMatrix<F> boundary_matrix(const SimplicialComplex& c, int k, const F& field)
{
    if (c.is_void())
        throw std::invalid_argument("boundary_matrix: void complex");
    if (k < -1 || k > c.dim() + 1)
        throw std::invalid_argument("boundary_matrix: degree " + std::to_string(k) +
                                    " out of range");
    std::vector<Face> rows_faces = c.faces_of_dim(k - 1);
    std::vector<Face> cols_faces = c.faces_of_dim(k);
    SparseMatrix<F> m(static_cast<int>(rows_faces.size()),
                      static_cast<int>(cols_faces.size()));
    std::map<Face, int> row_index;
    for (std::size_t i = 0; i < rows_faces.size(); ++i)
        row_index.emplace(rows_faces[i], static_cast<int>(i));
    for (std::size_t j = 0; j < cols_faces.size(); ++j) {
        const Face& f = cols_faces[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f.without_index(i);
            int r = row_index.at(sub);
            typename F::Element v = field.from_int(i % 2 == 0 ? 1 : -1);
            m.set(field, r, static_cast<int>(j), std::move(v));
        }
    }
    return m;
}

/**
 * Reduced simplicial homology dimensions over the given field via exact
 * boundary ranks:  dim H~_k = f_k - rank d_k - rank d_{k+1}.
 */
inline BettiVector reduced_betti(const SimplicialComplex& c, const FieldSpec& spec)
{
    if (c.is_void())
        throw std::invalid_argument("reduced_betti: void complex");
    return with_field(spec, [&](auto field) {
        BettiVector out;
        out.min_deg = -1;
        const int d = c.dim();
        std::vector<int> ranks;  // ranks[k + 1] = rank of d_k, k = -1..d+1
        for (int k = -1; k <= d + 1; ++k)
            ranks.push_back(rank(boundary_matrix(c, k, field), field));
        for (int k = -1; k <= d; ++k) {
            long long fk = c.face_count(k);
            long long betti = fk - ranks[static_cast<std::size_t>(k + 1)] -
                              ranks[static_cast<std::size_t>(k + 2)];
            out.dims.push_back(betti);
        }
        // Trailing zeros are harmless but trimming keeps fixtures tidy.
        while (!out.dims.empty() && out.dims.back() == 0)
            out.dims.pop_back();
        return out;
    });
}

}  // namespace flagreg
