#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "flagreg/face.hpp"
#include "flagreg/graph.hpp"

namespace flagreg {

/**
 * f-vector of a nonvoid complex: entries f_{-1}, f_0, ..., f_d with
 * f_{-1} = 1.  Only faces are counted; ground vertices lying in no face do
 * not contribute.
 */
struct FVector {
    std::vector<long long> counts;  // counts[k+1] = f_k

    int dim() const { return static_cast<int>(counts.size()) - 2; }

    long long at(int k) const
    {
        if (k < -1 || k > dim())
            return 0;
        return counts[static_cast<std::size_t>(k + 1)];
    }
};

/**
 * h-vector h_0..h_d where d = dim + 1 is the Krull dimension of the
 * Stanley-Reisner ring.
 */
struct HVector {
    std::vector<long long> counts;  // counts[i] = h_i

    int d() const { return static_cast<int>(counts.size()) - 1; }

    long long at(int i) const
    {
        if (i < 0 || i > d())
            return 0;
        return counts[static_cast<std::size_t>(i)];
    }
};

namespace detail {

// Pascal's triangle; exact in long long for the sizes this library handles.
inline long long binom(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace detail

class SimplicialComplex;
inline SimplicialComplex clique_complex(const Graph& g);

/**
 * Finite abstract simplicial complex on ground set 0..n-1, stored by its
 * facets (inclusion-maximal faces).  Distinguished degenerate values:
 *
 *  - the void complex (no faces at all): facet list empty;
 *  - the empty complex {emptyset}: single empty facet, dimension -1.
 *
 * Ground vertices need not lie in any face.
 */
class SimplicialComplex {
  public:
    static constexpr int kVoidDim = std::numeric_limits<int>::min();

    SimplicialComplex() = default;  // void complex on empty ground set

    /**
     * Build from a list of faces; non-maximal ones are pruned.  An empty
     * face list yields the void complex; a list containing only the empty
     * face yields {emptyset}.
     */
    static SimplicialComplex from_facets(int ground, std::vector<Face> faces,
                                         std::vector<std::string> labels = {})
    {
        if (ground < 0)
            throw std::invalid_argument("from_facets: negative ground size");
        if (!labels.empty() && static_cast<int>(labels.size()) != ground)
            throw std::invalid_argument("from_facets: label count != ground size");
        for (const Face& f : faces)
            if (!f.empty() && f.vertices().back() >= ground)
                throw std::invalid_argument("from_facets: vertex " +
                                            std::to_string(f.vertices().back()) +
                                            " outside ground set of size " +
                                            std::to_string(ground));
        SimplicialComplex c;
        c.ground_ = ground;
        c.labels_ = std::move(labels);
        c.facets_ = prune_to_maximal(std::move(faces));
        c.build_masks();
        return c;
    }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const
    {
        return facets_.size() == 1 && facets_[0].empty();
    }

    int ground_size() const { return ground_; }

    // Facets in lexicographic order.
    const std::vector<Face>& facets() const { return facets_; }

    const std::vector<std::string>& labels() const { return labels_; }

    std::string label(Vertex v) const
    {
        if (!labels_.empty())
            return labels_[static_cast<std::size_t>(v)];
        return std::to_string(v + 1);
    }

    // kVoidDim for the void complex, -1 for {emptyset}.
    int dim() const
    {
        if (is_void())
            return kVoidDim;
        int d = -1;
        for (const Face& f : facets_)
            d = std::max(d, f.dim());
        return d;
    }

    bool contains(const Face& f) const
    {
        if (is_void())
            return false;
        if (ground_ <= 64) {
            if (!f.empty() && f.vertices().back() >= 64)
                return false;
            std::uint64_t m = f.mask();
            for (std::uint64_t fm : facet_masks_)
                if ((m & ~fm) == 0)
                    return true;
            return false;
        }
        for (const Face& g : facets_)
            if (f.is_subset_of(g))
                return true;
        return false;
    }

    bool is_pure() const
    {
        if (is_void())
            return true;
        for (const Face& f : facets_)
            if (f.dim() != facets_.front().dim())
                return false;
        return true;
    }

    // Vertices that lie in at least one face, ascending.
    std::vector<Vertex> face_vertices() const
    {
        std::vector<char> seen(static_cast<std::size_t>(ground_), 0);
        for (const Face& f : facets_)
            for (Vertex v : f.vertices())
                seen[static_cast<std::size_t>(v)] = 1;
        std::vector<Vertex> out;
        for (Vertex v = 0; v < ground_; ++v)
            if (seen[static_cast<std::size_t>(v)])
                out.push_back(v);
        return out;
    }

    // All k-dimensional faces in lexicographic order.
    std::vector<Face> faces_of_dim(int k) const
    {
        std::vector<Face> out;
        if (is_void() || k < -1 || k > dim())
            return out;
        if (k == -1) {
            out.emplace_back();
            return out;
        }
        std::set<Face> seen;
        std::vector<Vertex> buf(static_cast<std::size_t>(k) + 1);
        for (const Face& f : facets_) {
            if (f.dim() < k)
                continue;
            enumerate_subsets(f.vertices(), static_cast<std::size_t>(k) + 1, buf, 0, 0,
                              [&](const std::vector<Vertex>& verts) {
                                  Face g;
                                  g = Face(verts);
                                  seen.insert(std::move(g));
                              });
        }
        out.assign(seen.begin(), seen.end());
        return out;
    }

    // All faces including the empty face, in (size, lex) order.
    std::vector<Face> all_faces() const
    {
        std::vector<Face> out;
        for (int k = -1; k <= dim(); ++k) {
            auto fk = faces_of_dim(k);
            out.insert(out.end(), fk.begin(), fk.end());
        }
        return out;
    }

    long long face_count(int k) const
    {
        if (is_void() || k < -1 || k > dim())
            return 0;
        if (k == -1)
            return 1;
        if (ground_ <= 64) {
            // Count via masks to avoid materialising Face objects.
            std::unordered_set<std::uint64_t> seen;
            std::vector<Vertex> buf(static_cast<std::size_t>(k) + 1);
            for (const Face& f : facets_) {
                if (f.dim() < k)
                    continue;
                enumerate_subsets(f.vertices(), static_cast<std::size_t>(k) + 1, buf, 0,
                                  0, [&](const std::vector<Vertex>& verts) {
                                      std::uint64_t m = 0;
                                      for (Vertex v : verts)
                                          m |= std::uint64_t{1} << v;
                                      seen.insert(m);
                                  });
            }
            return static_cast<long long>(seen.size());
        }
        return static_cast<long long>(faces_of_dim(k).size());
    }

    FVector f_vector() const
    {
        if (is_void())
            throw std::invalid_argument("f_vector: void complex");
        FVector f;
        for (int k = -1; k <= dim(); ++k)
            f.counts.push_back(face_count(k));
        return f;
    }

    // Reduced Euler characteristic sum_{k>=0} (-1)^k f_k  -  f_{-1}.
    long long reduced_euler() const
    {
        FVector f = f_vector();
        long long chi = 0;
        for (int k = -1; k <= f.dim(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * f.at(k);
        return chi;
    }

    /**
     * Induced subcomplex on W (ascending vertex subset of the ground set),
     * re-indexed to ground 0..|W|-1.
     */
    SimplicialComplex induced(const std::vector<Vertex>& W) const
    {
        std::vector<int> pos(static_cast<std::size_t>(ground_), -1);
        for (std::size_t i = 0; i < W.size(); ++i) {
            Vertex v = W[i];
            if (v < 0 || v >= ground_)
                throw std::invalid_argument("induced: vertex out of range");
            if (i > 0 && W[i - 1] >= v)
                throw std::invalid_argument("induced: W must be strictly ascending");
            pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        std::vector<Face> faces;
        faces.reserve(facets_.size());
        for (const Face& f : facets_) {
            std::vector<Vertex> kept;
            for (Vertex v : f.vertices())
                if (pos[static_cast<std::size_t>(v)] >= 0)
                    kept.push_back(pos[static_cast<std::size_t>(v)]);
            faces.emplace_back(std::move(kept));
        }
        if (is_void())
            faces.clear();
        std::vector<std::string> lab;
        if (!labels_.empty())
            for (Vertex v : W)
                lab.push_back(labels_[static_cast<std::size_t>(v)]);
        return from_facets(static_cast<int>(W.size()), std::move(faces), std::move(lab));
    }

    /**
     * Link of a face sigma, on the ground set of vertices that span a face
     * together with sigma, re-indexed ascending.  The member
     * link_ground_map() image is returned alongside via the out-parameter
     * free overload below when callers need original indices.
     */
    SimplicialComplex link(const Face& sigma, std::vector<Vertex>* ground_map = nullptr) const
    {
        if (!contains(sigma))
            throw std::invalid_argument("link: " + sigma.to_string() + " is not a face");
        std::vector<Face> rests;
        std::set<Vertex> ground_set;
        for (const Face& f : facets_) {
            if (!sigma.is_subset_of(f))
                continue;
            Face rest = f.minus(sigma);
            for (Vertex v : rest.vertices())
                ground_set.insert(v);
            rests.push_back(std::move(rest));
        }
        std::vector<Vertex> ground_vec(ground_set.begin(), ground_set.end());
        std::vector<int> pos(static_cast<std::size_t>(ground_), -1);
        for (std::size_t i = 0; i < ground_vec.size(); ++i)
            pos[static_cast<std::size_t>(ground_vec[i])] = static_cast<int>(i);
        std::vector<Face> faces;
        for (const Face& r : rests) {
            std::vector<Vertex> kept;
            for (Vertex v : r.vertices())
                kept.push_back(pos[static_cast<std::size_t>(v)]);
            faces.emplace_back(std::move(kept));
        }
        std::vector<std::string> lab;
        if (!labels_.empty())
            for (Vertex v : ground_vec)
                lab.push_back(labels_[static_cast<std::size_t>(v)]);
        if (ground_map)
            *ground_map = ground_vec;
        return from_facets(static_cast<int>(ground_vec.size()), std::move(faces),
                           std::move(lab));
    }

    /**
     * Join: vertices of other are shifted up by this->ground_size().  The
     * join with a void factor is void (but keeps the combined ground set).
     */
    SimplicialComplex join(const SimplicialComplex& other) const
    {
        int n1 = ground_;
        int n = ground_ + other.ground_;
        std::vector<Face> faces;
        for (const Face& a : facets_) {
            for (const Face& b : other.facets_) {
                std::vector<Vertex> verts = a.vertices();
                for (Vertex v : b.vertices())
                    verts.push_back(v + n1);
                faces.emplace_back(std::move(verts));
            }
        }
        std::vector<std::string> lab;
        if (!labels_.empty() && !other.labels_.empty()) {
            lab = labels_;
            lab.insert(lab.end(), other.labels_.begin(), other.labels_.end());
            std::vector<std::string> sorted = lab;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                lab.clear();  // colliding labels: fall back to defaults
        }
        return from_facets(n, std::move(faces), std::move(lab));
    }

    // 1-skeleton as a graph on the full ground set.
    Graph one_skeleton() const
    {
        std::set<std::pair<Vertex, Vertex>> edges;
        for (const Face& f : facets_) {
            const auto& v = f.vertices();
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j)
                    edges.emplace(v[i], v[j]);
        }
        return Graph(ground_,
                     std::vector<std::pair<Vertex, Vertex>>(edges.begin(), edges.end()));
    }

    /**
     * Flag test: every minimal nonface has at most two vertices, i.e. every
     * clique of the 1-skeleton with >= 3 vertices is a face.  On failure the
     * witness is a minimal nonface (necessarily of size >= 3).
     */
    struct FlagVerdict {
        bool flag = true;
        std::optional<Face> witness;  // a minimal nonface of size >= 3
    };

    FlagVerdict is_flag() const
    {
        if (is_void())
            throw std::invalid_argument("is_flag: void complex");
        FlagVerdict verdict;
        Graph g = one_skeleton();
        for (const Face& clique : g.maximal_cliques()) {
            if (clique.size() < 3 || contains(clique))
                continue;
            // Shrink to a minimal nonface: drop vertices while the result
            // stays a nonface.
            Face cur = clique;
            bool shrunk = true;
            while (shrunk) {
                shrunk = false;
                for (std::size_t i = 0; i < cur.size(); ++i) {
                    Face cand = cur.without_index(i);
                    if (!contains(cand)) {
                        cur = cand;
                        shrunk = true;
                        break;
                    }
                }
            }
            verdict.flag = false;
            verdict.witness = cur;
            return verdict;
        }
        return verdict;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.ground_ == b.ground_ && a.facets_ == b.facets_;
    }

  private:
    static std::vector<Face> prune_to_maximal(std::vector<Face> faces)
    {
        std::sort(faces.begin(), faces.end());
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        std::vector<Face> maximal;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
                if (i != j && faces[i].is_subset_of(faces[j]) && !(faces[j].is_subset_of(faces[i])))
                    dominated = true;
            if (!dominated)
                maximal.push_back(faces[i]);
        }
        return maximal;
    }

    void build_masks()
    {
        facet_masks_.clear();
        if (ground_ <= 64)
            for (const Face& f : facets_)
                facet_masks_.push_back(f.mask());
    }

    template <class Fn>
    static void enumerate_subsets(const std::vector<Vertex>& verts, std::size_t want,
                                  std::vector<Vertex>& buf, std::size_t depth,
                                  std::size_t start, Fn&& fn)
    {
        if (depth == want) {
            fn(buf);
            return;
        }
        for (std::size_t i = start; i + (want - depth) <= verts.size(); ++i) {
            buf[depth] = verts[i];
            enumerate_subsets(verts, want, buf, depth + 1, i + 1, fn);
        }
    }

    int ground_ = 0;
    std::vector<Face> facets_;
    std::vector<std::uint64_t> facet_masks_;
    std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// f/h-vector transforms.

/**
 * h-vector from the f-vector:  h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1},
 * 0 <= j <= d, with d = dim + 1.
 */
inline HVector h_vector(const FVector& f)
{
    int d = f.dim() + 1;
    HVector h;
    for (int j = 0; j <= d; ++j) {
        long long hj = 0;
        for (int i = 0; i <= j; ++i) {
            long long term = detail::binom(d - i, j - i) * f.at(i - 1);
            hj += ((j - i) % 2 == 0) ? term : -term;
        }
        h.counts.push_back(hj);
    }
    return h;
}

/**
 * Inverse transform:  f_{j-1} = sum_i C(d-i, j-i) h_i.
 */
inline FVector f_from_h(const HVector& h)
{
    int d = h.d();
    FVector f;
    for (int j = 0; j <= d; ++j) {
        long long fj = 0;
        for (int i = 0; i <= j; ++i)
            fj += detail::binom(d - i, j - i) * h.at(i);
        f.counts.push_back(fj);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Graph-to-complex constructions.

/// Clique complex: faces are exactly the cliques of g (always flag).
inline SimplicialComplex clique_complex(const Graph& g)
{
    return SimplicialComplex::from_facets(g.vertex_count(), g.maximal_cliques());
}

/// Independence complex In(g): faces are the independent sets of g.  This is
/// the Stanley-Reisner complex of the edge ideal I(g).
inline SimplicialComplex independence_complex(const Graph& g)
{
    return clique_complex(g.complement());
}

}  // namespace flagreg
