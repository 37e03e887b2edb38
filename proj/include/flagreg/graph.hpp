#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "flagreg/face.hpp"

namespace flagreg {

/**
 * Finite simple graph on vertices 0..n-1.  Edges are stored canonically as
 * (min,max) pairs, sorted; loops and duplicate edges are rejected.
 */
class Graph {
  public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v)
                throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Graph: duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        // Neighbor lists come out sorted because the edge list is sorted on
        // the first coordinate only; sort each explicitly.
        for (auto& nb : adj_)
            std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const
    {
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(Vertex u, Vertex v) const
    {
        if (u == v)
            return false;
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    Graph complement() const
    {
        std::vector<std::pair<Vertex, Vertex>> comp;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (!has_edge(u, v))
                    comp.emplace_back(u, v);
        return Graph(n_, std::move(comp));
    }

    /**
     * All maximal cliques (Bron-Kerbosch with greedy pivoting).  Isolated
     * vertices appear as singleton cliques.  Output is sorted by
     * (size, lex) for determinism.
     */
    std::vector<Face> maximal_cliques() const
    {
        std::vector<Face> out;
        std::vector<Vertex> R;
        std::vector<Vertex> P(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            P[static_cast<std::size_t>(v)] = v;
        bron_kerbosch(R, P, {}, out);
        std::sort(out.begin(), out.end(), size_lex_less);
        return out;
    }

    /**
     * Shortest hole: a shortest induced cycle of length >= 4, returned in
     * cyclic vertex order, or nullopt if the graph is chordal.
     *
     * For every induced path u-v-w (uv, vw edges, uw a non-edge) a shortest
     * u-w path is sought in the graph with N[v] \ {u,w} deleted; gluing v
     * back in yields a chordless cycle of length (path edges) + 2.  Every
     * hole through consecutive vertices u,v,w is found this way, and every
     * cycle produced is genuinely induced, so the minimum over all triples
     * is exact.
     */
    std::optional<std::vector<Vertex>> shortest_hole() const
    {
        std::optional<std::vector<Vertex>> best;
        std::vector<char> blocked(static_cast<std::size_t>(n_), 0);
        std::vector<int> dist(static_cast<std::size_t>(n_));
        std::vector<Vertex> parent(static_cast<std::size_t>(n_));

        for (Vertex v = 0; v < n_; ++v) {
            const auto& nb = neighbors(v);
            for (std::size_t a = 0; a < nb.size(); ++a) {
                for (std::size_t b = a + 1; b < nb.size(); ++b) {
                    Vertex u = nb[a], w = nb[b];
                    if (has_edge(u, w))
                        continue;
                    // Delete v and all its other neighbors.
                    std::fill(blocked.begin(), blocked.end(), 0);
                    blocked[static_cast<std::size_t>(v)] = 1;
                    for (Vertex x : nb)
                        blocked[static_cast<std::size_t>(x)] = 1;
                    blocked[static_cast<std::size_t>(u)] = 0;
                    blocked[static_cast<std::size_t>(w)] = 0;

                    std::fill(dist.begin(), dist.end(), -1);
                    dist[static_cast<std::size_t>(u)] = 0;
                    std::deque<Vertex> q{u};
                    while (!q.empty()) {
                        Vertex x = q.front();
                        q.pop_front();
                        if (x == w)
                            break;
                        for (Vertex y : neighbors(x)) {
                            if (blocked[static_cast<std::size_t>(y)])
                                continue;
                            if (dist[static_cast<std::size_t>(y)] < 0) {
                                dist[static_cast<std::size_t>(y)] =
                                    dist[static_cast<std::size_t>(x)] + 1;
                                parent[static_cast<std::size_t>(y)] = x;
                                q.push_back(y);
                            }
                        }
                    }
                    if (dist[static_cast<std::size_t>(w)] < 0)
                        continue;
                    std::size_t len =
                        static_cast<std::size_t>(dist[static_cast<std::size_t>(w)]) + 2;
                    if (best && best->size() <= len)
                        continue;
                    std::vector<Vertex> cycle;
                    for (Vertex x = w; x != u; x = parent[static_cast<std::size_t>(x)])
                        cycle.push_back(x);
                    cycle.push_back(u);
                    cycle.push_back(v);
                    std::reverse(cycle.begin(), cycle.end());  // v, u, ..., w
                    best = std::move(cycle);
                }
            }
        }
        return best;
    }

  private:
    void bron_kerbosch(std::vector<Vertex>& R, std::vector<Vertex> P,
                       std::vector<Vertex> X, std::vector<Face>& out) const
    {
        if (P.empty() && X.empty()) {
            out.emplace_back(R);
            return;
        }
        // Pivot: vertex of P union X with most neighbors in P.
        Vertex pivot = -1;
        std::size_t best = 0;
        for (const auto* side : {&P, &X}) {
            for (Vertex u : *side) {
                std::size_t cnt = 0;
                for (Vertex p : P)
                    if (has_edge(u, p))
                        ++cnt;
                if (pivot < 0 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        }
        std::vector<Vertex> candidates;
        for (Vertex u : P)
            if (pivot < 0 || !has_edge(pivot, u))
                candidates.push_back(u);
        for (Vertex u : candidates) {
            std::vector<Vertex> P2, X2;
            for (Vertex p : P)
                if (has_edge(u, p))
                    P2.push_back(p);
            for (Vertex x : X)
                if (has_edge(u, x))
                    X2.push_back(x);
            R.push_back(u);
            bron_kerbosch(R, std::move(P2), std::move(X2), out);
            R.pop_back();
            P.erase(std::find(P.begin(), P.end(), u));
            X.insert(std::lower_bound(X.begin(), X.end(), u), u);
        }
    }

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

}  // namespace flagreg
