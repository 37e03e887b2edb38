#pragma once

#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagreg/complex.hpp"

namespace flagreg {

// ---------------------------------------------------------------------------
// Built-in generators.

/// Cycle graph C_k as a 1-dimensional complex, k >= 3.
inline SimplicialComplex cycle(int k)
{
    if (k < 3)
        throw std::invalid_argument("cycle: requires k >= 3");
    std::vector<Face> faces;
    for (int i = 0; i < k; ++i)
        faces.push_back(Face{i, (i + 1) % k});
    return SimplicialComplex::from_facets(k, std::move(faces));
}

/// Full simplex on n >= 1 vertices.
inline SimplicialComplex simplex(int n)
{
    if (n < 0)
        throw std::invalid_argument("simplex: requires n >= 0");
    std::vector<Vertex> all;
    for (int i = 0; i < n; ++i)
        all.push_back(i);
    return SimplicialComplex::from_facets(n, {Face(all)});
}

/// Boundary of the n-simplex: all proper subsets of an (n+1)-set, n >= 1.
/// Homeomorphic to the (n-1)-sphere.
inline SimplicialComplex simplex_boundary(int n)
{
    if (n < 1)
        throw std::invalid_argument("simplex_boundary: requires n >= 1");
    std::vector<Face> faces;
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<Vertex> f;
        for (int i = 0; i <= n; ++i)
            if (i != omit)
                f.push_back(i);
        faces.emplace_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n + 1, std::move(faces));
}

/// Boundary of the m-dimensional cross polytope: the m-fold join of S^0 on
/// antipodal pairs {2i, 2i+1}.  m = 3 gives the octahedron.
inline SimplicialComplex cross_polytope_boundary(int m)
{
    if (m < 1)
        throw std::invalid_argument("cross_polytope_boundary: requires m >= 1");
    std::vector<Face> faces;
    std::vector<Vertex> cur;
    // All 2^m choices of one vertex per antipodal pair.
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        cur.clear();
        for (int i = 0; i < m; ++i)
            cur.push_back(2 * i + ((bits >> i) & 1));
        faces.emplace_back(cur);
    }
    return SimplicialComplex::from_facets(2 * m, std::move(faces));
}

/**
 * Boundary of the icosahedron: 12 vertices, 30 edges, 20 triangles.
 * Vertex 0 is a pole, 1..5 and 6..10 are the upper and lower pentagonal
 * rings, 11 is the other pole.
 */
inline SimplicialComplex icosahedron()
{
    std::vector<Face> faces;
    for (int i = 0; i < 5; ++i) {
        const int u = 1 + i, u1 = 1 + (i + 1) % 5;
        const int l = 6 + i, l1 = 6 + (i + 1) % 5;
        faces.push_back(Face{0, u, u1});
        faces.push_back(Face{u, u1, l});
        faces.push_back(Face{l, l1, u1});
        faces.push_back(Face{11, l, l1});
    }
    return SimplicialComplex::from_facets(12, std::move(faces));
}

/// Minimal 6-vertex triangulation of the real projective plane (antipodal
/// quotient of the icosahedron boundary); 10 triangles, every edge in two.
inline SimplicialComplex rp2_6()
{
    std::vector<Face> faces = {
        Face{0, 1, 2}, Face{0, 2, 3}, Face{0, 3, 4}, Face{0, 4, 5}, Face{0, 5, 1},
        Face{1, 2, 4}, Face{2, 3, 5}, Face{3, 4, 1}, Face{4, 5, 2}, Face{5, 1, 3}};
    return SimplicialComplex::from_facets(6, std::move(faces));
}

/// Cone: apex vertex 0 joined to every face; inner vertices shift up by 1.
inline SimplicialComplex cone(const SimplicialComplex& inner)
{
    return simplex(1).join(inner);
}

/// Suspension: two apexes 0 and 1 (an S^0) joined to every face.
inline SimplicialComplex suspension(const SimplicialComplex& inner)
{
    return cross_polytope_boundary(1).join(inner);
}

/**
 * Clique complex of a seeded Erdos-Renyi graph G(n, p); deterministic for a
 * fixed (n, edge_prob, seed) triple.  Always a flag complex.
 */
inline SimplicialComplex random_flag(int n, double edge_prob, std::uint64_t seed)
{
    if (n < 1)
        throw std::invalid_argument("random_flag: requires n >= 1");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("random_flag: edge_prob must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            // Top 53 bits as a uniform double in [0,1).
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < edge_prob)
                edges.emplace_back(i, j);
        }
    }
    return clique_complex(Graph(n, std::move(edges)));
}

// ---------------------------------------------------------------------------
// Generator expressions.

namespace detail {

struct ExprParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit ExprParser(const std::string& t) : text(t) {}

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string ident()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("generate: expected a name at position " +
                                        std::to_string(start) + " in '" + text + "'");
        return text.substr(start, pos - start);
    }

    // A numeric literal (integer or real), returned as text.
    std::string number()
    {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == '-' || text[pos] == '+' || text[pos] == 'e' ||
                text[pos] == 'E'))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("generate: expected a number at position " +
                                        std::to_string(start) + " in '" + text + "'");
        return text.substr(start, pos - start);
    }

    SimplicialComplex parse_expr();
};

inline long long to_int(const std::string& s)
{
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size())
        throw std::invalid_argument("generate: bad integer '" + s + "'");
    return v;
}

inline double to_real(const std::string& s)
{
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size())
        throw std::invalid_argument("generate: bad number '" + s + "'");
    return v;
}

inline SimplicialComplex ExprParser::parse_expr()
{
    const std::string name = ident();
    if (name == "icosahedron" || name == "rp2_6") {
        // Optional empty parens.
        if (eat('(') && !eat(')'))
            throw std::invalid_argument("generate: " + name + " takes no parameters");
        return name == "icosahedron" ? icosahedron() : rp2_6();
    }
    if (!eat('('))
        throw std::invalid_argument("generate: '" + name + "' needs parameters");
    if (name == "cycle" || name == "simplex" || name == "simplex_boundary" ||
        name == "cross_polytope_boundary") {
        long long k = to_int(number());
        if (!eat(')'))
            throw std::invalid_argument("generate: expected ')' in '" + text + "'");
        if (k > 1000000)
            throw std::invalid_argument("generate: parameter too large");
        if (name == "cycle")
            return cycle(static_cast<int>(k));
        if (name == "simplex")
            return simplex(static_cast<int>(k));
        if (name == "simplex_boundary")
            return simplex_boundary(static_cast<int>(k));
        return cross_polytope_boundary(static_cast<int>(k));
    }
    if (name == "cone" || name == "suspension") {
        SimplicialComplex inner = parse_expr();
        if (!eat(')'))
            throw std::invalid_argument("generate: expected ')' in '" + text + "'");
        return name == "cone" ? cone(inner) : suspension(inner);
    }
    if (name == "join") {
        SimplicialComplex a = parse_expr();
        if (!eat(','))
            throw std::invalid_argument("generate: join needs two arguments");
        SimplicialComplex b = parse_expr();
        if (!eat(')'))
            throw std::invalid_argument("generate: expected ')' in '" + text + "'");
        return a.join(b);
    }
    if (name == "random_flag") {
        long long n = to_int(number());
        if (!eat(','))
            throw std::invalid_argument("generate: random_flag needs (n, edge_prob, seed)");
        double prob = to_real(number());
        if (!eat(','))
            throw std::invalid_argument("generate: random_flag needs (n, edge_prob, seed)");
        long long seed = to_int(number());
        if (!eat(')'))
            throw std::invalid_argument("generate: expected ')' in '" + text + "'");
        return random_flag(static_cast<int>(n), prob, static_cast<std::uint64_t>(seed));
    }
    throw std::invalid_argument("generate: unknown generator '" + name + "'");
}

}  // namespace detail

/// Build a complex from a generator expression such as "cycle(5)",
/// "icosahedron", "cone(cycle(6))" or "random_flag(8,0.4,17)".
inline SimplicialComplex generate(const std::string& expr)
{
    detail::ExprParser p(expr);
    SimplicialComplex c = p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size())
        throw std::invalid_argument("generate: trailing input in '" + expr + "'");
    return c;
}

/// The fixed test catalog: named small complexes exercising every predicate.
inline std::vector<std::pair<std::string, SimplicialComplex>> standard_catalog()
{
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    out.emplace_back("cycle(4)", cycle(4));
    out.emplace_back("cycle(5)", cycle(5));
    out.emplace_back("cycle(6)", cycle(6));
    out.emplace_back("cycle(7)", cycle(7));
    out.emplace_back("simplex(1)", simplex(1));
    out.emplace_back("simplex(3)", simplex(3));
    out.emplace_back("simplex_boundary(2)", simplex_boundary(2));
    out.emplace_back("simplex_boundary(3)", simplex_boundary(3));
    out.emplace_back("cross_polytope_boundary(1)", cross_polytope_boundary(1));
    out.emplace_back("cross_polytope_boundary(2)", cross_polytope_boundary(2));
    out.emplace_back("cross_polytope_boundary(3)", cross_polytope_boundary(3));
    out.emplace_back("icosahedron", icosahedron());
    out.emplace_back("rp2_6", rp2_6());
    out.emplace_back("cone(cycle(5))", cone(cycle(5)));
    out.emplace_back("suspension(cycle(5))", suspension(cycle(5)));
    out.emplace_back("join(cycle(5),cross_polytope_boundary(1))",
                     cycle(5).join(cross_polytope_boundary(1)));
    // Path on three vertices: pure with free ridges; Dehn-Sommerville fails.
    out.emplace_back("path3", SimplicialComplex::from_facets(
                                  3, {Face{0, 1}, Face{1, 2}}));
    return out;
}

}  // namespace flagreg
