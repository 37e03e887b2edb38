#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagreg/complex.hpp"

namespace flagreg {

/**
 * FacetFile format: one facet per line as whitespace-separated vertex
 * labels; '#' starts a comment; blank lines are skipped.  Labels are
 * arbitrary non-whitespace tokens, indexed in first-appearance order.
 * Facets contained in other facets are pruned with a warning.
 */
struct ParseResult {
    SimplicialComplex complex;
    std::vector<std::string> warnings;
};

inline ParseResult parse_facets(std::istream& in)
{
    std::map<std::string, Vertex> index;
    std::vector<std::string> labels;
    std::vector<std::pair<Face, int>> given;  // face, line number
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream tokens(line);
        std::vector<Vertex> verts;
        std::string tok;
        while (tokens >> tok) {
            auto [it, inserted] = index.emplace(tok, static_cast<Vertex>(labels.size()));
            if (inserted)
                labels.push_back(tok);
            verts.push_back(it->second);
        }
        if (verts.empty())
            continue;
        try {
            given.emplace_back(Face(verts), line_no);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("parse_facets: line " + std::to_string(line_no) +
                                     ": repeated vertex label");
        }
    }
    if (given.empty())
        throw std::runtime_error("parse_facets: no facet lines");

    std::vector<Face> faces;
    faces.reserve(given.size());
    for (const auto& [f, ln] : given)
        faces.push_back(f);
    ParseResult out;
    const int ground = static_cast<int>(labels.size());
    out.complex =
        SimplicialComplex::from_facets(ground, std::move(faces), std::move(labels));
    // Report pruned lines: anything no longer present among the facets.
    std::vector<char> reported(static_cast<std::size_t>(line_no) + 1, 0);
    for (std::size_t i = 0; i < given.size(); ++i) {
        const auto& [f, ln] = given[i];
        bool kept = false;
        for (const Face& facet : out.complex.facets())
            if (facet == f)
                kept = true;
        bool duplicate = false;
        for (std::size_t j = 0; j < i && !duplicate; ++j)
            if (given[j].first == f)
                duplicate = true;
        if ((kept && !duplicate) || reported[static_cast<std::size_t>(ln)])
            continue;
        reported[static_cast<std::size_t>(ln)] = 1;
        std::string shown;
        for (Vertex v : f.vertices()) {
            if (!shown.empty())
                shown += ' ';
            shown += out.complex.label(v);
        }
        out.warnings.push_back(
            "line " + std::to_string(ln) + ": facet {" + shown +
            (duplicate ? "} repeats an earlier line; dropped"
                       : "} is contained in another facet; pruned"));
    }
    return out;
}

inline ParseResult parse_facets(const std::string& text)
{
    std::istringstream in(text);
    return parse_facets(in);
}

/// Inverse of parse_facets on facet sets: one facet per line, labels
/// preserved (1-based vertex numbers when the complex carries none).
inline std::string serialize_facets(const SimplicialComplex& c)
{
    if (c.is_void() || c.is_empty_complex())
        throw std::invalid_argument("serialize_facets: nothing to write");
    std::string out;
    for (const Face& f : c.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += c.label(f[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace flagreg
