#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagreg {

using Vertex = int;

/**
 * A face: a strictly increasing list of vertex indices.
 *
 * The empty face is a valid value; it is the unique (-1)-dimensional face
 * contained in every nonvoid complex.
 */
class Face {
  public:
    Face() = default;

    explicit Face(std::vector<Vertex> verts) : verts_(std::move(verts))
    {
        std::sort(verts_.begin(), verts_.end());
        for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
            if (verts_[i] == verts_[i + 1])
                throw std::invalid_argument("Face: duplicate vertex " +
                                            std::to_string(verts_[i]));
        if (!verts_.empty() && verts_.front() < 0)
            throw std::invalid_argument("Face: negative vertex index");
    }

    Face(std::initializer_list<Vertex> verts) : Face(std::vector<Vertex>(verts)) {}

    const std::vector<Vertex>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    bool empty() const { return verts_.empty(); }

    // Dimension: |F| - 1, so the empty face has dimension -1.
    int dim() const { return static_cast<int>(verts_.size()) - 1; }

    Vertex operator[](std::size_t i) const { return verts_[i]; }

    bool contains(Vertex v) const
    {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool is_subset_of(const Face& other) const
    {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    bool intersects(const Face& other) const
    {
        auto a = verts_.begin();
        auto b = other.verts_.begin();
        while (a != verts_.end() && b != other.verts_.end()) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else
                return true;
        }
        return false;
    }

    Face union_with(const Face& other) const
    {
        std::vector<Vertex> out;
        out.reserve(verts_.size() + other.verts_.size());
        std::set_union(verts_.begin(), verts_.end(), other.verts_.begin(),
                       other.verts_.end(), std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    Face intersect_with(const Face& other) const
    {
        std::vector<Vertex> out;
        std::set_intersection(verts_.begin(), verts_.end(), other.verts_.begin(),
                              other.verts_.end(), std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    Face minus(const Face& other) const
    {
        std::vector<Vertex> out;
        std::set_difference(verts_.begin(), verts_.end(), other.verts_.begin(),
                            other.verts_.end(), std::back_inserter(out));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    // Face with the i-th smallest vertex removed (boundary term i).
    Face without_index(std::size_t i) const
    {
        std::vector<Vertex> out = verts_;
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        Face f;
        f.verts_ = std::move(out);
        return f;
    }

    // Bit mask; only valid when every vertex index is < 64.
    std::uint64_t mask() const
    {
        std::uint64_t m = 0;
        for (Vertex v : verts_)
            m |= std::uint64_t{1} << v;
        return m;
    }

    static Face from_mask(std::uint64_t m)
    {
        Face f;
        for (int v = 0; m != 0; ++v, m >>= 1)
            if (m & 1)
                f.verts_.push_back(v);
        return f;
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i > 0)
                s += ' ';
            s += std::to_string(verts_[i]);
        }
        return s + "}";
    }

    friend bool operator==(const Face& a, const Face& b) { return a.verts_ == b.verts_; }
    // Lexicographic on the sorted vertex lists.
    friend bool operator<(const Face& a, const Face& b) { return a.verts_ < b.verts_; }

  private:
    std::vector<Vertex> verts_;
};

// Canonical enumeration order used for subsets and witnesses: by size, then
// lexicographically.
inline bool size_lex_less(const Face& a, const Face& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

}  // namespace flagreg
