#ifndef WMORSE_SIMPLEX_HPP
#define WMORSE_SIMPLEX_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wmorse
{

using Vertex = std::uint32_t;

/**
 * A nonempty simplex stored as a strictly increasing vertex tuple. The
 * ascending order is the canonical orientation: face map d_i deletes the
 * vertex at position i.
 */
class Simplex
{
public:
    /// Sorts the input. Throws EmptySimplex or DuplicateVertex.
    static Simplex from_vertices(std::vector<Vertex> vertices);

    /// Placeholder with no vertices (dimension -1); not a valid cell.
    Simplex() = default;
    Simplex(std::initializer_list<Vertex> vertices);

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    /// d_i: the simplex with the i-th vertex removed. Requires dimension() >= 1.
    Simplex face(std::size_t i) const;

    /// Non-strict containment of vertex sets.
    bool is_face_of(const Simplex& other) const;
    bool is_proper_face_of(const Simplex& other) const
    {
        return size() < other.size() && is_face_of(other);
    }
    bool contains(Vertex v) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b)
    {
        return a.vertices_ <=> b.vertices_;
    }

private:
    explicit Simplex(std::vector<Vertex> sorted, int) : vertices_(std::move(sorted)) {}

    std::vector<Vertex> vertices_;
};

/// [d_0 s, ..., d_n s]; empty for a vertex.
std::vector<Simplex> faces(const Simplex& s);

/// "[0,1,2]"
std::string to_string(const Simplex& s);

/// All nonempty subsets of s, including s itself.
std::vector<Simplex> closure(const Simplex& s);

} // namespace wmorse

#endif // WMORSE_SIMPLEX_HPP
