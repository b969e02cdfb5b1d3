#include "wmorse/simplex.hpp"

#include <algorithm>

#include "wmorse/errors.hpp"

namespace wmorse
{

Simplex Simplex::from_vertices(std::vector<Vertex> vertices)
{
    if (vertices.empty())
        throw Error(ErrorCode::EmptySimplex, "simplex has no vertices");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    {
        std::string listing = "[";
        for (std::size_t i = 0; i < vertices.size(); ++i)
            listing += (i ? "," : "") + std::to_string(vertices[i]);
        throw Error(ErrorCode::DuplicateVertex, "repeated vertex in " + listing + "]");
    }
    return Simplex(std::move(vertices), 0);
}

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : Simplex(from_vertices(std::vector<Vertex>(vertices)))
{
}

Simplex Simplex::face(std::size_t i) const
{
    std::vector<Vertex> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (j != i)
            out.push_back(vertices_[j]);
    return Simplex(std::move(out), 0);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

bool Simplex::contains(Vertex v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Simplex> faces(const Simplex& s)
{
    std::vector<Simplex> out;
    if (s.dimension() < 1)
        return out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out.push_back(s.face(i));
    return out;
}

std::string to_string(const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out + "]";
}

std::vector<Simplex> closure(const Simplex& s)
{
    const std::size_t n = s.size();
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask)
    {
        std::vector<Vertex> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i))
                vs.push_back(s[i]);
        out.push_back(Simplex::from_vertices(std::move(vs)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wmorse
