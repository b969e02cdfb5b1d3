#include "wmorse/complex.hpp"

#include <algorithm>

#include "wmorse/errors.hpp"

namespace wmorse
{

namespace
{

// Lexicographically smallest missing face, or nothing when closed.
std::optional<Simplex> find_missing_face(std::span<const Simplex> sorted)
{
    auto present = [&](const Simplex& s) {
        return std::binary_search(sorted.begin(), sorted.end(), s);
    };
    bool closed = true;
    for (const Simplex& s : sorted)
    {
        for (const Simplex& f : faces(s))
            if (!present(f))
            {
                closed = false;
                break;
            }
        if (!closed)
            break;
    }
    if (closed)
        return std::nullopt;

    std::optional<Simplex> best;
    for (const Simplex& s : sorted)
        for (const Simplex& f : closure(s))
            if (!present(f) && (!best || f < *best))
                best = f;
    return best;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> sorted)
    : simplices_(std::move(sorted))
{
    for (const Simplex& s : simplices_)
        dimension_ = std::max(dimension_, s.dimension());
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices)
{
    std::sort(simplices.begin(), simplices.end());
    if (auto dup = std::adjacent_find(simplices.begin(), simplices.end()); dup != simplices.end())
        throw Error(ErrorCode::DuplicateSimplex, "simplex " + to_string(*dup) + " listed twice", {*dup});
    if (auto missing = find_missing_face(simplices))
        throw Error(ErrorCode::NotFaceClosed, "missing face " + to_string(*missing), {*missing});
    return SimplicialComplex(std::move(simplices));
}

SimplicialComplex SimplicialComplex::from_maximal(std::span<const Simplex> generators)
{
    std::vector<Simplex> all;
    for (const Simplex& g : generators)
    {
        auto c = closure(g);
        all.insert(all.end(), c.begin(), c.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return SimplicialComplex(std::move(all));
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
    if (it == simplices_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - simplices_.begin());
}

std::vector<Simplex> SimplicialComplex::of_dimension(int dim) const
{
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_)
        if (s.dimension() == dim)
            out.push_back(s);
    return out;
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s) const
{
    std::vector<Simplex> out;
    for (const Simplex& t : simplices_)
        if (s.is_proper_face_of(t))
            out.push_back(t);
    return out;
}

std::vector<Simplex> SimplicialComplex::facets_above(const Simplex& s) const
{
    std::vector<Simplex> out;
    for (const Simplex& t : simplices_)
        if (t.size() == s.size() + 1 && s.is_face_of(t))
            out.push_back(t);
    return out;
}

bool SimplicialComplex::is_maximal(const Simplex& s) const
{
    for (const Simplex& t : simplices_)
        if (s.is_proper_face_of(t))
            return false;
    return true;
}

std::optional<Simplex> free_face_of(const SimplicialComplex& k, const Simplex& s)
{
    std::optional<Simplex> found;
    for (const Simplex& t : k.simplices())
    {
        if (!s.is_proper_face_of(t))
            continue;
        if (found)
            return std::nullopt;
        found = t;
    }
    // a unique proper coface is automatically maximal and of dimension dim s + 1
    return found;
}

// ---------------------------------------------------------------------------

WeightedComplex WeightedComplex::validate(const Candidate& candidate)
{
    std::vector<std::pair<Simplex, Integer>> weighted;
    weighted.reserve(candidate.size());
    for (const auto& [vertices, w] : candidate)
        weighted.emplace_back(Simplex::from_vertices(vertices), w);
    return from_weights(std::move(weighted));
}

WeightedComplex WeightedComplex::from_weights(std::vector<std::pair<Simplex, Integer>> weighted)
{
    std::sort(weighted.begin(), weighted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Simplex> simplices;
    std::vector<Integer> weights;
    simplices.reserve(weighted.size());
    weights.reserve(weighted.size());
    for (auto& [s, w] : weighted)
    {
        simplices.push_back(std::move(s));
        weights.push_back(std::move(w));
    }
    SimplicialComplex k = SimplicialComplex::from_simplices(simplices);

    // Checking codimension-1 pairs suffices: divisibility is transitive.
    const auto n = static_cast<std::ptrdiff_t>(simplices.size());
    std::vector<std::ptrdiff_t> bad_face(simplices.size(), -1);
#pragma omp parallel for schedule(dynamic, 16) if (n > 512)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        const Simplex& s = simplices[i];
        for (const Simplex& f : faces(s))
        {
            auto j = k.index_of(f);
            if (!divides(weights[*j], weights[i]))
            {
                bad_face[i] = static_cast<std::ptrdiff_t>(*j);
                break;
            }
        }
    }
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        if (bad_face[i] < 0)
            continue;
        const Simplex& lo = simplices[bad_face[i]];
        const Simplex& hi = simplices[i];
        throw Error(ErrorCode::DivisibilityViolation,
                    "w" + to_string(lo) + " = " + to_string(weights[bad_face[i]])
                        + " does not divide w" + to_string(hi) + " = " + to_string(weights[i]),
                    {lo, hi});
    }
    return WeightedComplex(std::move(k), std::move(weights));
}

WeightedComplex WeightedComplex::constant(const SimplicialComplex& k, const Integer& a)
{
    return WeightedComplex(k, std::vector<Integer>(k.size(), a));
}

const Integer& WeightedComplex::weight(const Simplex& s) const
{
    auto i = complex_.index_of(s);
    if (!i)
        throw Error(ErrorCode::NotInComplex, to_string(s) + " is not in the complex", {s});
    return weights_[*i];
}

WeightedComplex WeightedComplex::restrict(std::span<const Simplex> subset) const
{
    std::vector<Simplex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Integer> w;
    w.reserve(sorted.size());
    for (const Simplex& s : sorted)
        w.push_back(weight(s));
    // closure check only; divisibility is inherited from the parent
    SimplicialComplex sub = SimplicialComplex::from_simplices(std::move(sorted));
    return WeightedComplex(std::move(sub), std::move(w));
}

WeightedComplex WeightedComplex::without(std::span<const Simplex> removed) const
{
    std::vector<Simplex> gone(removed.begin(), removed.end());
    std::sort(gone.begin(), gone.end());
    std::vector<Simplex> keep;
    keep.reserve(size());
    for (const Simplex& s : simplices())
        if (!std::binary_search(gone.begin(), gone.end(), s))
            keep.push_back(s);
    return restrict(keep);
}

} // namespace wmorse
