#ifndef WMORSE_COMPLEX_HPP
#define WMORSE_COMPLEX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wmorse/numeric.hpp"
#include "wmorse/simplex.hpp"

namespace wmorse
{

/**
 * Finite abstract simplicial complex. Simplices are kept in lexicographic
 * order of their vertex tuples; the set is closed under taking faces.
 * Immutable after construction.
 */
class SimplicialComplex
{
public:
    SimplicialComplex() = default;

    /// Throws DuplicateSimplex or NotFaceClosed (witness: the missing face).
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    /// Face closure of the given simplices.
    static SimplicialComplex from_maximal(std::span<const Simplex> generators);

    std::span<const Simplex> simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    bool empty() const noexcept { return simplices_.empty(); }

    /// -1 for the empty complex.
    int dimension() const noexcept { return dimension_; }

    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    std::optional<std::size_t> index_of(const Simplex& s) const;

    std::vector<Simplex> of_dimension(int dim) const;

    /// Proper cofaces of s in this complex (any dimension), lexicographic.
    std::vector<Simplex> cofaces(const Simplex& s) const;

    /// Cofaces of dimension dim(s) + 1.
    std::vector<Simplex> facets_above(const Simplex& s) const;

    bool is_maximal(const Simplex& s) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    explicit SimplicialComplex(std::vector<Simplex> sorted);

    std::vector<Simplex> simplices_;
    int dimension_ = -1;
};

/// The unique coface tau when s is a free face of tau in k, else nothing.
std::optional<Simplex> free_face_of(const SimplicialComplex& k, const Simplex& s);

/**
 * Simplicial complex with an integer weight on every simplex such that
 * w(s1) | w(s2) whenever s1 is a face of s2 (0 | x iff x = 0).
 */
class WeightedComplex
{
public:
    using Candidate = std::vector<std::pair<std::vector<Vertex>, Integer>>;

    WeightedComplex() = default;

    /**
     * Canonicalizes and validates an arbitrary candidate listing. Checks run
     * in the order DuplicateVertex, DuplicateSimplex, NotFaceClosed,
     * DivisibilityViolation.
     */
    static WeightedComplex validate(const Candidate& candidate);

    /// Same checks as validate() on already-built simplices.
    static WeightedComplex from_weights(std::vector<std::pair<Simplex, Integer>> weighted);

    /// Every simplex of k gets weight a.
    static WeightedComplex constant(const SimplicialComplex& k, const Integer& a);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    std::span<const Simplex> simplices() const noexcept { return complex_.simplices(); }
    std::span<const Integer> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return complex_.size(); }
    int dimension() const noexcept { return complex_.dimension(); }
    bool contains(const Simplex& s) const { return complex_.contains(s); }

    /// Throws NotInComplex.
    const Integer& weight(const Simplex& s) const;

    /// Weighted subcomplex on `subset` (must be face-closed; NotFaceClosed otherwise).
    WeightedComplex restrict(std::span<const Simplex> subset) const;

    /// This complex minus `removed`; the remainder must be face-closed.
    WeightedComplex without(std::span<const Simplex> removed) const;

    friend bool operator==(const WeightedComplex&, const WeightedComplex&) = default;

private:
    WeightedComplex(SimplicialComplex k, std::vector<Integer> w)
        : complex_(std::move(k)), weights_(std::move(w)) {}

    SimplicialComplex complex_;
    std::vector<Integer> weights_;
};

} // namespace wmorse

#endif // WMORSE_COMPLEX_HPP
