#ifndef WMORSE_HOMOLOGY_HPP
#define WMORSE_HOMOLOGY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wmorse/complex.hpp"
#include "wmorse/int_matrix.hpp"
#include "wmorse/smith.hpp"

namespace wmorse
{

/// Per dimension, the nonzero-weight simplices in lexicographic order.
class ChainBasis
{
public:
    ChainBasis() = default;
    explicit ChainBasis(const WeightedComplex& k);

    int top_dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
    std::span<const Simplex> cells(int dim) const;
    std::size_t rank(int dim) const { return cells(dim).size(); }
    std::optional<std::size_t> index_of(int dim, const Simplex& s) const;

private:
    std::vector<std::vector<Simplex>> cells_;
};

/**
 * Weighted boundary matrices. matrix(n) maps C_n to C_{n-1}; the entry for
 * (d_i s, s) is (-1)^i w(s) / w(d_i s). matrix(0) is the 0 x |C_0| map to
 * the zero module.
 */
struct WeightedBoundary
{
    ChainBasis basis;
    std::vector<IntMatrix> matrices;

    /// Zero-sized shapes outside the computed range.
    IntMatrix matrix(int n) const;
};

WeightedBoundary boundary_matrices(const WeightedComplex& k);

/// The weighted boundary of one nonzero-weight simplex, in the basis of C_{n-1}.
std::vector<Integer> weighted_boundary_of(const WeightedComplex& k, const ChainBasis& basis,
                                          const Simplex& s);

struct HomologyGroup
{
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, divisibility order

    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// "Z^1 (+) Z/2 (+) Z/4", or "0".
std::string to_string(const HomologyGroup& h);

/// Z^free_rank (+) Z/t for t in torsion.
HomologyGroup make_group(std::size_t free_rank, std::vector<long long> torsion = {});

/**
 * H_0 .. H_top of (K, w) over Z. top = max_dim when given, else dim K.
 * Groups above dim K are zero. Dimensions are computed in parallel.
 */
std::vector<HomologyGroup> homology(const WeightedComplex& k, std::optional<int> max_dim = std::nullopt);

/**
 * Homology from boundary data: H_n = ker d_n / im d_{n+1}, with d_n given
 * as `incoming` (C_n -> C_{n-1}, may be empty) and `outgoing` (C_{n+1} -> C_n).
 */
HomologyGroup homology_from(std::size_t chain_rank, const IntMatrix& incoming, const IntMatrix& outgoing);

struct ClassOrder
{
    enum class Kind
    {
        Zero,
        Torsion,
        Infinite,
    };

    Kind kind = Kind::Zero;
    Integer order = 1;  // minimal k >= 1 with k z a boundary; meaningless when Infinite

    bool is_torsion() const noexcept { return kind != Kind::Infinite; }
    friend bool operator==(const ClassOrder&, const ClassOrder&) = default;
};

std::string to_string(const ClassOrder& c);

/**
 * Order of [z] in H_n(K, w), z given in the C_n basis. Throws NotACycle when
 * the weighted boundary of z is nonzero.
 */
ClassOrder homology_class_order(const WeightedComplex& k, int n, std::span<const Integer> z);

/// Order of the class of z modulo the column space of `boundary` (z assumed a cycle).
ClassOrder class_order_modulo(const IntMatrix& boundary, std::span<const Integer> z);

} // namespace wmorse

#endif // WMORSE_HOMOLOGY_HPP
