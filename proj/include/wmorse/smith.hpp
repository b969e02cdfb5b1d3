#ifndef WMORSE_SMITH_HPP
#define WMORSE_SMITH_HPP

#include <optional>
#include <vector>

#include "wmorse/int_matrix.hpp"

namespace wmorse
{

/**
 * Smith normal form of an integer matrix A.
 *
 * `invariant_factors` holds d_1 | d_2 | ... | d_r, all positive, r = rank.
 * Unit factors are kept. When transforms were requested, `left` (U) and
 * `right` (V) are unimodular with U * A * V equal to the rows x cols matrix
 * carrying d_i at (i, i).
 */
struct SmithDecomposition
{
    std::vector<Integer> invariant_factors;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    std::size_t rank() const noexcept { return invariant_factors.size(); }

    /// Invariant factors greater than one.
    std::vector<Integer> torsion() const;
};

/**
 * Exact SNF by minimal-pivot elimination. Without transforms the matrix is
 * held sparsely and pivots are chosen by magnitude, then by fill-in; with
 * transforms a dense elimination tracks U and V. Either way the diagonal is
 * brought into divisibility order at the end. Row updates run in parallel
 * (OpenMP) when there are enough of them; the result does not depend on the
 * thread count.
 */
SmithDecomposition smith_normal_form(const IntMatrix& a, bool want_transforms = false);

std::size_t rank(const IntMatrix& a);

/// The rows x cols matrix with the invariant factors on its diagonal.
IntMatrix padded_diagonal(const SmithDecomposition& snf, std::size_t rows, std::size_t cols);

namespace reference
{

/// Plain serial SNF kept as a test and benchmark baseline.
SmithDecomposition smith_normal_form(const IntMatrix& a, bool want_transforms = false);

} // namespace reference

} // namespace wmorse

#endif // WMORSE_SMITH_HPP
