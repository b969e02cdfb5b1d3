#ifndef WMORSE_COLLAPSE_HPP
#define WMORSE_COLLAPSE_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wmorse/complex.hpp"
#include "wmorse/homology.hpp"

namespace wmorse
{

/// Free face and its unique coface, removed together.
struct CollapseStep
{
    Simplex face;
    Simplex coface;

    int dimension() const noexcept { return coface.dimension(); }
    friend bool operator==(const CollapseStep&, const CollapseStep&) = default;
};

enum class Verdict
{
    SameWeight,     // w(face) == w(coface) != 0
    Associate,      // w(coface) == -w(face) != 0
    NotGuaranteed,
    BothZero,       // neither cell is in any chain group; informational only
};

std::string_view to_string(Verdict v);

struct PreservationVerdict
{
    Verdict tag = Verdict::NotGuaranteed;
    Integer face_weight;
    Integer coface_weight;

    /// True for the verdicts that carry the homology-preservation guarantee.
    bool guaranteed() const noexcept { return tag == Verdict::SameWeight || tag == Verdict::Associate; }
};

/// Removes `face` and its unique coface. Throws NotFreeFace.
std::pair<WeightedComplex, CollapseStep> elementary_collapse(const WeightedComplex& k, const Simplex& face);

/// Static predicate on the removed pair; never computes homology.
PreservationVerdict check_preservation(const WeightedComplex& k, const CollapseStep& step);

struct CollapseTrace
{
    WeightedComplex result;
    std::vector<CollapseStep> steps;
    std::vector<PreservationVerdict> verdicts;

    bool guaranteed() const;
};

/// Applies the given free faces in order. NotFreeFace names the step index.
CollapseTrace collapse_sequence(const WeightedComplex& k, std::span<const Simplex> faces);

/// Repeatedly collapses the lexicographically smallest free face until none is left.
CollapseTrace greedy_collapse(const WeightedComplex& k);

/// Free faces of k in lexicographic order.
std::vector<Simplex> free_faces(const SimplicialComplex& k);

struct RemovalReport
{
    Simplex removed;
    std::vector<Integer> boundary;   // weighted boundary of `removed` in C_{n-1}(L)
    ClassOrder class_order;          // order of its class in H_{n-1}(L, w)
    std::vector<HomologyGroup> homology_after;   // H_*(L, w), 0 .. dim K
    HomologyGroup predicted_lower;   // H_{n-1}(L) / <[boundary]>
    HomologyGroup predicted_upper;   // H_n(L) (+) Z when the class is torsion, else H_n(L)

    int dimension() const noexcept { return removed.dimension(); }

    /// H_*(K, w) implied by the removal relations (unchanged outside n-1, n).
    std::vector<HomologyGroup> predicted_before() const;
};

/**
 * Removes a maximal nonzero-weight simplex and reports how homology moves.
 * Throws NotMaximal or ZeroWeight.
 */
std::pair<WeightedComplex, RemovalReport> elementary_removal(const WeightedComplex& k, const Simplex& s);

} // namespace wmorse

#endif // WMORSE_COLLAPSE_HPP
