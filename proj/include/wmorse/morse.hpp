#ifndef WMORSE_MORSE_HPP
#define WMORSE_MORSE_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wmorse/collapse.hpp"
#include "wmorse/complex.hpp"
#include "wmorse/errors.hpp"
#include "wmorse/homology.hpp"

namespace wmorse
{

/// One failed condition of a discrete Morse function at `cell`.
struct MorseViolation
{
    Simplex cell;
    int condition = 1;                // 1: too many low cofacets, 2: too many high facets
    std::vector<Simplex> witnesses;   // the offending cofacets / facets
};

std::string to_string(const MorseViolation& v);

class MorseError : public Error
{
public:
    explicit MorseError(std::vector<MorseViolation> violations);
    const std::vector<MorseViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<MorseViolation> violations_;
};

/**
 * Exact-rational discrete Morse function on a fixed complex: every n-cell has
 * at most one (n+1)-coface with value <= its own and at most one (n-1)-face
 * with value >= its own. Injectivity is not assumed.
 */
class MorseFunction
{
public:
    /// Throws MorseError listing every violation; NotInComplex / InvalidArgument
    /// when the listing is not exactly total on k.
    static MorseFunction validate(const SimplicialComplex& k,
                                  std::vector<std::pair<Simplex, Rational>> values);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    const Rational& value(const Simplex& s) const;
    std::span<const Rational> values() const noexcept { return values_; }

    /// Distinct values in ascending order.
    std::vector<Rational> distinct_values() const;

private:
    MorseFunction(SimplicialComplex k, std::vector<Rational> v)
        : complex_(std::move(k)), values_(std::move(v)) {}

    SimplicialComplex complex_;
    std::vector<Rational> values_;
};

/// f(s) = dim s.
MorseFunction dimension_morse_function(const SimplicialComplex& k);

/**
 * For a full simplex on v_1 < ... < v_m: f(v_1) = 1; cells avoiding v_1 get
 * 2, 3, ... in order of dimension then lexicographically; a cell containing
 * v_1 takes the value of the cell with v_1 deleted.
 */
MorseFunction apex_pairing_morse_function(const SimplicialComplex& full_simplex);

struct CellInfo
{
    Simplex cell;
    Rational value;
    bool critical = false;
    bool w_simple = false;
    std::vector<Simplex> low_cofacets;   // (n+1)-cofaces with f <= f(cell)
    std::vector<Simplex> high_facets;    // (n-1)-faces with f >= f(cell)
    std::optional<Simplex> partner;      // the single cell above, when non-critical
};

/// Classification of every simplex, in complex order. Checks that no cell
/// fails both Morse conditions.
std::vector<CellInfo> classify(const WeightedComplex& k, const MorseFunction& f);

struct LevelSubcomplex
{
    Rational threshold;
    WeightedComplex complex;
};

/// Cells with f <= c together with all of their faces.
LevelSubcomplex level_subcomplex(const WeightedComplex& k, const MorseFunction& f, const Rational& c);

/// f(s) <= c or some proper coface t has f(t) <= c.
bool in_level_subcomplex(const SimplicialComplex& k, const MorseFunction& f, const Simplex& s,
                         const Rational& c);

struct CollapseCertificate
{
    Rational lower;
    Rational upper;
    WeightedComplex from;   // K(upper)
    WeightedComplex to;     // K(lower)
    std::vector<CollapseStep> steps;
    std::vector<PreservationVerdict> verdicts;
    std::vector<HomologyGroup> homology_from;
    std::vector<HomologyGroup> homology_to;

    bool all_same_weight() const;
    bool homology_agrees() const { return homology_from == homology_to; }
};

/**
 * Explicit collapse K(b) -> K(a) when every cell valued in (a, b] is
 * non-critical and w-simple. Throws HypothesisFailed naming the first
 * offending cell (critical / not-w-simple) or an unpairable level.
 */
CollapseCertificate morse_collapse(const WeightedComplex& k, const MorseFunction& f, const Rational& a,
                                   const Rational& b);

struct RemovalCertificate
{
    Simplex critical;
    Rational a;
    Rational b;
    Rational a_prime;
    WeightedComplex level_a_prime;     // K(a')
    WeightedComplex level_critical;    // K(f(critical))
    bool removal_matches = false;      // K(a') == K(f(critical)) minus the cell
    bool critical_is_maximal = false;  // maximal in K(f(critical))

    std::optional<Simplex> w_simple_failure;
    std::optional<CollapseCertificate> upper;   // K(b) -> K(f(critical))
    std::optional<CollapseCertificate> lower;   // K(a') -> K(a)
    std::optional<RemovalReport> relations;     // K(f(critical)) vs K(a')
    std::vector<HomologyGroup> homology_critical;   // H_*(K(f(critical)))
};

/**
 * Certificate around a single critical cell in (a, b]. Throws NotCritical,
 * ExtraCritical, NoValidAPrime, HypothesisFailed (value outside the window),
 * and WSimpleFailed only when `require_w_simple` is set.
 */
RemovalCertificate critical_window(const WeightedComplex& k, const MorseFunction& f, const Simplex& cell,
                                   const Rational& a, const Rational& b, bool require_w_simple = false);

} // namespace wmorse

#endif // WMORSE_MORSE_HPP
