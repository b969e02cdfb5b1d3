#ifndef WMORSE_SEQUENCE_HPP
#define WMORSE_SEQUENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wmorse/complex.hpp"
#include "wmorse/homology.hpp"

namespace wmorse
{

/// Finite set of single-character symbols.
class Alphabet
{
public:
    static Alphabet dna();      // ACGT
    static Alphabet rna();      // ACGU
    static Alphabet binary();   // 01
    static Alphabet hex();      // 0-9, A-F
    static Alphabet custom(std::string_view symbols);

    /// "dna", "rna", "bin", "hex"; anything else is read as a literal symbol list.
    static Alphabet from_name(std::string_view name);

    const std::string& symbols() const noexcept { return symbols_; }
    bool contains(char c) const noexcept { return symbols_.find(c) != std::string::npos; }

private:
    explicit Alphabet(std::string symbols);
    std::string symbols_;
};

class Sequence
{
public:
    /// Throws EmptySequence or UnknownSymbol.
    static Sequence parse(std::string_view text, const Alphabet& alphabet);

    const std::string& str() const noexcept { return text_; }
    std::size_t size() const noexcept { return text_.size(); }

private:
    explicit Sequence(std::string text) : text_(std::move(text)) {}
    std::string text_;
};

/**
 * Distinct proper nonempty substrings of a sequence, ordered by the
 * substring relation. Elements are sorted lexicographically; that order is
 * also the vertex numbering of the order complex.
 */
class SubstringPoset
{
public:
    explicit SubstringPoset(std::vector<std::string> elements);

    const std::vector<std::string>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// elements()[i] is a substring of elements()[j] (reflexive).
    bool precedes(std::size_t i, std::size_t j) const { return relation_[i * elements_.size() + j] != 0; }
    std::optional<std::size_t> index_of(std::string_view s) const;

private:
    std::vector<std::string> elements_;
    std::vector<char> relation_;
};

SubstringPoset substrings(const Sequence& s);

struct OrderComplex
{
    SimplicialComplex complex;
    std::vector<std::string> names;   // vertex id -> substring
};

/// Chains of the poset; max_dim caps the simplex dimension.
OrderComplex order_complex(const SubstringPoset& p, std::optional<int> max_dim = std::nullopt);

enum class WocType
{
    Type1 = 1,   // strings: lcm, chains: lcm
    Type2 = 2,   // strings: lcm, chains: product
    Type3 = 3,   // strings: product, chains: lcm
    Type4 = 4,   // strings: product, chains: product
};

WocType woc_type_from_int(int t);

using LetterWeights = std::map<char, Integer>;

/// Parses "A=1,C=2,G=3,T=4".
LetterWeights parse_letter_weights(std::string_view text);

struct WeightedOrderComplex
{
    WeightedComplex complex;
    std::vector<std::string> names;
};

/// Weight of one substring under the string rule of `t`.
Integer string_weight(std::string_view s, const LetterWeights& weights, WocType t);

/**
 * Weighted order complex of the proper-substring poset. Throws
 * UnweightedSymbol / ZeroLetterWeight (non-positive weights), and the
 * divisibility condition is re-validated on the result.
 */
WeightedOrderComplex build_woc(const Sequence& s, const LetterWeights& weights, WocType t,
                               std::optional<int> max_dim = std::nullopt);

/// Weighted homology H_0 .. H_top of the weighted order complex.
std::vector<HomologyGroup> sequence_fingerprint(const Sequence& s, const LetterWeights& weights, WocType t,
                                                std::optional<int> max_dim = std::nullopt);

} // namespace wmorse

#endif // WMORSE_SEQUENCE_HPP
