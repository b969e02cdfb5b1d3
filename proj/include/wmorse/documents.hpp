#ifndef WMORSE_DOCUMENTS_HPP
#define WMORSE_DOCUMENTS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmorse/complex.hpp"
#include "wmorse/homology.hpp"

namespace wmorse
{

// JSON document formats used by the command line tool.
//
// complex:  {"simplices": [{"vertices": [0, 1], "weight": 2}, ...],
//            "names": {"0": "C", ...}}                       (names optional)
// morse:    {"values": [{"vertices": [0, 1], "value": "3/2"}, ...]}
// steps:    {"steps": [[1, 2], [1], ...]}
//
// Weights may be JSON integers or decimal strings (arbitrary precision).
// Morse values may be integers, decimal strings or "p/q" strings.

struct ComplexDocument
{
    WeightedComplex complex;
    std::map<Vertex, std::string> names;
};

/**
 * Parses and validates a complex document. With `constant_weight`, records
 * may omit "weight", may list maximal faces only, and the face closure is
 * filled with that weight. Throws ParseError (with line) or the validation
 * errors of WeightedComplex; an empty listing is EmptyComplex.
 */
ComplexDocument parse_complex_document(std::string_view text,
                                       const std::optional<Integer>& constant_weight = std::nullopt);

std::string emit_complex_document(const WeightedComplex& k, std::span<const std::string> names = {});

std::vector<std::pair<Simplex, Rational>> parse_morse_document(std::string_view text);

std::vector<Simplex> parse_steps_document(std::string_view text);

struct FastaRecord
{
    std::string header;
    std::string sequence;
};

/// '>' header lines, sequence lines concatenated, blank lines and ';' comments ignored.
std::vector<FastaRecord> parse_fasta(std::string_view text);

/// One "H<k> = ..." line per dimension.
std::string format_homology(std::span<const HomologyGroup> groups);

/// Single-line form "H0 = ... | H1 = ...".
std::string format_homology_inline(std::span<const HomologyGroup> groups);

std::string read_file(const std::string& path);

} // namespace wmorse

#endif // WMORSE_DOCUMENTS_HPP
