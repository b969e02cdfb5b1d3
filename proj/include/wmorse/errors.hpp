#ifndef WMORSE_ERRORS_HPP
#define WMORSE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wmorse/simplex.hpp"

namespace wmorse
{

enum class ErrorCode
{
    // structural / input (CLI exit code 2)
    EmptySimplex,
    DuplicateVertex,
    DuplicateSimplex,
    NotFaceClosed,
    DivisibilityViolation,
    NotInComplex,
    NotACycle,
    NotFreeFace,
    NotMaximal,
    ZeroWeight,
    MorseViolation,
    UnknownSymbol,
    UnweightedSymbol,
    ZeroLetterWeight,
    EmptySequence,
    EmptyComplex,
    ParseError,
    InvalidArgument,
    // failed hypotheses (CLI exit code 3)
    HypothesisFailed,
    NotCritical,
    ExtraCritical,
    NoValidAPrime,
    WSimpleFailed,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal a failed hypothesis rather than bad input.
bool is_hypothesis_failure(ErrorCode code);

/**
 * Library error. Carries a stable code, a human-readable message and the
 * simplices that witness the failure (offending pair, missing face, ...).
 */
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message,
          std::vector<Simplex> witnesses = {});

    ErrorCode code() const noexcept { return code_; }
    const std::vector<Simplex>& witnesses() const noexcept { return witnesses_; }

private:
    ErrorCode code_;
    std::vector<Simplex> witnesses_;
};

} // namespace wmorse

#endif // WMORSE_ERRORS_HPP
