#include "wmorse/errors.hpp"

#include <charconv>

#include "wmorse/numeric.hpp"

namespace wmorse
{

std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::EmptySimplex: return "EmptySimplex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorCode::NotFaceClosed: return "NotFaceClosed";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::NotInComplex: return "NotInComplex";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NotFreeFace: return "NotFreeFace";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::MorseViolation: return "MorseViolation";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnweightedSymbol: return "UnweightedSymbol";
    case ErrorCode::ZeroLetterWeight: return "ZeroLetterWeight";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::EmptyComplex: return "EmptyComplex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::ExtraCritical: return "ExtraCritical";
    case ErrorCode::NoValidAPrime: return "NoValidAPrime";
    case ErrorCode::WSimpleFailed: return "WSimpleFailed";
    }
    return "Unknown";
}

bool is_hypothesis_failure(ErrorCode code)
{
    switch (code)
    {
    case ErrorCode::HypothesisFailed:
    case ErrorCode::NotCritical:
    case ErrorCode::ExtraCritical:
    case ErrorCode::NoValidAPrime:
    case ErrorCode::WSimpleFailed:
        return true;
    default:
        return false;
    }
}

Error::Error(ErrorCode code, const std::string& message, std::vector<Simplex> witnesses)
    : std::runtime_error(message), code_(code), witnesses_(std::move(witnesses))
{
}

// ---------------------------------------------------------------------------
// numeric helpers

bool divides(const Integer& a, const Integer& b)
{
    if (a == 0)
        return b == 0;
    return b % a == 0;
}

Integer gcd(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return boost::multiprecision::abs(a / gcd(a, b) * b);
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

// cpp_int reads a leading 0 as an octal prefix; keep the text decimal.
Integer decimal(std::string_view digits)
{
    const std::size_t first = digits.find_first_not_of('0');
    if (first == std::string_view::npos)
        return 0;
    return Integer(std::string(digits.substr(first)));
}

[[noreturn]] void bad_number(std::string_view text)
{
    throw Error(ErrorCode::ParseError, "invalid number literal '" + std::string(text) + "'");
}

} // namespace

Integer parse_integer(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body))
        bad_number(text);
    Integer value = decimal(body);
    return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos)
    {
        Integer num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text))
            bad_number(text);
        Integer den = decimal(den_text);
        if (den == 0)
            bad_number(text);
        return Rational(num, den);
    }

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    // optional exponent, as produced by shortest round-trip formatting
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos)
    {
        std::string_view exp_text = body.substr(e + 1);
        auto [ptr, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                         exp_text.data() + exp_text.size(), exponent);
        if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size())
            bad_number(text);
        body = body.substr(0, e);
    }

    std::string digits;
    long scale = 0;
    if (auto dot = body.find('.'); dot != std::string_view::npos)
    {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            bad_number(text);
        digits = std::string(whole) + std::string(frac);
        scale = static_cast<long>(frac.size());
    }
    else
    {
        if (!all_digits(body))
            bad_number(text);
        digits = std::string(body);
    }
    if (digits.empty())
        bad_number(text);

    scale -= exponent;
    Rational value{decimal(digits)};
    Integer ten_power = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
    if (scale > 0)
        value /= Rational(ten_power);
    else if (scale < 0)
        value *= Rational(ten_power);
    return negative ? Rational(-value) : value;
}

std::string to_string(const Integer& value)
{
    return value.str();
}

std::string to_string(const Rational& value)
{
    if (boost::multiprecision::denominator(value) == 1)
        return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/"
           + boost::multiprecision::denominator(value).str();
}

} // namespace wmorse
