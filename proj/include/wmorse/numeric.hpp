#ifndef WMORSE_NUMERIC_HPP
#define WMORSE_NUMERIC_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wmorse
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 0 | x iff x == 0
bool divides(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Parses "12", "-3", "1.25", "-0.5", "3/7" exactly. Throws Error(ParseError).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

} // namespace wmorse

#endif // WMORSE_NUMERIC_HPP
