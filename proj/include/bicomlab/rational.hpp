#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace bicomlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p" or "p/q" with an optional leading sign. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Reduced form with positive denominator, "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace bicomlab
