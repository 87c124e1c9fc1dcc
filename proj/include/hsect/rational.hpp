#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsect {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Lowest terms, positive denominator, no slash for integers.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace hsect
