#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncode {

/// Exact arbitrary-precision rational. Interval endpoints never touch floating point.
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p/q" or "p" with an optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, e.g. "3/1", "-1/6".
std::string format_rational(const Rational& value);

/// Approximate value for display only.
double to_double(const Rational& value);

}  // namespace ncode
