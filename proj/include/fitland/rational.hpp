#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace fitland {

/// Arbitrary-precision integer for counts and search-space sizes.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational; every statistic in the toolkit is computed in this type.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical grid level. Higher level is always better.
using Level = std::int64_t;

bool is_integral(const Rational& r);

/// Largest integer <= r.
Integer floor_to_integer(const Rational& r);

double to_double(const Rational& r);

/// Always "num/den", e.g. "2/15", "-3/1".
std::string fraction_string(const Rational& r);

/// "n" when integral, "num/den" otherwise.
std::string compact_string(const Rational& r);

/// Accepts "num", "num/den", optional leading '-'.
Rational parse_rational(const std::string& text);

} // namespace fitland
