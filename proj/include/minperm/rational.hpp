#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace minperm {

/// Exact rational used for every normalized degree. Always kept in lowest terms.
using Rational = boost::rational<std::int64_t>;

/// "n/d", or just "n" when the denominator is 1.
std::string to_string(const Rational &r);

/// Decimal rendering rounded half-to-even at `digits` fractional digits.
std::string to_decimal(const Rational &r, int digits = 12);

/// Parses "n" or "n/d".
Rational parse_rational(const std::string &text);

}  // namespace minperm
