#include "minperm/rational.hpp"

#include <cstdlib>

#include "minperm/error.hpp"

namespace minperm {

std::string to_string(const Rational &r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal(const Rational &r, int digits) {
  using Wide = __int128;
  Wide num = r.numerator();
  const Wide den = r.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  Wide scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  Wide q = (num * scale) / den;
  const Wide rem = (num * scale) % den;
  // round half to even
  if (2 * rem > den || (2 * rem == den && (q % 2) == 1)) ++q;

  const Wide whole = q / scale;
  Wide frac = q % scale;
  std::string frac_digits(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac_digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
    frac /= 10;
  }
  std::string out = negative && q != 0 ? "-" : "";
  out += std::to_string(static_cast<long long>(whole));
  if (digits > 0) out += "." + frac_digits;
  return out;
}

Rational parse_rational(const std::string &text) {
  const auto slash = text.find('/');
  char *end = nullptr;
  const long long num = std::strtoll(text.c_str(), &end, 10);
  if (slash == std::string::npos) {
    if (end == text.c_str() || *end != '\0') throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    return Rational(num);
  }
  if (end != text.c_str() + slash) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  const char *den_begin = text.c_str() + slash + 1;
  const long long den = std::strtoll(den_begin, &end, 10);
  if (end == den_begin || *end != '\0' || den == 0)
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  return Rational(num, den);
}

}  // namespace minperm
