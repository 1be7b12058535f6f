#include "dpsym/rational.hpp"

#include <cctype>

namespace dpsym {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ParseError("not an exact rational: '" + std::string(text) + "'");
  const BigInt d = parse_int(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(num), d);
}

std::string to_string(const Rational& r) {
  return r.str();
}

std::string to_decimal(const Rational& r, int digits) {
  using Float = boost::multiprecision::mpf_float_100;
  const Float value = Float(numerator(r)) / Float(denominator(r));
  // In scientific notation the precision counts digits after the point.
  return value.str(digits > 1 ? digits - 1 : 0, std::ios_base::scientific);
}

}  // namespace dpsym
