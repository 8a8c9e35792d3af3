#include "qdc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qdc {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(s.substr(0, slash), text);
  std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

Integer factorial(unsigned k) {
  Integer r = 1;
  for (unsigned j = 2; j <= k; ++j) r *= j;
  return r;
}

}  // namespace qdc
