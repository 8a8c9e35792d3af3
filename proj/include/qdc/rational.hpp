#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace qdc {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Accepts "a" or "a/b" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer factorial(unsigned k);

}  // namespace qdc
