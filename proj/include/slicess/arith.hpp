#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace slicess {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) mod 2 via Lucas: 1 iff every bit of k is set in n.
inline int lucas_binomial(std::uint64_t n, std::uint64_t k) { return (k & n) == k ? 1 : 0; }

// 2-adic valuation of a nonzero integer.
int nu2(std::int64_t value);
int nu2(const BigInt& value);
// nu2(numerator) - nu2(denominator); throws ZERO_INPUT for 0.
int two_adic_valuation(const Rational& value);

// Number of binary digits of r >= 1 (l_2(1) = 1, l_2(3) = 2, l_2(4) = 3).
int binary_length(std::uint64_t r);

// floor and ceiling division for possibly negative numerators.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string rational_to_string(const Rational& value);

}  // namespace slicess
