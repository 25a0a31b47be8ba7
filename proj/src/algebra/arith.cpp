#include "slicess/arith.hpp"

#include <bit>
#include <string>

#include "slicess/error.hpp"

namespace slicess {

int nu2(std::int64_t value) {
  if (value == 0) throw Error(ErrorKind::ZERO_INPUT, "2-adic valuation of 0");
  return std::countr_zero(static_cast<std::uint64_t>(value < 0 ? -value : value));
}

int nu2(const BigInt& value) {
  if (value == 0) throw Error(ErrorKind::ZERO_INPUT, "2-adic valuation of 0");
  return static_cast<int>(boost::multiprecision::lsb(value < 0 ? BigInt(-value) : value));
}

int two_adic_valuation(const Rational& value) {
  if (value == 0) throw Error(ErrorKind::ZERO_INPUT, "2-adic valuation of 0");
  return nu2(BigInt(boost::multiprecision::numerator(value))) - nu2(BigInt(boost::multiprecision::denominator(value)));
}

int binary_length(std::uint64_t r) {
  if (r == 0) throw Error(ErrorKind::INVALID_ARGUMENT, "binary length of 0");
  return std::bit_width(r);
}

std::string rational_to_string(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value), den = boost::multiprecision::denominator(value);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace slicess
