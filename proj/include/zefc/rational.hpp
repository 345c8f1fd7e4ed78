#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace zefc {

// All probability arithmetic in this library is exact. Floating point enters
// only through the logarithms taken at the very end of an entropy evaluation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Natural log of a positive big integer, valid even when the integer does not
// fit in a double.
inline double log_bigint(const BigInt& n) {
  if (n <= 0) return -std::numeric_limits<double>::infinity();
  const unsigned bits = boost::multiprecision::msb(n);
  if (bits < 960) return std::log(n.convert_to<double>());
  const unsigned shift = bits - 64;
  const double mantissa = BigInt(n >> shift).convert_to<double>();
  return std::log(mantissa) + static_cast<double>(shift) * std::log(2.0);
}

// Natural log of a positive rational.
inline double log_rational(const Rational& r) {
  return log_bigint(numerator(r)) - log_bigint(denominator(r));
}

}  // namespace zefc
