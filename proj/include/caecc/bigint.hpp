#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

#include "caecc/errors.hpp"

namespace caecc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) by the multiplicative formula; every intermediate division is exact.
inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Int ipow(Int base, unsigned long exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// floor(log2 x) for x >= 1.
inline long floor_log2(const Int& x) {
  require(x > 0, ErrorCode::NONPOSITIVE_PARAM, "floor_log2 needs a positive argument");
  return static_cast<long>(boost::multiprecision::msb(x));
}

// log2 of a big integer, accurate to double precision regardless of magnitude:
// take the top 64 bits as mantissa and add the shifted-out exponent back.
inline double log2_big(const Int& x) {
  require(x > 0, ErrorCode::NONPOSITIVE_PARAM, "log2_big needs a positive argument");
  long bits = floor_log2(x);
  if (bits <= 62) return std::log2(static_cast<double>(x.convert_to<std::uint64_t>()));
  long shift = bits - 62;
  Int top = x >> shift;
  return std::log2(static_cast<double>(top.convert_to<std::uint64_t>())) + static_cast<double>(shift);
}

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

}  // namespace caecc
