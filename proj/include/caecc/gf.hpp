#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caecc/core.hpp"
#include "caecc/errors.hpp"

namespace caecc {

// Element of the prime field F_p. Operations check that moduli agree.
struct FieldElement {
  long value = 0;
  long p = 0;

  FieldElement() = default;
  FieldElement(long v, long prime) : p(prime) {
    require(prime >= 2, ErrorCode::NONPOSITIVE_PARAM, "modulus must be >= 2");
    value = v % prime;
    if (value < 0) value += prime;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value == b.value && a.p == b.p;
  }
};

namespace detail {
inline void check_same_modulus(const FieldElement& a, const FieldElement& b) {
  require(a.p == b.p, ErrorCode::MODULUS_MISMATCH, "field elements from different F_p");
}
}  // namespace detail

inline FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  detail::check_same_modulus(a, b);
  return FieldElement(a.value + b.value, a.p);
}

inline FieldElement field_sub(const FieldElement& a, const FieldElement& b) {
  detail::check_same_modulus(a, b);
  return FieldElement(a.value - b.value, a.p);
}

inline FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  detail::check_same_modulus(a, b);
  return FieldElement(a.value * b.value % a.p, a.p);
}

inline long powmod(long base, long exp, long p) {
  long r = 1;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

inline FieldElement field_inv(const FieldElement& a) {
  require(a.value != 0, ErrorCode::DIVISION_BY_ZERO, "no inverse of 0 in F_p");
  return FieldElement(powmod(a.value, a.p - 2, a.p), a.p);  // Fermat, p prime
}

inline FieldElement field_div(const FieldElement& a, const FieldElement& b) {
  return field_mul(a, field_inv(b));
}

inline FieldElement field_neg(const FieldElement& a) { return FieldElement(-a.value, a.p); }

// ---------------------------------------------------------------------------
// Systematic [m, k] Reed-Solomon erasure code over F_p, evaluation points
// 0..m-1. The codeword is (f(0),..,f(m-1)) for the unique polynomial f of
// degree < k with f(i) = payload[i] on the first k points, so the prefix is
// the payload itself and any k coordinates determine the rest.
// ---------------------------------------------------------------------------

struct ErasureCodeSpec {
  int m = 0;   // code length
  int k = 0;   // dimension, m - t
  long p = 0;  // field prime

  ErasureCodeSpec(int length, int dim, long prime) : m(length), k(dim), p(prime) {
    require(dim >= 1 && dim <= length, ErrorCode::NONPOSITIVE_PARAM, "need 1 <= k <= m");
    require(length <= prime, ErrorCode::M_EXCEEDS_P, "need m <= p for distinct points");
    require(is_prime(prime), ErrorCode::NONPOSITIVE_PARAM, "modulus must be prime");
  }

  int t() const { return m - k; }
};

namespace detail {

// Lagrange evaluation at x of the polynomial through (xs[i], ys[i]).
inline long lagrange_eval(const std::vector<long>& xs, const std::vector<long>& ys, long x,
                          long p) {
  long acc = 0;
  int k = static_cast<int>(xs.size());
  for (int j = 0; j < k; ++j) {
    long num = 1, den = 1;
    for (int l = 0; l < k; ++l) {
      if (l == j) continue;
      num = num * ((x - xs[l]) % p + p) % p;
      den = den * ((xs[j] - xs[l]) % p + p) % p;
    }
    acc = (acc + ys[j] % p * num % p * powmod(den, p - 2, p)) % p;
  }
  return acc;
}

}  // namespace detail

inline std::vector<FieldElement> rs_extend(const std::vector<FieldElement>& payload,
                                           const ErasureCodeSpec& spec) {
  require(static_cast<int>(payload.size()) == spec.k, ErrorCode::PAYLOAD_LENGTH_MISMATCH,
          "payload length != k");
  std::vector<long> xs(spec.k), ys(spec.k);
  for (int i = 0; i < spec.k; ++i) {
    require(payload[i].p == spec.p, ErrorCode::MODULUS_MISMATCH, "payload modulus != spec");
    xs[i] = i;
    ys[i] = payload[i].value;
  }
  std::vector<FieldElement> out = payload;
  out.reserve(spec.m);
  for (int x = spec.k; x < spec.m; ++x)
    out.emplace_back(detail::lagrange_eval(xs, ys, x, spec.p), spec.p);
  return out;
}

// Recovers the codeword from any >= k known coordinates. Extra known
// coordinates are cross-checked against the interpolant; a mismatch means
// the word was not a codeword (the error pattern left the model).
inline std::vector<FieldElement> rs_erasure_decode(
    const std::vector<std::optional<FieldElement>>& received, const ErasureCodeSpec& spec) {
  require(static_cast<int>(received.size()) == spec.m, ErrorCode::PAYLOAD_LENGTH_MISMATCH,
          "received length != m");
  std::vector<long> xs, ys;
  for (int i = 0; i < spec.m; ++i) {
    if (!received[i]) continue;
    require(received[i]->p == spec.p, ErrorCode::MODULUS_MISMATCH, "element modulus != spec");
    if (static_cast<int>(xs.size()) < spec.k) {
      xs.push_back(i);
      ys.push_back(received[i]->value);
    }
  }
  require(static_cast<int>(xs.size()) == spec.k, ErrorCode::TOO_MANY_ERASURES,
          "fewer than k coordinates known");
  std::vector<FieldElement> out;
  out.reserve(spec.m);
  for (int x = 0; x < spec.m; ++x) {
    FieldElement v(detail::lagrange_eval(xs, ys, x, spec.p), spec.p);
    if (received[x] && received[x]->value != v.value)
      raise(ErrorCode::INCONSISTENT_CODEWORD,
            "known coordinate " + std::to_string(x) + " disagrees with interpolant");
    out.push_back(v);
  }
  return out;
}

inline bool rs_is_codeword(const std::vector<FieldElement>& word, const ErasureCodeSpec& spec) {
  if (static_cast<int>(word.size()) != spec.m) return false;
  if (spec.k == spec.m) return true;
  std::vector<long> xs(spec.k), ys(spec.k);
  for (int i = 0; i < spec.k; ++i) {
    xs[i] = i;
    ys[i] = word[i].value;
  }
  for (int x = spec.k; x < spec.m; ++x)
    if (detail::lagrange_eval(xs, ys, x, spec.p) != word[x].value) return false;
  return true;
}

}  // namespace caecc
