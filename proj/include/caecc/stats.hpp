#pragma once

#include <vector>

#include "caecc/bigint.hpp"
#include "caecc/errors.hpp"

namespace caecc {

// Occupancy law of R uniform draws over a row's w shortmers:
// q[j] = P(exactly j of the w shortmers unobserved)
//      = C(w,j) * sum_{i=0}^{w-j} (-1)^i C(w-j,i) ((w-j-i)/w)^R.
// Kept as exact integers over the common denominator w^R so the
// distribution sums to 1 exactly and monotonicity checks are rational.
struct MissDistribution {
  int w = 0;
  long R = 0;
  Int denominator;             // w^R
  std::vector<Int> numerators;  // size w+1

  Rational q(int j) const { return Rational(numerators[j], denominator); }
  double q_double(int j) const { return to_double(q(j)); }

  Rational sum() const {
    Int total = 0;
    for (const auto& v : numerators) total += v;
    return Rational(total, denominator);
  }
};

inline MissDistribution miss_distribution(int w, long R) {
  require(w >= 1, ErrorCode::NONPOSITIVE_PARAM, "need w >= 1");
  require(R >= 0, ErrorCode::NONPOSITIVE_PARAM, "need R >= 0");
  std::vector<Int> pw(w + 1);  // pw[k] = k^R, with 0^0 = 1
  for (int k = 0; k <= w; ++k) pw[k] = ipow(Int(k), static_cast<unsigned long>(R));

  MissDistribution dist;
  dist.w = w;
  dist.R = R;
  dist.denominator = pw[w];
  dist.numerators.assign(w + 1, 0);
  for (int j = 0; j <= w; ++j) {
    Int acc = 0;
    for (int i = 0; i + j <= w; ++i) {
      Int term = binomial(w - j, i) * pw[w - j - i];
      acc += (i % 2 == 0) ? term : -term;
    }
    dist.numerators[j] = binomial(w, j) * acc;
  }
  return dist;
}

// P(at least e of the w shortmers unobserved) = sum_{j>=e} q[j].
inline Rational p_at_least_e(const MissDistribution& dist, int e) {
  require(e >= 0 && e <= dist.w, ErrorCode::NONPOSITIVE_PARAM, "need 0 <= e <= w");
  Int num = 0;
  for (int j = e; j <= dist.w; ++j) num += dist.numerators[j];
  return Rational(num, dist.denominator);
}

inline Rational p_at_least_e(int e, int w, long R) {
  return p_at_least_e(miss_distribution(w, R), e);
}

// P(a length-m word decodes): every row misses <= e shortmers and at most t
// rows miss any, i.e. sum_{k=0}^{t} C(m,k) q0^{m-k} (q1+..+qe)^k.
inline Rational p_word_success(const MissDistribution& dist, int t, int e, int m) {
  require(t >= 0 && t <= m && e >= 0 && m >= 1, ErrorCode::NONPOSITIVE_PARAM,
          "need 0 <= t <= m, e >= 0");
  Rational q0 = dist.q(0);
  Rational q_err = 0;
  for (int j = 1; j <= e && j <= dist.w; ++j) q_err += dist.q(j);
  Rational total = 0;
  for (int k = 0; k <= t; ++k) {
    Rational term(binomial(m, k));
    for (int i = 0; i < m - k; ++i) term *= q0;
    for (int i = 0; i < k; ++i) term *= q_err;
    total += term;
  }
  return total;
}

inline Rational p_word_success(int t, int e, int w, long R, int m) {
  return p_word_success(miss_distribution(w, R), t, e, m);
}

}  // namespace caecc
