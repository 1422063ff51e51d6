#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "caecc/bigint.hpp"
#include "caecc/core.hpp"
#include "caecc/errors.hpp"
#include "caecc/gf.hpp"

namespace caecc {

// ---------------------------------------------------------------------------
// VT syndromes over a prime modulus, 0-based positions
// ---------------------------------------------------------------------------

// s_l(x) = (sum_i i^l * x_i) mod p
inline FieldElement vt_syndrome(const std::vector<std::uint8_t>& x, int order, long p) {
  require(order >= 1, ErrorCode::NONPOSITIVE_PARAM, "syndrome order must be >= 1");
  long acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) acc = (acc + powmod(static_cast<long>(i), order, p)) % p;
  return FieldElement(acc, p);
}

inline FieldElement vt_syndrome(const CompositeSymbol& x, int order, long p) {
  return vt_syndrome(x.bits(), order, p);
}

// The e-tuple (s_1(x), .., s_e(x)); component l sits at index l-1.
struct RowSyndrome {
  std::vector<FieldElement> components;

  int e() const { return static_cast<int>(components.size()); }
  const FieldElement& order(int l) const { return components[l - 1]; }

  friend bool operator==(const RowSyndrome& a, const RowSyndrome& b) {
    return a.components == b.components;
  }
};

inline RowSyndrome complete_syndrome(const std::vector<std::uint8_t>& x, int e, long p) {
  RowSyndrome s;
  s.components.reserve(e);
  for (int l = 1; l <= e; ++l) s.components.push_back(vt_syndrome(x, l, p));
  return s;
}

inline RowSyndrome complete_syndrome(const CompositeSymbol& x, int e, long p) {
  return complete_syndrome(x.bits(), e, p);
}

// Rowwise syndromes of a whole matrix ("phantom syndrome vector").
struct SyndromeVector {
  std::vector<RowSyndrome> entries;

  int m() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const SyndromeVector& a, const SyndromeVector& b) {
    return a.entries == b.entries;
  }
};

inline SyndromeVector word_syndrome_vector(const CompositeWord& x, int e, long p) {
  SyndromeVector v;
  v.entries.reserve(x.m());
  for (const auto& row : x.rows()) v.entries.push_back(complete_syndrome(row, e, p));
  return v;
}

// ---------------------------------------------------------------------------
// First-order syndrome cosets and enumerative in-coset ranking (mapping E2)
// ---------------------------------------------------------------------------
// counts[s] = #{x in Sigma_w^n : s_1(x) = s mod p}. The DP walks positions
// 0..n-1 and tracks (remaining weight, partial syndrome); the same table
// ranks and unranks within a coset, enumerating supports lexicographically.

class CosetTable {
 public:
  CosetTable(int n, int w, long p) : n_(n), w_(w), p_(p) {
    require(w >= 1 && w < n, ErrorCode::W_NOT_LESS_THAN_N, "need 1 <= w < n");
    require(n <= p, ErrorCode::M_EXCEEDS_P, "need n <= p");
    // ways_[i][r][s]: choices of r positions among {i,..,n-1} with sum = s mod p
    ways_.assign(n + 1, std::vector<std::vector<Int>>(w + 1, std::vector<Int>(p, 0)));
    ways_[n][0][0] = 1;
    for (int i = n - 1; i >= 0; --i)
      for (int r = 0; r <= w; ++r)
        for (long s = 0; s < p; ++s) {
          Int acc = ways_[i + 1][r][s];
          if (r > 0) acc += ways_[i + 1][r - 1][((s - i) % p + p) % p];
          ways_[i][r][s] = std::move(acc);
        }
  }

  int n() const { return n_; }
  int w() const { return w_; }
  long p() const { return p_; }

  const Int& count(long s) const { return ways_[0][w_][s]; }

  std::vector<Int> counts() const {
    std::vector<Int> c(p_);
    for (long s = 0; s < p_; ++s) c[s] = count(s);
    return c;
  }

 private:
  friend CompositeSymbol coset_unrank(const FieldElement& s, const Int& j, const CosetTable& t);
  friend std::pair<FieldElement, Int> coset_rank(const CompositeSymbol& sym,
                                                 const CosetTable& t);

  int n_;
  int w_;
  long p_;
  std::vector<std::vector<std::vector<Int>>> ways_;
};

inline CosetTable build_coset_table(int n, int w, long p) { return CosetTable(n, w, p); }

// j-th weight-w vector with first-order syndrome s, in lexicographic support
// order. Taking position i is tried before skipping it, so smaller supports
// come first.
inline CompositeSymbol coset_unrank(const FieldElement& s, const Int& j, const CosetTable& t) {
  require(s.p == t.p(), ErrorCode::MODULUS_MISMATCH, "syndrome modulus != table");
  require(t.count(s.value) > 0, ErrorCode::EMPTY_COSET,
          "coset " + std::to_string(s.value) + " is empty");
  require(j >= 0 && j < t.count(s.value), ErrorCode::RANK_OUT_OF_RANGE,
          "in-coset rank outside [0, |coset|)");
  Int rest = j;
  long target = s.value;
  int r = t.w();
  std::vector<int> support;
  for (int i = 0; i < t.n() && r > 0; ++i) {
    const Int& with = t.ways_[i + 1][r - 1][((target - i) % t.p() + t.p()) % t.p()];
    if (rest < with) {
      support.push_back(i);
      target = ((target - i) % t.p() + t.p()) % t.p();
      --r;
    } else {
      rest -= with;
    }
  }
  return CompositeSymbol::from_support(support, t.n());
}

inline std::pair<FieldElement, Int> coset_rank(const CompositeSymbol& sym, const CosetTable& t) {
  require(sym.n() == t.n() && sym.weight() == t.w(), ErrorCode::BAD_FORMAT,
          "symbol does not match table dimensions");
  FieldElement s = vt_syndrome(sym, 1, t.p());
  Int j = 0;
  long target = s.value;
  int r = t.w();
  for (int i = 0; i < t.n() && r > 0; ++i) {
    if (sym.bit(i)) {
      target = ((target - i) % t.p() + t.p()) % t.p();
      --r;
    } else {
      j += t.ways_[i + 1][r - 1][((target - i) % t.p() + t.p()) % t.p()];
    }
  }
  return {s, j};
}

// ---------------------------------------------------------------------------
// Single-row recovery from restored syndromes (Newton-Girard + Vieta)
// ---------------------------------------------------------------------------
// y lost e' = w - weight(y) ones. The differences p_k = s_k(x) - s_k(y) are
// the power sums of the lost positions; Newton's identities turn them into
// elementary symmetric polynomials, giving the monic locator polynomial
// z^e' - sig_1 z^{e'-1} + .. + (-1)^e' sig_e'. Its roots are found by trial
// over the zero positions of y (at most n candidates; index 0 needs no
// special case since it just forces sig_e' = 0).

inline CompositeSymbol recover_row(const std::vector<std::uint8_t>& y, const RowSyndrome& target,
                                   int w, long p) {
  int n = static_cast<int>(y.size());
  int weight = 0;
  for (auto b : y) weight += b;
  int deficit = w - weight;
  require(deficit >= 0, ErrorCode::PATTERN_INVALID_FOR_WORD, "row weight exceeds w");
  require(deficit <= target.e(), ErrorCode::LOCATOR_ROOT_MISMATCH,
          "row deficit exceeds available syndrome orders");
  if (deficit == 0) return CompositeSymbol(y, w);

  // Power sums of the missing positions, from syndrome differences.
  std::vector<long> psum(deficit + 1, 0);
  for (int k = 1; k <= deficit; ++k) {
    long sy = vt_syndrome(y, k, p).value;
    psum[k] = ((target.order(k).value - sy) % p + p) % p;
  }

  // Newton: k*sig_k = sum_{i=1..k} (-1)^{i-1} sig_{k-i} p_i; k < p so the
  // division is valid.
  std::vector<long> sig(deficit + 1, 0);
  sig[0] = 1;
  for (int k = 1; k <= deficit; ++k) {
    long acc = 0;
    long sign = 1;
    for (int i = 1; i <= k; ++i) {
      acc = (acc + sign * (sig[k - i] * psum[i] % p) % p + p) % p;
      sign = -sign;
    }
    sig[k] = acc * powmod(k, p - 2, p) % p;
  }

  // Locator coefficients: z^d - sig_1 z^{d-1} + ... + (-1)^d sig_d.
  std::vector<long> locator(deficit + 1);
  long sign = 1;
  for (int k = 0; k <= deficit; ++k) {
    locator[k] = (sign * sig[k] % p + p) % p;  // coefficient of z^{d-k}
    sign = -sign;
  }

  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    if (y[i]) continue;
    long val = 0;
    for (int k = 0; k <= deficit; ++k) val = (val * i + locator[k]) % p;
    if (val == 0) roots.push_back(i);
  }
  require(static_cast<int>(roots.size()) == deficit, ErrorCode::LOCATOR_ROOT_MISMATCH,
          "locator roots do not match the weight deficit");

  std::vector<std::uint8_t> bits = y;
  for (int i : roots) bits[i] = 1;
  CompositeSymbol restored(bits, w);

  // Orders beyond the deficit were not consumed above; they must agree too.
  for (int k = deficit + 1; k <= target.e(); ++k)
    require(vt_syndrome(restored.bits(), k, p) == target.order(k),
            ErrorCode::LOCATOR_ROOT_MISMATCH, "restored row violates higher-order syndrome");
  return restored;
}

}  // namespace caecc
