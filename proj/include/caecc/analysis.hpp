#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "caecc/bigint.hpp"
#include "caecc/core.hpp"
#include "caecc/errors.hpp"

namespace caecc {

// ---------------------------------------------------------------------------
// e-Hamming distance and error balls
// ---------------------------------------------------------------------------

// Number of differing rows; empty when some row pair differs in more than e
// bits (the "infinite" case).
inline std::optional<int> d_eH(const CompositeWord& x, const CompositeWord& y, int e) {
  require(x.m() == y.m() && x.n() == y.n(), ErrorCode::BAD_FORMAT, "dimension mismatch");
  int differing = 0;
  for (int i = 0; i < x.m(); ++i) {
    int dh = 0;
    for (int j = 0; j < x.n(); ++j) dh += x.row(i).bit(j) != y.row(i).bit(j);
    if (dh > e) return std::nullopt;
    if (dh > 0) ++differing;
  }
  return differing;
}

namespace detail {

constexpr int kMaxEnumBits = 30;

inline void check_enumerable(int m, int n) {
  require(m * n <= kMaxEnumBits, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
          "exhaustive analysis limited to m*n <= " + std::to_string(kMaxEnumBits));
}

// Weight-w masks of n bits in lexicographic support order (= rank order).
inline std::vector<std::uint32_t> weight_masks(int n, int w) {
  std::vector<std::uint32_t> out;
  std::vector<int> support;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      std::uint32_t mask = 0;
      for (int i : support) mask |= 1u << i;
      out.push_back(mask);
      return;
    }
    for (int i = start; i <= n - remaining; ++i) {
      support.push_back(i);
      self(self, i + 1, remaining - 1);
      support.pop_back();
    }
  };
  rec(rec, 0, w);
  return out;
}

using MaskWord = std::vector<std::uint32_t>;

inline MaskWord to_masks(const CompositeWord& x) {
  MaskWord rows(x.m());
  for (int i = 0; i < x.m(); ++i)
    for (int j = 0; j < x.n(); ++j)
      if (x.row(i).bit(j)) rows[i] |= 1u << j;
  return rows;
}

inline CompositeWord to_word(const MaskWord& rows, int n) {
  std::vector<CompositeSymbol> symbols;
  symbols.reserve(rows.size());
  for (auto mask : rows) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) bits[j] = 1;
    symbols.emplace_back(std::move(bits), std::popcount(mask));
  }
  return CompositeWord(std::move(symbols));
}

inline ReceivedWord to_received(const MaskWord& rows, int n, int w) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(rows.size());
  for (auto mask : rows) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) bits[j] = 1;
    out.push_back(std::move(bits));
  }
  return ReceivedWord(std::move(out), w);
}

inline std::uint64_t pack(const MaskWord& rows, int n) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    key |= static_cast<std::uint64_t>(rows[i]) << (i * n);
  return key;
}

// All nonempty sub-masks of `ones` with at most e bits cleared... i.e. the
// results of deleting 1..e ones from the row.
inline std::vector<std::uint32_t> row_deletions(std::uint32_t row, int e) {
  std::vector<int> ones;
  for (int j = 0; j < 32; ++j)
    if (row & (1u << j)) ones.push_back(j);
  std::vector<std::uint32_t> out;
  int w = static_cast<int>(ones.size());
  for (std::uint32_t pick = 1; pick < (1u << w); ++pick) {
    if (std::popcount(pick) > e) continue;
    std::uint32_t removed = 0;
    for (int j = 0; j < w; ++j)
      if (pick & (1u << j)) removed |= 1u << ones[j];
    out.push_back(row & ~removed);
  }
  return out;
}

// Every output reachable from `rows` under the tiered deletion budget:
// at most `noisy` rows touched in total, of which at most `deep` may lose
// more than e1 (and up to e2) ones. (t1, e1, 0, e1) is the uniform family.
inline void tiered_outputs(const MaskWord& rows, int n, int noisy, int e1, int deep, int e2,
                           std::vector<std::uint64_t>& out) {
  int m = static_cast<int>(rows.size());
  std::vector<std::vector<std::uint32_t>> shallow(m), beyond(m);
  for (int i = 0; i < m; ++i) {
    shallow[i] = row_deletions(rows[i], e1);
    if (e2 > e1) {
      for (auto v : row_deletions(rows[i], e2))
        if (std::popcount(rows[i]) - std::popcount(v) > e1) beyond[i].push_back(v);
    }
  }
  MaskWord current = rows;
  auto rec = [&](auto&& self, int row, int noisy_left, int deep_left) -> void {
    if (row == m) {
      out.push_back(pack(current, n));
      return;
    }
    self(self, row + 1, noisy_left, deep_left);  // row kept clean
    if (noisy_left > 0) {
      for (auto v : shallow[row]) {
        current[row] = v;
        self(self, row + 1, noisy_left - 1, deep_left);
      }
      if (deep_left > 0) {
        for (auto v : beyond[row]) {
          current[row] = v;
          self(self, row + 1, noisy_left - 1, deep_left - 1);
        }
      }
      current[row] = rows[row];
    }
  };
  rec(rec, 0, noisy, deep);
}

// Every output reachable from `rows` under (<=t, <=e)-composite asymmetric
// errors, as packed keys.
inline void asym_outputs(const MaskWord& rows, int n, int t, int e,
                         std::vector<std::uint64_t>& out) {
  tiered_outputs(rows, n, t, e, 0, e, out);
}

}  // namespace detail

// B_{e-H}(x, t): every word of Sigma_w^{m x n} within e-Hamming distance t.
inline std::vector<CompositeWord> ball_eH(const CompositeWord& x, int t, int e) {
  detail::check_enumerable(x.m(), x.n());
  const int m = x.m(), n = x.n();
  detail::MaskWord rows = detail::to_masks(x);

  // Per-row neighbors at Hamming distance 1..e (weight-preserving, so the
  // distance is even: swap k ones with k zeros, 2k <= e).
  std::vector<std::vector<std::uint32_t>> neighbors(m);
  auto all_rows = detail::weight_masks(n, x.w());
  for (int i = 0; i < m; ++i)
    for (auto candidate : all_rows) {
      int dh = std::popcount(candidate ^ rows[i]);
      if (dh >= 1 && dh <= e) neighbors[i].push_back(candidate);
    }

  std::vector<CompositeWord> out;
  detail::MaskWord current = rows;
  auto rec = [&](auto&& self, int row, int changed_left) -> void {
    if (row == m) {
      out.push_back(detail::to_word(current, n));
      return;
    }
    self(self, row + 1, changed_left);
    if (changed_left > 0) {
      for (auto v : neighbors[row]) {
        current[row] = v;
        self(self, row + 1, changed_left - 1);
      }
      current[row] = rows[row];
    }
  };
  rec(rec, 0, t);
  return out;
}

// A_e(x): outputs of deleting up to e ones anywhere in the matrix.
inline std::vector<ReceivedWord> asym_ball(const CompositeWord& x, int e) {
  detail::check_enumerable(x.m(), x.n());
  const int n = x.n();
  detail::MaskWord rows = detail::to_masks(x);
  std::vector<std::pair<int, int>> ones;  // (row, bit)
  for (int i = 0; i < x.m(); ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i] & (1u << j)) ones.emplace_back(i, j);

  std::vector<ReceivedWord> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    detail::MaskWord y = rows;
    for (int idx : chosen) y[ones[idx].first] &= ~(1u << ones[idx].second);
    out.push_back(detail::to_received(y, n, x.w()));
    if (static_cast<int>(chosen.size()) == e) return;
    for (std::size_t i = start; i < ones.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Redundancy bounds (all reported in log2 bits, binomials exact)
// ---------------------------------------------------------------------------

struct BoundValue {
  double log2_size_ub = 0.0;   // upper bound on log2 A
  double redundancy_lb = 0.0;  // lower bound on redundancy in bits
};

inline double log2_space(int m, int n, int w) {
  return static_cast<double>(m) * log2_big(binomial(n, w));
}

// Sphere packing over radius-floor(t/2) e-Hamming balls. The ball-size count
// places exactly e/2 one->zero and e/2 zero->one flips per touched row, so
// the closed form needs e even; t < 2 degenerates to the whole space.
inline BoundValue sp_bound_ball_packing(int m, int n, int w, int t, int e) {
  require(e >= 1 && e % 2 == 0, ErrorCode::ODD_E_UNSUPPORTED_BY_FORMULA,
          "closed-form ball count requires even e");
  require(w < n, ErrorCode::W_NOT_LESS_THAN_N, "need w < n");
  require(t <= m, ErrorCode::T_EXCEEDS_M, "packing needs t <= m");
  double space = log2_space(m, n, w);
  int ht = t / 2;
  if (ht == 0) return BoundValue{space, 0.0};
  double denom_log2 =
      ht * (std::log2(static_cast<double>(m)) - std::log2(static_cast<double>(ht))) +
      (e / 2.0) * ht *
          (std::log2(4.0 * w * (n - w)) - 2.0 * std::log2(static_cast<double>(e)));
  return BoundValue{space - denom_log2, denom_log2};
}

// Packing on the first t rows only: A <= C(n,w)^m / C(n-w+e,e)^t. The proof
// form C(n,w-e)^t C(n,w)^{m-t} / C(w,e)^t is the same number; checked exactly.
inline BoundValue sp_bound_noisy_rows(int m, int n, int w, int t, int e) {
  require(e >= 0 && e <= w, ErrorCode::E_EXCEEDS_W, "need e <= w");
  require(w < n, ErrorCode::W_NOT_LESS_THAN_N, "need w < n");
  require(t <= m, ErrorCode::T_EXCEEDS_M, "packing needs t <= m");
  require(binomial(n, w) * binomial(w, e) == binomial(n, w - e) * binomial(n - w + e, e),
          ErrorCode::INCONSISTENT_CODEWORD, "packing-form identity failed");  // unreachable
  double space = log2_space(m, n, w);
  double r_lb = static_cast<double>(t) * log2_big(binomial(n - w + e, e));
  return BoundValue{space - r_lb, r_lb};
}

// Whole-word sphere-packing bound for 2-CAECCs. The displayed numerator C(n,w) is reported
// alongside the C(n,w)^m reading implied by the sphere-packing argument over
// Sigma_w^{m x n}; both appear in reports with the discrepancy flagged.
struct Bound2Caecc {
  double redundancy_lb = 0.0;        // log2(m * w * (n-w))
  double log2_size_ub_displayed = 0.0;  // log2( C(n,w) / (m w (n-w)) )
  double log2_size_ub_power_m = 0.0;    // log2( C(n,w)^m / (m w (n-w)) )
};

inline Bound2Caecc sp_bound_2caecc(int m, int n, int w) {
  require(w >= 1 && w < n && m >= 1, ErrorCode::W_NOT_LESS_THAN_N, "need 1 <= w < n, m >= 1");
  double ball_log2 = std::log2(static_cast<double>(m) * w * (n - w));
  double cnw = log2_big(binomial(n, w));
  return Bound2Caecc{ball_log2, cnw - ball_log2, m * cnw - ball_log2};
}

inline double construction_redundancy_uniform(int t, int e, long p) {
  return static_cast<double>(e) * t * std::log2(static_cast<double>(p));
}

inline double construction_redundancy_two_tier(int t1, int t2, long p) {
  return static_cast<double>(t1 + 2 * t2) * std::log2(static_cast<double>(p));
}

struct BoundReport {
  int m = 0, n = 0, w = 0, t = 0, e = 0;
  long p = 0;
  double log2_space = 0.0;
  std::optional<BoundValue> ball_packing;  // absent when e is odd
  std::string ball_packing_skip_reason;
  BoundValue noisy_rows;
  double uniform_construction_redundancy = 0.0;
  std::optional<double> two_tier_construction_redundancy;  // present when (t1, t2) supplied
  std::optional<int> t1, t2;
  Bound2Caecc two_error_ball;
};

inline BoundReport compute_bound_report(int m, int n, int w, int t, int e,
                                        std::optional<int> t1 = std::nullopt,
                                        std::optional<int> t2 = std::nullopt) {
  require(m >= 1 && n >= 2 && w >= 1 && w < n && t >= 0 && e >= 0,
          ErrorCode::NONPOSITIVE_PARAM, "bad bound parameters");
  BoundReport r;
  r.m = m;
  r.n = n;
  r.w = w;
  r.t = t;
  r.e = e;
  r.p = smallest_prime_geq(n);
  r.log2_space = caecc::log2_space(m, n, w);
  if (e % 2 == 0 && e >= 1) {
    r.ball_packing = sp_bound_ball_packing(m, n, w, t, e);
  } else {
    r.ball_packing_skip_reason = e == 0 ? "e = 0" : "odd e unsupported by the closed form";
  }
  r.noisy_rows = sp_bound_noisy_rows(m, n, w, t, std::min(e, w));
  r.uniform_construction_redundancy = construction_redundancy_uniform(t, e, r.p);
  if (t1 && t2) {
    r.t1 = t1;
    r.t2 = t2;
    r.two_tier_construction_redundancy = construction_redundancy_two_tier(*t1, *t2, r.p);
  }
  r.two_error_ball = sp_bound_2caecc(m, n, w);
  return r;
}

// ---------------------------------------------------------------------------
// Ground-truth exhaustive verification
// ---------------------------------------------------------------------------

struct CaeccCheck {
  bool ok = true;
  // When !ok: indices of two codewords and one channel output they share.
  std::optional<std::pair<int, int>> colliding;
  std::optional<ReceivedWord> shared_output;
};

// True iff no two codewords can reach the same channel output under the
// tiered budget: at most t1 + t2 noisy rows of which at most t2 lose more
// than e1 (up to e2) ones. This is the correctability definition itself, so
// it serves as the oracle for every construction and for the metric criterion.
inline CaeccCheck verify_caecc_tiered_exhaustive(const std::vector<CompositeWord>& code, int t1,
                                                 int e1, int t2, int e2) {
  CaeccCheck result;
  if (code.size() < 2) return result;
  const int n = code.front().n();
  detail::check_enumerable(code.front().m(), n);
  std::unordered_map<std::uint64_t, int> owner;
  std::vector<std::uint64_t> outputs;
  for (std::size_t idx = 0; idx < code.size(); ++idx) {
    outputs.clear();
    detail::tiered_outputs(detail::to_masks(code[idx]), n, t1 + t2, e1, t2, e2, outputs);
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    for (auto key : outputs) {
      auto [it, inserted] = owner.emplace(key, static_cast<int>(idx));
      if (!inserted && it->second != static_cast<int>(idx)) {
        result.ok = false;
        result.colliding = {it->second, static_cast<int>(idx)};
        detail::MaskWord rows(code[idx].m());
        for (int i = 0; i < code[idx].m(); ++i)
          rows[i] = static_cast<std::uint32_t>((key >> (i * n)) & ((1u << n) - 1));
        result.shared_output = detail::to_received(rows, n, code[idx].w());
        return result;
      }
    }
  }
  return result;
}

inline CaeccCheck verify_caecc_exhaustive(const std::vector<CompositeWord>& code, int t, int e) {
  return verify_caecc_tiered_exhaustive(code, t, e, 0, e);
}

// Minimum-distance side of the metric characterization: a code is a
// (t,e)-CAECC iff min d_{2e-H} >= t+1 (infinite distances satisfy any bound).
inline bool min_distance_at_least(const std::vector<CompositeWord>& code, int two_e,
                                  int threshold) {
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      auto d = d_eH(code[i], code[j], two_e);
      if (d && *d < threshold) return false;
    }
  return true;
}

struct BallConditionCheck {
  bool balls_disjoint = true;  // pairwise B_{2-H}(x,1) disjoint
  bool two_caecc = true;       // pairwise A_2(x) disjoint
};

inline BallConditionCheck verify_2caecc_ball_condition(const std::vector<CompositeWord>& code,
                                 long enumeration_budget = 5'000'000) {
  BallConditionCheck result;
  if (code.empty()) return result;
  const int n = code.front().n();
  detail::check_enumerable(code.front().m(), n);

  std::unordered_set<std::uint64_t> ball_seen, asym_seen;
  long touched = 0;
  for (const auto& x : code) {
    for (const auto& y : ball_eH(x, 1, 2)) {
      require(++touched <= enumeration_budget, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
              "ball-condition enumeration budget exceeded");
      if (!ball_seen.insert(detail::pack(detail::to_masks(y), n)).second)
        result.balls_disjoint = false;
    }
    std::vector<std::uint64_t> outs;
    detail::asym_outputs(detail::to_masks(x), n, x.m(), 2, outs);  // up to 2 errors anywhere
    std::sort(outs.begin(), outs.end());
    outs.erase(std::unique(outs.begin(), outs.end()), outs.end());
    // asym_outputs bounds errors per row by e; deleting 2 ones in one row is
    // covered by e=2, and across rows by t=m. Cap the total at 2.
    for (auto key : outs) {
      int total_deficit = 0;
      for (int i = 0; i < code.front().m(); ++i)
        total_deficit += x.w() - std::popcount(static_cast<std::uint32_t>(
                                     (key >> (i * n)) & ((1u << n) - 1)));
      if (total_deficit > 2) continue;
      require(++touched <= enumeration_budget, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
              "ball-condition enumeration budget exceeded");
      if (!asym_seen.insert(key).second) result.two_caecc = false;
    }
  }
  require(!(result.balls_disjoint && !result.two_caecc), ErrorCode::INCONSISTENT_CODEWORD,
          "ball disjointness must imply the 2-CAECC property");
  return result;
}

// Greedy packing under the exact collision predicate, iterating words in rank
// order; gives a deterministic empirical lower bound on A(m,n,w;t,e).
inline std::vector<CompositeWord> greedy_max_code(int m, int n, int w, int t, int e) {
  detail::check_enumerable(m, n);
  auto symbols = detail::weight_masks(n, w);
  std::unordered_set<std::uint64_t> used;
  std::vector<CompositeWord> code;
  std::vector<std::size_t> odo(m, 0);
  std::vector<std::uint64_t> outputs;
  detail::MaskWord rows(m);
  for (;;) {
    for (int i = 0; i < m; ++i) rows[i] = symbols[odo[i]];
    outputs.clear();
    detail::asym_outputs(rows, n, t, e, outputs);
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    bool collision = false;
    for (auto key : outputs)
      if (used.count(key)) {
        collision = true;
        break;
      }
    if (!collision) {
      used.insert(outputs.begin(), outputs.end());
      code.push_back(detail::to_word(rows, n));
    }
    int i = m - 1;
    while (i >= 0 && ++odo[i] == symbols.size()) odo[i--] = 0;
    if (i < 0) break;
  }
  return code;
}

}  // namespace caecc
