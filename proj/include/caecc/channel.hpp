#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "caecc/bigint.hpp"
#include "caecc/codec.hpp"
#include "caecc/core.hpp"
#include "caecc/errors.hpp"
#include "caecc/rng.hpp"

namespace caecc {

// ---------------------------------------------------------------------------
// Error patterns
// ---------------------------------------------------------------------------

// Positions of deleted ones, per row. Entries must be distinct within a row
// and carry value 1 in the word the pattern is applied to.
struct ErrorPattern {
  std::vector<std::vector<int>> deletions;

  int rows_used() const {
    int k = 0;
    for (const auto& row : deletions) k += !row.empty();
    return k;
  }

  int max_per_row() const {
    std::size_t e = 0;
    for (const auto& row : deletions) e = std::max(e, row.size());
    return static_cast<int>(e);
  }
};

inline ReceivedWord inject_errors(const CompositeWord& x, const ErrorPattern& pattern) {
  require(static_cast<int>(pattern.deletions.size()) == x.m(),
          ErrorCode::PATTERN_INVALID_FOR_WORD, "pattern row count != m");
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(x.m());
  for (int i = 0; i < x.m(); ++i) {
    std::vector<std::uint8_t> row = x.row(i).bits();
    for (int pos : pattern.deletions[i]) {
      require(pos >= 0 && pos < x.n(), ErrorCode::PATTERN_INVALID_FOR_WORD,
              "deletion position out of range");
      require(row[pos] == 1, ErrorCode::PATTERN_INVALID_FOR_WORD,
              "deletion at a position that is not a one");
      row[pos] = 0;
    }
    rows.push_back(std::move(row));
  }
  return ReceivedWord(std::move(rows), x.w());
}

// Number of (<=t, <=e) patterns on a word with m rows of weight w:
// sum_k C(m,k) * (sum_{j=1..e} C(w,j))^k.
inline Int count_patterns(int m, int w, int t, int e) {
  Int per_row = 0;
  for (int j = 1; j <= e && j <= w; ++j) per_row += binomial(w, j);
  Int total = 0;
  for (int k = 0; k <= t && k <= m; ++k) total += binomial(m, k) * ipow(per_row, k);
  return total;
}

// Visits every pattern with at most t noisy rows and 1..e deletions per noisy
// row, each exactly once (the empty pattern included).
template <typename Fn>
inline void for_each_pattern(const CompositeWord& x, int t, int e, Fn&& fn) {
  const int m = x.m();
  require(x.w() <= 30, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
          "pattern enumeration limited to w <= 30");
  // Per-row deletion choices: nonempty subsets of the support, size <= e.
  std::vector<std::vector<std::vector<int>>> row_choices(m);
  for (int i = 0; i < m; ++i) {
    std::vector<int> support = x.row(i).support();
    int w = static_cast<int>(support.size());
    for (std::uint32_t pick = 1; pick < (1u << w); ++pick) {
      if (std::popcount(pick) > e) continue;
      std::vector<int> positions;
      for (int j = 0; j < w; ++j)
        if (pick & (1u << j)) positions.push_back(support[j]);
      row_choices[i].push_back(std::move(positions));
    }
  }
  ErrorPattern pattern;
  pattern.deletions.assign(m, {});
  auto rec = [&](auto&& self, int row, int noisy_left) -> void {
    if (row == m) {
      fn(pattern);
      return;
    }
    self(self, row + 1, noisy_left);
    if (noisy_left > 0) {
      for (const auto& choice : row_choices[row]) {
        pattern.deletions[row] = choice;
        self(self, row + 1, noisy_left - 1);
      }
      pattern.deletions[row].clear();
    }
  };
  rec(rec, 0, t);
}

inline std::vector<ErrorPattern> enumerate_patterns(const CompositeWord& x, int t, int e,
                                                    const Int& budget = Int(1'000'000)) {
  require(count_patterns(x.m(), x.w(), t, e) <= budget, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
          "pattern count exceeds the enumeration budget");
  std::vector<ErrorPattern> out;
  for_each_pattern(x, t, e, [&](const ErrorPattern& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Read-level model: each read observes one shortmer per row, uniformly from
// that row's support (one whole molecule per read).
// ---------------------------------------------------------------------------

struct ReadSet {
  int m = 0, n = 0, w = 0;
  std::vector<std::vector<int>> reads;  // each entry: m indices

  friend bool operator==(const ReadSet& a, const ReadSet& b) {
    return a.m == b.m && a.n == b.n && a.w == b.w && a.reads == b.reads;
  }
};

inline ReadSet sample_reads(const CompositeWord& x, long R, std::uint64_t seed) {
  require(R >= 0, ErrorCode::NONPOSITIVE_PARAM, "read count must be >= 0");
  std::vector<std::vector<int>> supports;
  supports.reserve(x.m());
  for (const auto& row : x.rows()) supports.push_back(row.support());
  CounterRng rng(seed);
  ReadSet rs{x.m(), x.n(), x.w(), {}};
  rs.reads.reserve(R);
  for (long r = 0; r < R; ++r) {
    std::vector<int> read(x.m());
    for (int i = 0; i < x.m(); ++i)
      read[i] = supports[i][rng.bounded(supports[i].size())];
    rs.reads.push_back(std::move(read));
  }
  return rs;
}

inline ReceivedWord aggregate_reads(const ReadSet& rs) {
  std::vector<std::vector<std::uint8_t>> rows(rs.m, std::vector<std::uint8_t>(rs.n, 0));
  for (const auto& read : rs.reads) {
    require(static_cast<int>(read.size()) == rs.m, ErrorCode::BAD_FORMAT,
            "read length != m");
    for (int i = 0; i < rs.m; ++i) {
      require(read[i] >= 0 && read[i] < rs.n, ErrorCode::BAD_FORMAT, "read index out of range");
      rows[i][read[i]] = 1;
    }
  }
  return ReceivedWord(std::move(rows), rs.w);
}

// ---------------------------------------------------------------------------
// Monte Carlo harness
// ---------------------------------------------------------------------------

enum class SimMode { Pattern, Reads };

inline const char* to_string(SimMode m) {
  return m == SimMode::Pattern ? "pattern" : "reads";
}

struct SimReport {
  int m = 0, n = 0, w = 0, t = 0, e = 0;
  std::string variant;
  SimMode mode = SimMode::Pattern;
  long reads_per_trial = 0;  // reads mode only
  long trials = 0;
  long successes = 0;
  long decode_failures = 0;
  long miscorrections = 0;
  std::uint64_t seed = 0;
  // deficit_hist[i][d]: trials in which row i arrived with weight w - d
  std::vector<std::vector<long>> deficit_hist;

  double success_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

// Per trial: random payload -> encode -> corrupt -> decode -> classify.
// Pattern mode draws an in-budget pattern: k ~ U{0..t} noisy rows chosen
// without replacement, each losing U{1..e} ones at uniform support positions.
// Reads mode aggregates R uniform reads. Decode errors are classified as
// failures, never propagated. Trial `i` draws from CounterRng::derive(seed,i),
// so partitioned runs reproduce serial ones bit for bit.
inline SimReport monte_carlo(const CodeSpec& spec, SimMode mode, long reads_per_trial,
                             long trials, std::uint64_t seed,
                             ReadSet* capture_first_reads = nullptr) {
  require(spec.encoder_supported(), ErrorCode::UNSUPPORTED_VARIANT,
          "simulation needs the explicit encoder (uniform e=1, n = p prime)");
  require(trials >= 0, ErrorCode::NONPOSITIVE_PARAM, "trials must be >= 0");
  if (mode == SimMode::Reads)
    require(reads_per_trial >= 0, ErrorCode::NONPOSITIVE_PARAM, "reads must be >= 0");

  const CodeParams& prm = spec.params();
  SimReport report;
  report.m = prm.m;
  report.n = prm.n;
  report.w = prm.w;
  report.t = prm.t;
  report.e = prm.e;
  report.variant = to_string(spec.variant());
  report.mode = mode;
  report.reads_per_trial = mode == SimMode::Reads ? reads_per_trial : 0;
  report.trials = trials;
  report.seed = seed;
  report.deficit_hist.assign(prm.m, std::vector<long>(prm.w + 1, 0));

  const long bits = spec.payload_bits();
  for (long trial = 0; trial < trials; ++trial) {
    CounterRng rng = CounterRng::derive(seed, static_cast<std::uint64_t>(trial));
    Payload payload;
    payload.bits.reserve(bits);
    for (long b = 0; b < bits; ++b)
      payload.bits.push_back(static_cast<std::uint8_t>(rng.next() & 1));
    CompositeWord x = encode(payload, spec);

    ReceivedWord y = ReceivedWord::from_word(x);
    if (mode == SimMode::Pattern) {
      int k = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(prm.t) + 1));
      ErrorPattern pattern;
      pattern.deletions.assign(prm.m, {});
      for (int row : rng.sample_without_replacement(prm.m, k)) {
        int cnt = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(prm.e)));
        std::vector<int> support = x.row(row).support();
        for (int pick : rng.sample_without_replacement(prm.w, cnt))
          pattern.deletions[row].push_back(support[pick]);
      }
      y = inject_errors(x, pattern);
    } else {
      ReadSet rs = sample_reads(x, reads_per_trial, rng.next());
      if (trial == 0 && capture_first_reads != nullptr) *capture_first_reads = rs;
      y = aggregate_reads(rs);
    }

    for (int i = 0; i < prm.m; ++i) ++report.deficit_hist[i][prm.w - y.row_weight(i)];

    try {
      Payload decoded = decode(y, spec);
      if (decoded == payload)
        ++report.successes;
      else
        ++report.miscorrections;
    } catch (const Error&) {
      ++report.decode_failures;
    }
  }
  return report;
}

}  // namespace caecc
