#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "caecc/rng.hpp"
#include "caecc/syndrome.hpp"

using namespace caecc;

namespace {

// Enumeration oracle: group all weight-w vectors by first-order syndrome.
std::map<long, std::vector<std::vector<int>>> cosets_by_enumeration(int n, int w, long p) {
  std::map<long, std::vector<std::vector<int>>> groups;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == w) {
      long s = 0;
      for (int i : cur) s = (s + i) % p;
      groups[s].push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return groups;
}

// Brute-force row recovery: try every e'-subset of y's zero positions and
// keep those whose restored syndromes match the target exactly.
std::vector<std::vector<std::uint8_t>> recover_oracle(const std::vector<std::uint8_t>& y,
                                                      const RowSyndrome& target, int w, long p) {
  int n = static_cast<int>(y.size());
  int weight = 0;
  for (auto b : y) weight += b;
  int deficit = w - weight;
  std::vector<int> zeros;
  for (int i = 0; i < n; ++i)
    if (!y[i]) zeros.push_back(i);
  std::vector<std::vector<std::uint8_t>> matches;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == deficit) {
      std::vector<std::uint8_t> candidate = y;
      for (int i : pick) candidate[zeros[i]] = 1;
      bool ok = true;
      for (int l = 1; l <= target.e(); ++l)
        ok = ok && vt_syndrome(candidate, l, p) == target.order(l);
      if (ok) matches.push_back(candidate);
      return;
    }
    for (int i = start; i < static_cast<int>(zeros.size()); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return matches;
}

}  // namespace

TEST_CASE("vt_syndrome on the 99th composite symbol") {
  CompositeSymbol x99 = CompositeSymbol::from_support({0, 1, 3, 6, 7}, 16);
  CHECK(vt_syndrome(x99, 1, 17).value == 0);   // 0+1+3+6+7 = 17
  CHECK(vt_syndrome(x99, 2, 17).value == 10);  // 95 mod 17
  std::vector<std::uint8_t> zero(16, 0);
  CHECK(vt_syndrome(zero, 1, 17).value == 0);
  CHECK(vt_syndrome(zero, 5, 17).value == 0);
}

TEST_CASE("complete_syndrome stacks the orders") {
  CompositeSymbol x99 = CompositeSymbol::from_support({0, 1, 3, 6, 7}, 16);
  RowSyndrome s = complete_syndrome(x99, 2, 17);
  CHECK(s.order(1).value == 0);
  CHECK(s.order(2).value == 10);
  RowSyndrome s1 = complete_syndrome(x99, 1, 17);
  CHECK(s1.e() == 1);
  CHECK(s1.order(1) == vt_syndrome(x99, 1, 17));
}

TEST_CASE("word_syndrome_vector is the rowwise lift") {
  CompositeWord x({CompositeSymbol::from_support({0, 1}, 5),
                   CompositeSymbol::from_support({1, 4}, 5),
                   CompositeSymbol::from_support({2, 3}, 5)});
  SyndromeVector v = word_syndrome_vector(x, 2, 5);
  REQUIRE(v.m() == 3);
  for (int i = 0; i < 3; ++i) CHECK(v.entries[i] == complete_syndrome(x.row(i), 2, 5));
}

TEST_CASE("removing a one at h shifts s_l by -h^l, for random rows") {
  CounterRng rng(0xabcdef12345ULL);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + static_cast<int>(rng.bounded(12));
    int w = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
    long p = smallest_prime_geq(n);
    auto sym = unrank_symbol(Int(rng.bounded(64)) % binomial(n, w), n, w);
    auto support = sym.support();
    int h = support[rng.bounded(support.size())];
    std::vector<std::uint8_t> without = sym.bits();
    without[h] = 0;
    for (int l = 1; l <= 3; ++l) {
      long expected = (vt_syndrome(sym, l, p).value - powmod(h, l, p) % p + p) % p;
      CHECK(vt_syndrome(without, l, p).value == expected);
    }
  }
}

TEST_CASE("coset table n=5 w=2 p=5") {
  CosetTable table(5, 2, 5);
  for (long s = 0; s < 5; ++s) CHECK(table.count(s) == 2);
  // syndrome 0 cosets: {1,4} then {2,3} in lexicographic support order
  CHECK(coset_unrank(FieldElement(0, 5), 0, table) == CompositeSymbol::from_support({1, 4}, 5));
  CHECK(coset_unrank(FieldElement(0, 5), 1, table) == CompositeSymbol::from_support({2, 3}, 5));
  CHECK(coset_unrank(FieldElement(1, 5), 1, table) == CompositeSymbol::from_support({2, 4}, 5));
}

TEST_CASE("coset counts match enumeration and sum to C(n,w)") {
  for (auto [n, w] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 3}, {8, 3}, {9, 4}}) {
    long p = smallest_prime_geq(n);
    CosetTable table(n, w, p);
    auto groups = cosets_by_enumeration(n, w, p);
    Int total = 0;
    for (long s = 0; s < p; ++s) {
      Int expected = groups.count(s) ? Int(groups[s].size()) : Int(0);
      CHECK(table.count(s) == expected);
      total += table.count(s);
    }
    CHECK(total == binomial(n, w));
  }
}

TEST_CASE("prime n gives equal cosets (exhaustive over w for p in 5..13)") {
  for (int n : {5, 7, 11, 13}) {
    for (int w = 1; w < n; ++w) {
      CosetTable table(n, w, n);
      Int expected = binomial(n, w) / n;
      for (long s = 0; s < n; ++s) CHECK(table.count(s) == expected);
    }
  }
}

TEST_CASE("prime n = 17 sampled coset uniformity") {
  CosetTable table(17, 5, 17);
  Int expected = binomial(17, 5) / 17;
  for (long s = 0; s < 17; ++s) CHECK(table.count(s) == expected);
}

TEST_CASE("w = n-1 counts are a permutation of the w = 1 counts") {
  for (int n : {5, 6, 8, 10}) {
    long p = smallest_prime_geq(n);
    CosetTable ones(n, 1, p);
    CosetTable complement(n, n - 1, p);
    // complementing a weight-(n-1) vector gives weight 1 and negates the
    // syndrome relative to the full-support sum T
    long T = static_cast<long>(n) * (n - 1) / 2 % p;
    for (long s = 0; s < p; ++s)
      CHECK(complement.count(s) == ones.count(((T - s) % p + p) % p));
    std::vector<Int> a = ones.counts(), b = complement.counts();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("empty cosets happen only when n < p and are reported") {
  // n=6, w=1, p=7: syndromes reach only 0..5, so coset 6 is empty
  CosetTable table(6, 1, 7);
  CHECK(table.count(6) == 0);
  CHECK_THROWS_AS(coset_unrank(FieldElement(6, 7), 0, table), Error);
  try {
    coset_unrank(FieldElement(6, 7), 0, table);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EMPTY_COSET);
  }
}

TEST_CASE("coset rank/unrank are mutually inverse for n <= 12") {
  for (auto [n, w] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {11, 4}, {12, 5}, {8, 1}}) {
    long p = smallest_prime_geq(n);
    CosetTable table(n, w, p);
    for (long s = 0; s < p; ++s) {
      Int count = table.count(s);
      for (Int j = 0; j < count; ++j) {
        CompositeSymbol sym = coset_unrank(FieldElement(s, p), j, table);
        CHECK(sym.weight() == w);
        CHECK(vt_syndrome(sym, 1, p).value == s);
        auto [s2, j2] = coset_rank(sym, table);
        CHECK(s2.value == s);
        CHECK(j2 == j);
      }
    }
  }
}

TEST_CASE("coset_unrank rejects out-of-range ranks") {
  CosetTable table(5, 2, 5);
  CHECK_THROWS_AS(coset_unrank(FieldElement(0, 5), 2, table), Error);
}

TEST_CASE("recover_row single-error worked example") {
  // p=5, y = {3}, target s_1 = 4, w = 2: missing index is 4 - 3 = 1
  std::vector<std::uint8_t> y = {0, 0, 0, 1, 0};
  RowSyndrome target{{FieldElement(4, 5)}};
  CHECK(recover_row(y, target, 2, 5) == CompositeSymbol::from_support({1, 3}, 5));
}

TEST_CASE("recover_row double-error worked example over F_7") {
  // y = {1}, w = 3, target (0,0): locator z^2 + z + 1 has roots {2,4} mod 7
  std::vector<std::uint8_t> y = {0, 1, 0, 0, 0, 0, 0};
  RowSyndrome target{{FieldElement(0, 7), FieldElement(0, 7)}};
  CHECK(recover_row(y, target, 3, 7) == CompositeSymbol::from_support({1, 2, 4}, 7));
  auto matches = recover_oracle(y, target, 3, 7);
  REQUIRE(matches.size() == 1);  // unique, as the brute-force oracle confirms
  CHECK(CompositeSymbol(matches[0], 3) == CompositeSymbol::from_support({1, 2, 4}, 7));
}

TEST_CASE("recover_row leaves full-weight rows alone") {
  std::vector<std::uint8_t> y = {1, 1, 0, 0, 0};
  RowSyndrome target{{FieldElement(1, 5)}};
  CHECK(recover_row(y, target, 2, 5) == CompositeSymbol(y, 2));
}

TEST_CASE("recover_row inverts every error pattern, exhaustively for n <= 10") {
  for (auto [n, w] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {8, 3}, {10, 4}}) {
    long p = smallest_prime_geq(n);
    int e_max = std::min(2, w);
    Int count = binomial(n, w);
    for (Int r = 0; r < count; ++r) {
      CompositeSymbol x = unrank_symbol(r, n, w);
      RowSyndrome target = complete_syndrome(x, e_max, p);
      auto support = x.support();
      // all deletion subsets of size 0..e_max
      for (std::uint32_t pick = 0; pick < (1u << w); ++pick) {
        if (std::popcount(pick) > e_max) continue;
        std::vector<std::uint8_t> y = x.bits();
        for (int b = 0; b < w; ++b)
          if (pick & (1u << b)) y[support[b]] = 0;
        CHECK(recover_row(y, target, w, p) == x);
      }
    }
  }
}

TEST_CASE("recover_row agrees with the brute-force oracle up to e' = 3") {
  for (auto [n, w] : std::vector<std::pair<int, int>>{{6, 3}, {7, 4}, {10, 4}}) {
    long p = smallest_prime_geq(n);
    Int count = binomial(n, w);
    for (Int r = 0; r < count; ++r) {
      CompositeSymbol x = unrank_symbol(r, n, w);
      RowSyndrome target = complete_syndrome(x, 3, p);
      auto support = x.support();
      for (std::uint32_t pick = 0; pick < (1u << w); ++pick) {
        if (std::popcount(pick) > 3) continue;
        std::vector<std::uint8_t> y = x.bits();
        for (int b = 0; b < w; ++b)
          if (pick & (1u << b)) y[support[b]] = 0;
        auto matches = recover_oracle(y, target, w, p);
        REQUIRE(matches.size() == 1);  // uniqueness, exhaustively
        CHECK(recover_row(y, target, w, p) == CompositeSymbol(matches[0], w));
      }
    }
  }
}

TEST_CASE("recover_row surfaces out-of-model corruption") {
  // inconsistent target: no single missing one can produce it
  std::vector<std::uint8_t> y = {0, 1, 1, 0, 0, 0, 0};  // weight 2, w=3, deficit 1
  // true completions add index h with s_1 = 3 + h; claim an s_1 whose h is
  // already a one in y (h=1 -> s_1=4 is fine; h=2 -> s_1=5 collides)
  RowSyndrome bad{{FieldElement(2 + 3, 7)}};
  CHECK_THROWS_AS(recover_row(y, bad, 3, 7), Error);
  try {
    recover_row(y, bad, 3, 7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LOCATOR_ROOT_MISMATCH);
  }
  // deficit larger than the available syndrome orders
  std::vector<std::uint8_t> empty(7, 0);
  RowSyndrome s1{{FieldElement(0, 7)}};
  CHECK_THROWS_AS(recover_row(empty, s1, 3, 7), Error);
}

TEST_CASE("an error at index 0 is recovered like any other") {
  CompositeSymbol x = CompositeSymbol::from_support({0, 4}, 5);
  RowSyndrome target = complete_syndrome(x, 1, 5);
  std::vector<std::uint8_t> y = x.bits();
  y[0] = 0;
  CHECK(recover_row(y, target, 2, 5) == x);
}
