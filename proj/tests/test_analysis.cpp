#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "caecc/analysis.hpp"
#include "caecc/codec.hpp"
#include "caecc/rng.hpp"

using namespace caecc;

namespace {

CompositeWord word_from_supports(const std::vector<std::vector<int>>& supports, int n) {
  std::vector<CompositeSymbol> rows;
  for (const auto& s : supports) rows.push_back(CompositeSymbol::from_support(s, n));
  return CompositeWord(std::move(rows));
}

std::vector<CompositeWord> random_code(CounterRng& rng, int m, int n, int w, int size) {
  Int count = binomial(n, w);
  std::set<std::vector<Int>> picked;
  std::vector<CompositeWord> code;
  while (static_cast<int>(code.size()) < size) {
    std::vector<Int> ranks;
    std::vector<CompositeSymbol> rows;
    for (int i = 0; i < m; ++i) {
      Int r = Int(rng.bounded(1'000'000'000)) % count;
      ranks.push_back(r);
      rows.push_back(unrank_symbol(r, n, w));
    }
    if (picked.insert(ranks).second) code.emplace_back(std::move(rows));
  }
  return code;
}

}  // namespace

TEST_CASE("e-Hamming distance") {
  CompositeWord x = word_from_supports({{0, 1}, {2, 3}}, 5);
  CHECK(d_eH(x, x, 1) == 0);
  CompositeWord y = word_from_supports({{0, 2}, {2, 3}}, 5);  // row 0 transposed: d_H = 2
  CHECK(d_eH(x, y, 2) == 1);
  CHECK(!d_eH(x, y, 1).has_value());  // infinite at e = 1
}

TEST_CASE("ball_eH sizes") {
  CompositeWord x = word_from_supports({{0, 1, 2}, {1, 2, 3}, {0, 2, 4}, {3, 4, 5}}, 6);
  auto radius0 = ball_eH(x, 0, 2);
  REQUIRE(radius0.size() == 1);
  CHECK(radius0[0] == x);
  // one row may swap one 1 with one 0: 4 rows x 3x3 swaps, plus x itself
  CHECK(ball_eH(x, 1, 2).size() == 37);
}

TEST_CASE("ball sizes are position invariant") {
  CounterRng rng(77);
  auto code = random_code(rng, 2, 5, 2, 12);
  std::size_t expected = ball_eH(code[0], 1, 2).size();
  for (const auto& x : code) CHECK(ball_eH(x, 1, 2).size() == expected);
}

TEST_CASE("asym_ball sizes follow the one-deletion counts") {
  CompositeWord x = word_from_supports({{0, 1}, {2, 4}, {1, 3}}, 5);
  int mw = 3 * 2;
  CHECK(asym_ball(x, 0).size() == 1);
  CHECK(asym_ball(x, 1).size() == 1 + mw);
  CHECK(Int(asym_ball(x, 2).size()) == 1 + mw + binomial(mw, 2));
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(ball_eH(word_from_supports({{0, 1, 2, 3, 4}}, 31), 1, 2), Error);
}

TEST_CASE("ball-packing bound at the reference comparison point") {
  BoundValue b = sp_bound_ball_packing(17, 17, 9, 2, 2);
  // log2(17) + log2(17^2 - 1) - 2, the n = 17 instance of the closing formula
  double closing = std::log2(17.0) + std::log2(288.0) - 2.0;
  CHECK(b.redundancy_lb == doctest::Approx(closing).epsilon(1e-9));
  CHECK(b.redundancy_lb == doctest::Approx(10.2574).epsilon(1e-3));
}

TEST_CASE("ball-packing bound degenerate and unsupported inputs") {
  for (int t : {0, 1}) {  // floor(t/2) = 0 degenerates to the whole space
    BoundValue degenerate = sp_bound_ball_packing(4, 6, 3, t, 2);
    CHECK(degenerate.redundancy_lb == 0.0);
    CHECK(degenerate.log2_size_ub == doctest::Approx(log2_space(4, 6, 3)));
  }
  CHECK_THROWS_AS(sp_bound_ball_packing(4, 6, 3, 2, 1), Error);  // odd e
  try {
    sp_bound_ball_packing(4, 6, 3, 2, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ODD_E_UNSUPPORTED_BY_FORMULA);
  }
}

TEST_CASE("noisy-row packing bound and its two equal forms") {
  BoundValue b = sp_bound_noisy_rows(17, 17, 9, 2, 2);
  CHECK(b.redundancy_lb == doctest::Approx(2.0 * std::log2(45.0)).epsilon(1e-9));
  CHECK(b.redundancy_lb == doctest::Approx(10.98).epsilon(1e-3));
  // the identity behind the proof form, exact over >10^3 grid points
  long points = 0;
  for (int n = 2; n <= 18; ++n)
    for (int w = 1; w < n; ++w)
      for (int e = 0; e <= w; ++e, ++points)
        CHECK(binomial(n, w) * binomial(w, e) == binomial(n, w - e) * binomial(n - w + e, e));
  CHECK(points > 1000);
}

TEST_CASE("noisy-row packing bound edge cases") {
  // e = w collapses the bound to t log2 C(n,w)
  BoundValue b = sp_bound_noisy_rows(3, 7, 3, 2, 3);
  CHECK(b.redundancy_lb == doctest::Approx(2.0 * log2_big(binomial(7, 3))));
  CHECK(sp_bound_noisy_rows(3, 7, 3, 0, 2).redundancy_lb == 0.0);
}

TEST_CASE("noisy-row bound at w=(n+1)/2, e=2, t=2 equals 2 log2((n^2+4n+3)/8)") {
  // Direct substitution: C(n-w+2, 2) with w=(n+1)/2 is (n+3)(n+1)/8. The
  // bound is computed from the binomial form, never from a quoted polynomial.
  for (int n : {5, 9, 13, 17, 21}) {
    int w = (n + 1) / 2;
    CHECK(8 * binomial(n - w + 2, 2) == Int(n + 3) * (n + 1));
    double direct = 2.0 * std::log2((static_cast<double>(n) * n + 4 * n + 3) / 8.0);
    CHECK(sp_bound_noisy_rows(n, n, w, 2, 2).redundancy_lb == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("noisy-row redundancy bound is monotone in t and e") {
  for (int n : {9, 13})
    for (int w = 2; w < n; ++w) {
      for (int t = 0; t < 4; ++t)
        CHECK(sp_bound_noisy_rows(5, n, w, t, 2).redundancy_lb <=
              sp_bound_noisy_rows(5, n, w, t + 1, 2).redundancy_lb);
      for (int e = 0; e < w; ++e)
        CHECK(sp_bound_noisy_rows(5, n, w, 2, e).redundancy_lb <=
              sp_bound_noisy_rows(5, n, w, 2, e + 1).redundancy_lb + 1e-12);
    }
}

TEST_CASE("two-error ball bound against the two-tier construction redundancy") {
  Bound2Caecc b = sp_bound_2caecc(17, 17, 9);
  CHECK(b.redundancy_lb == doctest::Approx(std::log2(17.0 * 9 * 8)).epsilon(1e-12));
  double tiered = construction_redundancy_two_tier(1, 1, 17);
  CHECK(tiered == doctest::Approx(3.0 * std::log2(17.0)));
  CHECK(tiered - b.redundancy_lb <= 2.5);
  CHECK(tiered - b.redundancy_lb > 0.0);
  // m=1, w=1, n=2: the ball has a single word, so the bound is 0
  CHECK(sp_bound_2caecc(1, 2, 1).redundancy_lb == doctest::Approx(0.0));
}

TEST_CASE("construction redundancy values") {
  CHECK(construction_redundancy_uniform(2, 2, 17) == doctest::Approx(4.0 * std::log2(17.0)));
  CHECK(construction_redundancy_uniform(0, 1, 17) == 0.0);
  CHECK(construction_redundancy_uniform(3, 1, 5) == doctest::Approx(3.0 * std::log2(5.0)));
  // the two-tier redundancy with t2 = 0 degenerates to the uniform e = 1 case
  CHECK(construction_redundancy_two_tier(3, 0, 5) == doctest::Approx(construction_redundancy_uniform(3, 1, 5)));
  CHECK(construction_redundancy_two_tier(2, 1, 5) == doctest::Approx(4.0 * std::log2(5.0)));
}

TEST_CASE("two-error ball bound never exceeds the ball-packing bound where both apply") {
  // A 2-CAECC confines (t,e) = (2,2) patterns to two loose ones in total; its
  // whole-word ball bound is the weaker (smaller) one on this grid.
  for (int n : {9, 13, 17})
    for (int w = 2; w + 2 < n; w += 2) {
      double two_error_ball = sp_bound_2caecc(n, n, w).redundancy_lb;
      double ball_packing = sp_bound_ball_packing(n, n, w, 2, 2).redundancy_lb;
      CHECK(two_error_ball <= ball_packing + 1e-9);
    }
}

TEST_CASE("verify_caecc on the (2,5,2,1,1) construction and on the full space") {
  CodeSpec spec = CodeSpec::uniform(2, 5, 2, 1, 1);
  auto code = enumerate_codewords(spec);
  REQUIRE(Int(code.size()) == 20);
  CHECK(verify_caecc_exhaustive(code, 1, 1).ok);
  CHECK(min_distance_at_least(code, 2, 2));  // the distance-criterion direction

  std::vector<CompositeWord> space;
  for_each_word(2, 5, 2, 10'000, [&](const CompositeWord& x) { space.push_back(x); });
  auto check = verify_caecc_exhaustive(space, 1, 1);
  CHECK(!check.ok);
  REQUIRE(check.colliding.has_value());
  REQUIRE(check.shared_output.has_value());
  // the reported triple really is a collision
  const auto& [i, j] = *check.colliding;
  auto reaches = [&](const CompositeWord& x) {
    for (const auto& y : asym_ball(x, 1)) {
      // restrict to (t,e) = (1,1): at most one row touched
      int touched = 0;
      for (int r = 0; r < x.m(); ++r) touched += y.row_weight(r) != x.w();
      if (touched <= 1 && y == *check.shared_output) return true;
    }
    return false;
  };
  CHECK(reaches(space[i]));
  CHECK(reaches(space[j]));
}

TEST_CASE("collision oracle matches the distance criterion over random small codes") {
  CounterRng rng(20260808);
  for (int sweep = 0; sweep < 200; ++sweep) {
    int t = 1 + static_cast<int>(rng.bounded(2));
    int e = 1 + static_cast<int>(rng.bounded(2));
    int size = 2 + static_cast<int>(rng.bounded(7));
    auto code = random_code(rng, 2, 5, 2, size);
    bool caecc = verify_caecc_exhaustive(code, t, e).ok;
    bool metric = min_distance_at_least(code, 2 * e, t + 1);
    CHECK(caecc == metric);
  }
}

TEST_CASE("ball condition on a singleton and on the two-tier construction") {
  CHECK(verify_2caecc_ball_condition({word_from_supports({{0, 1}, {1, 2}}, 5)}).two_caecc);

  CodeSpec spec = CodeSpec::two_tier(3, 5, 2, 1, 1);
  auto code = enumerate_codewords(spec);
  REQUIRE(!code.empty());
  BallConditionCheck check = verify_2caecc_ball_condition(code);
  CHECK(check.balls_disjoint);
  CHECK(check.two_caecc);

  // a (t1,t2) = (2,1) instance needs m >= 4 for the outer codes to exist
  CodeSpec wide = CodeSpec::two_tier(4, 5, 2, 2, 1);
  auto wide_code = enumerate_codewords(wide);
  REQUIRE(wide_code.size() == 20);
  BallConditionCheck wide_check = verify_2caecc_ball_condition(wide_code);
  CHECK(wide_check.balls_disjoint);
  CHECK(wide_check.two_caecc);
}

TEST_CASE("tiered ground truth separates the mixed family from the uniform one") {
  // (t1,t2) = (2,1) on m=4: collision-free for <=3 noisy rows with at most
  // one of them losing 2 ones, but NOT for three double-loss rows.
  CodeSpec spec = CodeSpec::two_tier(4, 5, 2, 2, 1);
  auto code = enumerate_codewords(spec);
  REQUIRE(code.size() == 20);
  CHECK(verify_caecc_tiered_exhaustive(code, 2, 1, 1, 2).ok);
  CHECK(!verify_caecc_exhaustive(code, 3, 2).ok);
}

TEST_CASE("ball-condition implication holds across random sets") {
  CounterRng rng(42);
  for (int sweep = 0; sweep < 120; ++sweep) {
    auto code = random_code(rng, 2, 5, 2, 2 + static_cast<int>(rng.bounded(6)));
    CHECK_NOTHROW(verify_2caecc_ball_condition(code));  // would throw if disjoint && !2-CAECC
  }
}

TEST_CASE("constructed codes keep radius-floor(t/2) e-Hamming balls disjoint") {
  // d_{2e-H}(C) >= t+1 forces the radius-floor(t/2) balls in the e-Hamming
  // metric apart: a shared word would put two codewords within t differing
  // rows of each other, each row pair within 2e bits.
  CodeSpec spec = CodeSpec::uniform(3, 5, 2, 2, 2);
  auto code = enumerate_codewords(spec);
  REQUIRE(!code.empty());
  std::set<std::vector<std::vector<std::uint8_t>>> seen;
  for (const auto& x : code)
    for (const auto& y : ball_eH(x, 1, 2)) {  // floor(t/2) = 1, e = 2
      std::vector<std::vector<std::uint8_t>> flat;
      for (const auto& row : y.rows()) flat.push_back(row.bits());
      CHECK(seen.insert(flat).second);
    }
}

TEST_CASE("greedy packing is feasible, bound-consistent, and deterministic") {
  auto code = greedy_max_code(1, 4, 2, 1, 1);
  CHECK(code.size() >= 2);  // hand enumeration: {0,1} and {2,3} pack
  CHECK(verify_caecc_exhaustive(code, 1, 1).ok);
  auto again = greedy_max_code(1, 4, 2, 1, 1);
  CHECK(code.size() == again.size());
  for (std::size_t i = 0; i < code.size(); ++i) CHECK(code[i] == again[i]);

  // t = 0: nothing collides, greedy returns the whole space
  CHECK(Int(greedy_max_code(1, 5, 2, 0, 1).size()) == binomial(5, 2));

  for (auto [m, n, w, t, e] :
       std::vector<std::array<int, 5>>{{2, 5, 2, 2, 2}, {2, 6, 3, 2, 2}, {3, 6, 2, 2, 2}}) {
    auto packed = greedy_max_code(m, n, w, t, e);
    double size_log2 = log2_big(Int(packed.size()));
    CHECK(size_log2 <= sp_bound_noisy_rows(m, n, w, t, e).log2_size_ub + 1e-9);
    if (e % 2 == 0) CHECK(size_log2 <= sp_bound_ball_packing(m, n, w, t, e).log2_size_ub + 1e-9);
  }
}

TEST_CASE("greedy never beats the sphere-packing bounds on uniform instances") {
  auto packed = greedy_max_code(2, 5, 2, 1, 1);
  CHECK(verify_caecc_exhaustive(packed, 1, 1).ok);
  CHECK(log2_big(Int(packed.size())) <= sp_bound_noisy_rows(2, 5, 2, 1, 1).log2_size_ub + 1e-9);
}

TEST_CASE("bound report wiring") {
  BoundReport r = compute_bound_report(17, 17, 9, 2, 2, 1, 1);
  REQUIRE(r.ball_packing.has_value());
  CHECK(r.p == 17);
  CHECK(r.uniform_construction_redundancy == doctest::Approx(4.0 * std::log2(17.0)));
  REQUIRE(r.two_tier_construction_redundancy.has_value());
  CHECK(*r.two_tier_construction_redundancy == doctest::Approx(3.0 * std::log2(17.0)));
  BoundReport odd = compute_bound_report(4, 6, 3, 2, 1);
  CHECK(!odd.ball_packing.has_value());
  CHECK(odd.ball_packing_skip_reason != "");
}
