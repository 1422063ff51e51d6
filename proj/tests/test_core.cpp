#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "caecc/core.hpp"

using namespace caecc;

namespace {

// Sieve oracle for prime checks, independent of is_prime/smallest_prime_geq.
std::vector<bool> sieve(long limit) {
  std::vector<bool> composite(limit + 1, false);
  composite[0] = composite[1] = true;
  for (long i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (long j = i * i; j <= limit; j += i) composite[j] = true;
  return composite;
}

// All w-subsets of [n] in lexicographic order, by direct generation.
std::vector<std::vector<int>> all_subsets_lex(int n, int w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == w) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("smallest_prime_geq basics") {
  CHECK(smallest_prime_geq(5) == 5);
  CHECK(smallest_prime_geq(16) == 17);
  CHECK(smallest_prime_geq(96) == 97);
  CHECK(smallest_prime_geq(2) == 2);
}

TEST_CASE("smallest_prime_geq agrees with a sieve and stays within 2n") {
  const long limit = 1'000'000;
  auto composite = sieve(2 * limit);
  // next_prime[i] computed from the sieve alone
  std::vector<long> next_prime(2 * limit + 1, 0);
  long next = 0;
  for (long i = 2 * limit; i >= 2; --i) {
    if (!composite[i]) next = i;
    next_prime[i] = next;
  }
  for (long nn = 2; nn <= limit; ++nn) {
    CHECK(next_prime[nn] <= 2 * nn);  // Bertrand over the whole range
  }
  for (long nn : {2L, 3L, 4L, 89L, 90L, 7919L, 7920L, 524288L, 999999L}) {
    CHECK(smallest_prime_geq(nn) == next_prime[nn]);
  }
}

TEST_CASE("validate_params computes p and accepts the experimental sets") {
  CodeParams a = validate_params(4, 16, 5, 1, 1);
  CHECK(a.p == 17);
  CodeParams b = validate_params(3, 5, 2, 1, 1);
  CHECK(b.p == 5);
  CHECK_NOTHROW(validate_params(1, 96, 32, 1, 1));  // n=96, w=32, m=1 setup
}

TEST_CASE("validate_params rejections carry reason codes") {
  CHECK_THROWS_WITH_AS(validate_params(30, 24, 10, 2, 1), doctest::Contains("M_EXCEEDS_P"),
                       Error);
  CHECK(smallest_prime_geq(24) == 29);  // sieve-checkable reason for the above
  CHECK_THROWS_AS(validate_params(3, 5, 5, 1, 1), Error);
  try {
    validate_params(3, 5, 5, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::W_NOT_LESS_THAN_N);
  }
  try {
    validate_params(3, 5, 2, 4, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::T_EXCEEDS_M);
  }
  try {
    validate_params(3, 5, 2, 1, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::E_EXCEEDS_W);
  }
  CHECK_THROWS_AS(validate_params(3, 5, 2, 0, 1), Error);
}

TEST_CASE("rank/unrank reproduce the 99th composite symbol") {
  CompositeSymbol sym = CompositeSymbol::from_support({0, 1, 3, 6, 7}, 16);
  CHECK(rank_symbol(sym) == 99);
  CHECK(unrank_symbol(99, 16, 5) == sym);
  // x_99's indicator vector, spelled out
  std::vector<std::uint8_t> bits = {1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0};
  CHECK(sym.bits() == bits);
}

TEST_CASE("rank boundaries") {
  CHECK(rank_symbol(CompositeSymbol::from_support({0, 1, 2, 3, 4}, 16)) == 0);
  CHECK(rank_symbol(CompositeSymbol::from_support({11, 12, 13, 14, 15}, 16)) ==
        binomial(16, 5) - 1);
  CHECK_THROWS_AS(unrank_symbol(binomial(16, 5), 16, 5), Error);
}

TEST_CASE("unrank order matches exhaustive lexicographic enumeration") {
  for (auto [n, w] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 4}, {9, 2}}) {
    auto subsets = all_subsets_lex(n, w);
    REQUIRE(Int(subsets.size()) == binomial(n, w));
    for (std::size_t r = 0; r < subsets.size(); ++r)
      CHECK(unrank_support(Int(r), n, w) == subsets[r]);
  }
}

TEST_CASE("rank and unrank are mutually inverse, exhaustively up to n = 12") {
  for (int n = 2; n <= 12; ++n)
    for (int w = 1; w < n; ++w) {
      Int count = binomial(n, w);
      for (Int r = 0; r < count; ++r) {
        CompositeSymbol sym = unrank_symbol(r, n, w);
        CHECK(sym.weight() == w);
        CHECK(rank_symbol(sym) == r);
      }
    }
}

TEST_CASE("payload_bit_count") {
  CHECK(payload_bit_count(3, 5, 2, 1) == 7);   // 2*3 + 1*1
  CHECK(payload_bit_count(4, 17, 5, 2) == 40); // 2*12 + 2*8
  CHECK(payload_bit_count(3, 5, 2, 0) == 3 * 3);
  CHECK_THROWS_AS(payload_bit_count(4, 16, 5, 1), Error);  // n must be prime
  try {
    payload_bit_count(4, 16, 5, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ENCODER_REQUIRES_PRIME_N);
  }
}

TEST_CASE("composite word invariants") {
  auto row = CompositeSymbol::from_support({0, 1}, 5);
  CompositeWord word({row, row, row});
  CHECK(word.m() == 3);
  CHECK(word.n() == 5);
  CHECK(word.w() == 2);
  CHECK_THROWS_AS(CompositeWord({row, CompositeSymbol::from_support({0, 1, 2}, 5)}), Error);
  CHECK_THROWS_AS(ReceivedWord({{1, 1, 1}}, 2), Error);  // weight above w
  CHECK_NOTHROW(ReceivedWord({{0, 0, 0}}, 2));           // total loss is representable
}

TEST_CASE("embedded demo alphabet") {
  ShortmerAlphabet demo = ShortmerAlphabet::demo16();
  CHECK(demo.n() == 16);
  CHECK(demo.ell() == 3);
  std::set<std::string> bases;
  for (const auto& s : demo.shortmers()) bases.insert(s.bases);
  std::set<std::string> expected = {"AAT", "ACA", "ATG", "AGC", "TAA", "TCT", "TTC", "TGG",
                                    "GAG", "GCC", "GTT", "GGA", "CAC", "CCG", "CTA", "CGT"};
  CHECK(bases == expected);
  CHECK(std::is_sorted(demo.shortmers().begin(), demo.shortmers().end(),
                       [](const Shortmer& a, const Shortmer& b) { return a.bases < b.bases; }));
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(ShortmerAlphabet({{"AAT", 0}}), Error);                  // n > 1
  CHECK_THROWS_AS(ShortmerAlphabet({{"TTT", 0}, {"AAA", 1}}), Error);      // unsorted
  CHECK_THROWS_AS(ShortmerAlphabet({{"AAA", 0}, {"AAA", 1}}), Error);      // duplicate
  CHECK_THROWS_AS(ShortmerAlphabet({{"AAA", 0}, {"AAX", 1}}), Error);      // bad base
  CHECK_THROWS_AS(ShortmerAlphabet({{"AAA", 0}, {"CC", 1}}), Error);       // ragged length
  CHECK_THROWS_AS(ShortmerAlphabet({{"AAA", 1}, {"CCC", 2}}), Error);      // indices not 0-based
}
