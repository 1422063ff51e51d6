#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "caecc/bigint.hpp"
#include "caecc/errors.hpp"

namespace caecc {

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

inline bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Least prime p >= n. Bertrand's postulate guarantees p <= 2n for n >= 2.
inline long smallest_prime_geq(long n) {
  require(n >= 2, ErrorCode::NONPOSITIVE_PARAM, "smallest_prime_geq needs n >= 2");
  long p = n;
  while (!is_prime(p)) ++p;
  return p;
}

// ---------------------------------------------------------------------------
// Combinatorial-composite data model
// ---------------------------------------------------------------------------

// One position of a combinatorial word: a length-n binary vector of weight w,
// the indicator vector of a w-subset of shortmer indices.
class CompositeSymbol {
 public:
  CompositeSymbol(std::vector<std::uint8_t> bits, int expected_weight)
      : bits_(std::move(bits)) {
    int w = 0;
    for (auto b : bits_) {
      require(b <= 1, ErrorCode::BAD_FORMAT, "symbol bits must be 0/1");
      w += b;
    }
    require(w == expected_weight, ErrorCode::BAD_FORMAT, "symbol weight mismatch");
    require(w > 0 && w < static_cast<int>(bits_.size()), ErrorCode::W_NOT_LESS_THAN_N,
            "need 0 < w < n");
  }

  static CompositeSymbol from_support(const std::vector<int>& support, int n) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int i : support) {
      require(i >= 0 && i < n, ErrorCode::BAD_FORMAT, "support index out of range");
      require(bits[i] == 0, ErrorCode::BAD_FORMAT, "repeated support index");
      bits[i] = 1;
    }
    return CompositeSymbol(std::move(bits), static_cast<int>(support.size()));
  }

  int n() const { return static_cast<int>(bits_.size()); }
  int weight() const {
    int w = 0;
    for (auto b : bits_) w += b;
    return w;
  }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::uint8_t bit(int i) const { return bits_[i]; }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < n(); ++i)
      if (bits_[i]) s.push_back(i);
    return s;
  }

  friend bool operator==(const CompositeSymbol& a, const CompositeSymbol& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

// m x n binary matrix with every row of weight exactly w.
class CompositeWord {
 public:
  explicit CompositeWord(std::vector<CompositeSymbol> rows) : rows_(std::move(rows)) {
    require(!rows_.empty(), ErrorCode::BAD_FORMAT, "word needs at least one row");
    for (const auto& r : rows_) {
      require(r.n() == rows_.front().n(), ErrorCode::BAD_FORMAT, "rows must share n");
      require(r.weight() == rows_.front().weight(), ErrorCode::BAD_FORMAT,
              "rows must share weight w");
    }
  }

  int m() const { return static_cast<int>(rows_.size()); }
  int n() const { return rows_.front().n(); }
  int w() const { return rows_.front().weight(); }
  const CompositeSymbol& row(int i) const { return rows_[i]; }
  const std::vector<CompositeSymbol>& rows() const { return rows_; }

  friend bool operator==(const CompositeWord& a, const CompositeWord& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<CompositeSymbol> rows_;
};

// Channel output: rows are binary vectors of weight <= w (ones can only drop).
class ReceivedWord {
 public:
  ReceivedWord(std::vector<std::vector<std::uint8_t>> rows, int w)
      : rows_(std::move(rows)), w_(w) {
    require(!rows_.empty(), ErrorCode::BAD_FORMAT, "received word needs at least one row");
    for (const auto& r : rows_) {
      require(r.size() == rows_.front().size(), ErrorCode::BAD_FORMAT, "rows must share n");
      int weight = 0;
      for (auto b : r) {
        require(b <= 1, ErrorCode::BAD_FORMAT, "row bits must be 0/1");
        weight += b;
      }
      require(weight <= w, ErrorCode::BAD_FORMAT, "received row weight exceeds w");
    }
  }

  static ReceivedWord from_word(const CompositeWord& x) {
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(x.m());
    for (const auto& r : x.rows()) rows.push_back(r.bits());
    return ReceivedWord(std::move(rows), x.w());
  }

  int m() const { return static_cast<int>(rows_.size()); }
  int n() const { return static_cast<int>(rows_.front().size()); }
  int w() const { return w_; }
  const std::vector<std::uint8_t>& row(int i) const { return rows_[i]; }
  int row_weight(int i) const {
    int weight = 0;
    for (auto b : rows_[i]) weight += b;
    return weight;
  }

  friend bool operator==(const ReceivedWord& a, const ReceivedWord& b) {
    return a.w_ == b.w_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::vector<std::uint8_t>> rows_;
  int w_;
};

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

struct CodeParams {
  int m = 0;   // word length (rows)
  int n = 0;   // shortmer count (columns)
  int w = 0;   // combinatorial factor (ones per row)
  int t = 0;   // max noisy rows
  int e = 0;   // max asymmetric errors per noisy row
  long p = 0;  // smallest prime >= n
};

inline CodeParams validate_params(int m, int n, int w, int t, int e) {
  require(m >= 1 && n >= 2 && w >= 1 && t >= 1 && e >= 1, ErrorCode::NONPOSITIVE_PARAM,
          "all parameters must be positive (and n >= 2)");
  require(w < n, ErrorCode::W_NOT_LESS_THAN_N, "need w < n");
  require(e <= w, ErrorCode::E_EXCEEDS_W, "need e <= w");
  require(t <= m, ErrorCode::T_EXCEEDS_M, "need t <= m");
  long p = smallest_prime_geq(n);
  require(p <= 2L * n, ErrorCode::NONPOSITIVE_PARAM, "Bertrand check failed");  // unreachable
  require(m <= p, ErrorCode::M_EXCEEDS_P,
          "need m <= p for the outer MDS code (p = " + std::to_string(p) + ")");
  return CodeParams{m, n, w, t, e, p};
}

// ---------------------------------------------------------------------------
// Enumerative ranking of weight-w vectors (mapping E1)
// ---------------------------------------------------------------------------
// Order: lexicographic on sorted supports, so {0,..,w-1} has rank 0 and
// {n-w,..,n-1} has rank C(n,w)-1. Matches the alphabet indexing x_0..x_{C-1}.

inline Int rank_support(const std::vector<int>& support, int n) {
  int w = static_cast<int>(support.size());
  Int r = 0;
  int prev = -1;
  for (int i = 0; i < w; ++i) {
    for (int j = prev + 1; j < support[i]; ++j)
      r += binomial(n - 1 - j, w - 1 - i);
    prev = support[i];
  }
  return r;
}

inline Int rank_symbol(const CompositeSymbol& sym) {
  return rank_support(sym.support(), sym.n());
}

inline std::vector<int> unrank_support(Int r, int n, int w) {
  require(r >= 0 && r < binomial(n, w), ErrorCode::RANK_OUT_OF_RANGE,
          "rank outside [0, C(n,w))");
  std::vector<int> support;
  support.reserve(w);
  int j = 0;
  for (int i = 0; i < w; ++i) {
    for (;; ++j) {
      Int c = binomial(n - 1 - j, w - 1 - i);
      if (r < c) break;
      r -= c;
    }
    support.push_back(j++);
  }
  return support;
}

inline CompositeSymbol unrank_symbol(const Int& r, int n, int w) {
  return CompositeSymbol::from_support(unrank_support(r, n, w), n);
}

// ---------------------------------------------------------------------------
// Payload size of the explicit encoder
// ---------------------------------------------------------------------------
// (m-t) rows carry floor(log2 C(n,w)) bits each through E1; each of the t
// redundancy rows carries floor(log2 floor(C(n,w)/n)) bits through E2.

inline long payload_bit_count(int m, int n, int w, int t) {
  require(is_prime(n), ErrorCode::ENCODER_REQUIRES_PRIME_N,
          "explicit encoder requires n = p prime");
  require(t >= 0 && t <= m && w >= 1 && w < n, ErrorCode::NONPOSITIVE_PARAM, "bad (m,w,t)");
  Int cnw = binomial(n, w);
  long per_e1 = floor_log2(cnw);
  long per_e2 = t > 0 ? floor_log2(cnw / n) : 0;
  return static_cast<long>(m - t) * per_e1 + static_cast<long>(t) * per_e2;
}

inline long payload_bit_count(const CodeParams& params) {
  return payload_bit_count(params.m, params.n, params.w, params.t);
}

// ---------------------------------------------------------------------------
// Shortmer alphabets (decorative I/O layer; coding logic is index-based)
// ---------------------------------------------------------------------------

struct Shortmer {
  std::string bases;
  int index = 0;
};

class ShortmerAlphabet {
 public:
  explicit ShortmerAlphabet(std::vector<Shortmer> shortmers) : shortmers_(std::move(shortmers)) {
    require(shortmers_.size() > 1, ErrorCode::BAD_FORMAT, "alphabet needs n > 1 shortmers");
    for (std::size_t i = 0; i < shortmers_.size(); ++i) {
      const auto& s = shortmers_[i];
      require(s.index == static_cast<int>(i), ErrorCode::BAD_FORMAT,
              "indices must be 0-based and contiguous");
      require(!s.bases.empty() && s.bases.size() == shortmers_.front().bases.size(),
              ErrorCode::BAD_FORMAT, "shortmers must share one length");
      for (char c : s.bases)
        require(c == 'A' || c == 'C' || c == 'G' || c == 'T', ErrorCode::BAD_FORMAT,
                "bases must be A/C/G/T");
      if (i > 0)
        require(shortmers_[i - 1].bases < s.bases, ErrorCode::BAD_FORMAT,
                "shortmers must be distinct and lexicographically sorted");
    }
  }

  int n() const { return static_cast<int>(shortmers_.size()); }
  int ell() const { return static_cast<int>(shortmers_.front().bases.size()); }
  const Shortmer& at(int i) const { return shortmers_[i]; }
  const std::vector<Shortmer>& shortmers() const { return shortmers_; }

  std::vector<std::string> symbol_bases(const CompositeSymbol& sym) const {
    require(sym.n() == n(), ErrorCode::BAD_FORMAT, "symbol length != alphabet size");
    std::vector<std::string> out;
    for (int i : sym.support()) out.push_back(shortmers_[i].bases);
    return out;
  }

  // The 16 trinucleotide shortmers used in the n=16, w=5 demo setup,
  // indexed in lexicographic order.
  static ShortmerAlphabet demo16() {
    static const char* kBases[16] = {"AAT", "ACA", "AGC", "ATG", "CAC", "CCG", "CGT", "CTA",
                                     "GAG", "GCC", "GGA", "GTT", "TAA", "TCT", "TGG", "TTC"};
    std::vector<Shortmer> s;
    s.reserve(16);
    for (int i = 0; i < 16; ++i) s.push_back(Shortmer{kBases[i], i});
    return ShortmerAlphabet(std::move(s));
  }

 private:
  std::vector<Shortmer> shortmers_;
};

}  // namespace caecc
