#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caecc/bigint.hpp"
#include "caecc/core.hpp"
#include "caecc/errors.hpp"
#include "caecc/gf.hpp"
#include "caecc/syndrome.hpp"

namespace caecc {

enum class Variant { Uniform, TwoTier, Generalized };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::Uniform: return "uniform";
    case Variant::TwoTier: return "two_tier";
    case Variant::Generalized: return "generalized";
  }
  return "?";
}

struct Payload {
  std::vector<std::uint8_t> bits;  // 0/1, most significant first per field

  friend bool operator==(const Payload& a, const Payload& b) { return a.bits == b.bits; }
};

// A concrete code: the parameter bundle plus one outer erasure code per
// protected syndrome order. Internally every variant is the tier structure
//   orders 1..e1      -> [m, m-(t1+t2)]
//   orders e1+1..e2   -> [m, m-t2]
// with Uniform(t,e) = (t1=t, e1=e, t2=0, e2=e) and TwoTier = (t1,1,t2,2).
class CodeSpec {
 public:
  static CodeSpec uniform(const CodeParams& params) {
    return CodeSpec(params, Variant::Uniform, params.t, params.e, 0, params.e);
  }

  static CodeSpec uniform(int m, int n, int w, int t, int e) {
    return uniform(validate_params(m, n, w, t, e));
  }

  static CodeSpec two_tier(int m, int n, int w, int t1, int t2) {
    require(t1 >= t2 && t2 >= 0 && t1 >= 1, ErrorCode::NONPOSITIVE_PARAM,
            "two-tier needs t1 >= t2 >= 0, t1 >= 1");
    CodeParams params = validate_params(m, n, w, t1 + t2, /*e=*/std::min(2, w));
    require(w >= 2, ErrorCode::E_EXCEEDS_W, "two-tier corrects up to 2 errors; need w >= 2");
    return CodeSpec(params, Variant::TwoTier, t1, 1, t2, 2);
  }

  static CodeSpec generalized(int m, int n, int w, int t1, int e1, int t2, int e2) {
    require(e2 >= e1 && e1 >= 1, ErrorCode::NONPOSITIVE_PARAM, "need e2 >= e1 >= 1");
    require(t1 >= 1 && t2 >= 0, ErrorCode::NONPOSITIVE_PARAM, "need t1 >= 1, t2 >= 0");
    CodeParams params = validate_params(m, n, w, t1 + t2, std::min(e2, w));
    require(e2 <= w, ErrorCode::E_EXCEEDS_W, "need e2 <= w");
    return CodeSpec(params, Variant::Generalized, t1, e1, t2, e2);
  }

  const CodeParams& params() const { return params_; }
  Variant variant() const { return variant_; }
  int m() const { return params_.m; }
  int n() const { return params_.n; }
  int w() const { return params_.w; }
  long p() const { return params_.p; }
  int t1() const { return t1_; }
  int e1() const { return e1_; }
  int t2() const { return t2_; }
  int e2() const { return e2_; }
  int max_order() const { return e2_; }
  int total_row_budget() const { return t1_ + t2_; }

  // Outer code protecting syndrome order l (1-based).
  const ErasureCodeSpec& outer(int l) const { return outer_[l - 1]; }

  bool encoder_supported() const {
    return variant_ == Variant::Uniform && e2_ == 1 && params_.n == params_.p;
  }

  const CosetTable& coset_table() const {
    require(coset_ != nullptr, ErrorCode::ENCODER_REQUIRES_PRIME_N,
            "coset table only built for the prime-n uniform e=1 code");
    return *coset_;
  }

  long payload_bits() const {
    require(encoder_supported(), ErrorCode::UNSUPPORTED_VARIANT,
            "payload size defined only for the explicit encoder");
    return payload_bit_count(params_);
  }

 private:
  CodeSpec(const CodeParams& params, Variant variant, int t1, int e1, int t2, int e2)
      : params_(params), variant_(variant), t1_(t1), e1_(e1), t2_(t2), e2_(e2) {
    require(params.m - (t1 + t2) >= 1, ErrorCode::T_EXCEEDS_M,
            "outer code needs dimension >= 1 (t1 + t2 < m)");
    for (int l = 1; l <= e2; ++l) {
      int dim = l <= e1 ? params.m - (t1 + t2) : params.m - t2;
      outer_.emplace_back(params.m, dim, params.p);
    }
    if (encoder_supported())
      coset_ = std::make_shared<const CosetTable>(params.n, params.w, params.p);
  }

  CodeParams params_;
  Variant variant_;
  int t1_, e1_, t2_, e2_;
  std::vector<ErasureCodeSpec> outer_;
  std::shared_ptr<const CosetTable> coset_;
};

// ---------------------------------------------------------------------------
// Membership (Constructions 1-3)
// ---------------------------------------------------------------------------

inline bool is_codeword(const CompositeWord& x, const CodeSpec& spec) {
  require(x.m() == spec.m() && x.n() == spec.n() && x.w() == spec.w(), ErrorCode::BAD_FORMAT,
          "word dimensions do not match the code");
  SyndromeVector s = word_syndrome_vector(x, spec.max_order(), spec.p());
  for (int l = 1; l <= spec.max_order(); ++l) {
    std::vector<FieldElement> column;
    column.reserve(x.m());
    for (const auto& row : s.entries) column.push_back(row.order(l));
    if (!rs_is_codeword(column, spec.outer(l))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bit packing helpers (most significant bit first)
// ---------------------------------------------------------------------------

inline Int take_bits_msb(const std::vector<std::uint8_t>& bits, std::size_t pos, long count) {
  Int v = 0;
  for (long i = 0; i < count; ++i) {
    v <<= 1;
    v += bits[pos + i];
  }
  return v;
}

inline void append_bits_msb(std::vector<std::uint8_t>& bits, const Int& value, long count) {
  for (long i = count - 1; i >= 0; --i)
    bits.push_back(static_cast<std::uint8_t>((value >> i) & 1));
}

// ---------------------------------------------------------------------------
// Explicit encoder (uniform e=1, n = p prime)
// ---------------------------------------------------------------------------
// Step 1: the first (m-t)*floor(log2 C(n,w)) bits fill rows 0..m-t-1 via E1.
// Step II/III: their first-order syndromes are extended to a full [m, m-t]
// Reed-Solomon codeword, yielding the parity syndromes r_1..r_t.
// Step IV: each redundancy row is drawn from the coset of its parity
// syndrome via E2, consuming floor(log2 floor(C(n,w)/n)) bits.

inline CompositeWord encode(const Payload& payload, const CodeSpec& spec) {
  require(spec.encoder_supported(), ErrorCode::UNSUPPORTED_VARIANT,
          "explicit encoder exists only for uniform e=1 with n = p prime");
  const CodeParams& prm = spec.params();
  require(static_cast<long>(payload.bits.size()) == spec.payload_bits(),
          ErrorCode::PAYLOAD_LENGTH_MISMATCH,
          "payload must be exactly " + std::to_string(spec.payload_bits()) + " bits");
  for (auto b : payload.bits)
    require(b <= 1, ErrorCode::BAD_FORMAT, "payload bits must be 0/1");

  Int cnw = binomial(prm.n, prm.w);
  long b1 = floor_log2(cnw);
  long b2 = prm.t > 0 ? floor_log2(cnw / prm.n) : 0;

  std::vector<CompositeSymbol> rows;
  rows.reserve(prm.m);
  std::size_t pos = 0;
  std::vector<FieldElement> info_syndromes;
  for (int i = 0; i < prm.m - prm.t; ++i) {
    rows.push_back(unrank_symbol(take_bits_msb(payload.bits, pos, b1), prm.n, prm.w));
    pos += b1;
    info_syndromes.push_back(vt_syndrome(rows.back(), 1, prm.p));
  }

  std::vector<FieldElement> syndromes = rs_extend(info_syndromes, spec.outer(1));
  for (int i = 0; i < prm.t; ++i) {
    Int j = take_bits_msb(payload.bits, pos, b2);
    pos += b2;
    rows.push_back(coset_unrank(syndromes[prm.m - prm.t + i], j, spec.coset_table()));
  }
  return CompositeWord(std::move(rows));
}

// ---------------------------------------------------------------------------
// Correction (decoder Steps I-III)
// ---------------------------------------------------------------------------
// Stage A: every deficient row is an erasure in orders 1..e1; the
// [m, m-(t1+t2)] codes restore those syndromes and rows with deficit <= e1
// are rebuilt. Stage B: the rebuilt rows make their higher-order syndromes
// computable again, so orders e1+1..e2 see erasures only on the <= t2 rows
// with deficit > e1, within reach of the [m, m-t2] codes.
//
// When the true syndrome vector is supplied (simulation paths), the outer
// decoding is skipped and rows are rebuilt directly from it.

inline CompositeWord correct_word(const ReceivedWord& y, const CodeSpec& spec,
                                  const SyndromeVector* known_syndromes = nullptr) {
  require(y.m() == spec.m() && y.n() == spec.n() && y.w() == spec.w(), ErrorCode::BAD_FORMAT,
          "received word dimensions do not match the code");
  const int m = spec.m();
  const long p = spec.p();

  std::vector<int> deficit(m);
  for (int i = 0; i < m; ++i) deficit[i] = spec.w() - y.row_weight(i);

  if (known_syndromes != nullptr) {
    require(known_syndromes->m() == m, ErrorCode::BAD_FORMAT, "syndrome vector length != m");
    std::vector<CompositeSymbol> rows;
    rows.reserve(m);
    for (int i = 0; i < m; ++i)
      rows.push_back(recover_row(y.row(i), known_syndromes->entries[i], spec.w(), p));
    return CompositeWord(std::move(rows));
  }

  int deficient = 0, beyond_tier_a = 0;
  for (int i = 0; i < m; ++i) {
    require(deficit[i] <= spec.e2(), ErrorCode::TOO_MANY_ERASURES,
            "row " + std::to_string(i) + " lost more ones than the code corrects");
    if (deficit[i] > 0) ++deficient;
    if (deficit[i] > spec.e1()) ++beyond_tier_a;
  }
  require(deficient <= spec.total_row_budget(), ErrorCode::TOO_MANY_ERASURES,
          std::to_string(deficient) + " deficient rows exceed the budget of " +
              std::to_string(spec.total_row_budget()));
  require(beyond_tier_a <= spec.t2(), ErrorCode::TOO_MANY_ERASURES,
          "more than t2 rows need the second tier");

  // restored[l-1][i] = order-l syndrome of row i
  std::vector<std::vector<FieldElement>> restored(spec.e2());

  for (int l = 1; l <= spec.e1(); ++l) {
    std::vector<std::optional<FieldElement>> column(m);
    for (int i = 0; i < m; ++i)
      if (deficit[i] == 0) column[i] = vt_syndrome(y.row(i), l, p);
    restored[l - 1] = rs_erasure_decode(column, spec.outer(l));
  }

  std::vector<std::optional<CompositeSymbol>> rows(m);
  for (int i = 0; i < m; ++i) {
    if (deficit[i] > spec.e1()) continue;  // second tier
    RowSyndrome target;
    for (int l = 1; l <= spec.e1(); ++l) target.components.push_back(restored[l - 1][i]);
    rows[i] = recover_row(y.row(i), target, spec.w(), p);
  }

  for (int l = spec.e1() + 1; l <= spec.e2(); ++l) {
    std::vector<std::optional<FieldElement>> column(m);
    for (int i = 0; i < m; ++i)
      if (rows[i]) column[i] = vt_syndrome(rows[i]->bits(), l, p);
    restored[l - 1] = rs_erasure_decode(column, spec.outer(l));
  }

  for (int i = 0; i < m; ++i) {
    if (rows[i]) continue;
    RowSyndrome target;
    for (int l = 1; l <= spec.e2(); ++l) target.components.push_back(restored[l - 1][i]);
    rows[i] = recover_row(y.row(i), target, spec.w(), p);
  }

  std::vector<CompositeSymbol> out;
  out.reserve(m);
  for (auto& r : rows) out.push_back(std::move(*r));
  return CompositeWord(std::move(out));
}

// ---------------------------------------------------------------------------
// Full decoder (correction + Step IV payload extraction)
// ---------------------------------------------------------------------------

inline Payload extract_payload(const CompositeWord& x, const CodeSpec& spec) {
  require(spec.encoder_supported(), ErrorCode::UNSUPPORTED_VARIANT,
          "payload extraction exists only for the explicit encoder");
  const CodeParams& prm = spec.params();
  Int cnw = binomial(prm.n, prm.w);
  long b1 = floor_log2(cnw);
  long b2 = prm.t > 0 ? floor_log2(cnw / prm.n) : 0;

  Payload payload;
  payload.bits.reserve(static_cast<std::size_t>(spec.payload_bits()));
  for (int i = 0; i < prm.m - prm.t; ++i) {
    Int r = rank_symbol(x.row(i));
    require(r < (Int(1) << b1), ErrorCode::RANK_OUT_OF_RANGE,
            "row " + std::to_string(i) + " is outside the encoder image");
    append_bits_msb(payload.bits, r, b1);
  }
  for (int i = prm.m - prm.t; i < prm.m; ++i) {
    auto [s, j] = coset_rank(x.row(i), spec.coset_table());
    (void)s;  // determined by the outer code, carries no payload
    require(j < (Int(1) << b2), ErrorCode::RANK_OUT_OF_RANGE,
            "row " + std::to_string(i) + " is outside the encoder image");
    append_bits_msb(payload.bits, j, b2);
  }
  return payload;
}

inline Payload decode(const ReceivedWord& y, const CodeSpec& spec) {
  return extract_payload(correct_word(y, spec), spec);
}

// ---------------------------------------------------------------------------
// Code size
// ---------------------------------------------------------------------------

// All weight-w length-n rows, in rank (lexicographic support) order.
inline std::vector<CompositeSymbol> enumerate_symbols(int n, int w, const Int& budget) {
  Int count = binomial(n, w);
  require(count <= budget, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
          "C(n,w) exceeds the enumeration budget");
  std::vector<CompositeSymbol> out;
  out.reserve(count.convert_to<std::size_t>());
  for (Int r = 0; r < count; ++r) out.push_back(unrank_symbol(r, n, w));
  return out;
}

template <typename Fn>
inline void for_each_word(int m, int n, int w, const Int& budget, Fn&& fn) {
  Int total = ipow(binomial(n, w), m);
  require(total <= budget, ErrorCode::TOO_LARGE_FOR_ENUMERATION,
          "C(n,w)^m exceeds the enumeration budget");
  std::vector<CompositeSymbol> symbols = enumerate_symbols(n, w, budget);
  std::vector<std::size_t> odo(m, 0);
  for (;;) {
    std::vector<CompositeSymbol> rows;
    rows.reserve(m);
    for (int i = 0; i < m; ++i) rows.push_back(symbols[odo[i]]);
    fn(CompositeWord(std::move(rows)));
    int i = m - 1;
    while (i >= 0 && ++odo[i] == symbols.size()) odo[i--] = 0;
    if (i < 0) break;
  }
}

inline constexpr long kDefaultCountBudget = 2'000'000;

inline Int code_size(const CodeSpec& spec, const Int& budget = kDefaultCountBudget) {
  const CodeParams& prm = spec.params();
  if (spec.variant() == Variant::Uniform && spec.e2() == 1 && prm.n == prm.p) {
    // Equal coset sizes make every syndrome pattern carry (C(n,w)/n)^m words.
    return ipow(binomial(prm.n, prm.w), prm.m) / ipow(prm.n, prm.t);
  }
  Int total = ipow(binomial(prm.n, prm.w), prm.m);
  require(total <= budget, ErrorCode::TOO_LARGE_FOR_EXACT_COUNT,
          "space too large for exhaustive counting");
  Int count = 0;
  for_each_word(prm.m, prm.n, prm.w, budget, [&](const CompositeWord& x) {
    if (is_codeword(x, spec)) ++count;
  });
  return count;
}

inline std::vector<CompositeWord> enumerate_codewords(const CodeSpec& spec,
                                                      const Int& budget = kDefaultCountBudget) {
  std::vector<CompositeWord> out;
  for_each_word(spec.m(), spec.n(), spec.w(), budget, [&](const CompositeWord& x) {
    if (is_codeword(x, spec)) out.push_back(x);
  });
  return out;
}

}  // namespace caecc
