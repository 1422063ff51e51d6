#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "caecc/analysis.hpp"
#include "caecc/channel.hpp"
#include "caecc/codec.hpp"
#include "caecc/core.hpp"
#include "caecc/errors.hpp"

namespace caecc {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Word files: m lines, each exactly n characters from {0,1}; line i = row i.
// ---------------------------------------------------------------------------

inline void write_word(std::ostream& os, const CompositeWord& x) {
  for (const auto& row : x.rows()) {
    for (auto b : row.bits()) os << (b ? '1' : '0');
    os << '\n';
  }
}

inline void write_received(std::ostream& os, const ReceivedWord& y) {
  for (int i = 0; i < y.m(); ++i) {
    for (auto b : y.row(i)) os << (b ? '1' : '0');
    os << '\n';
  }
}

namespace detail {
inline std::vector<std::vector<std::uint8_t>> read_bit_rows(std::istream& is) {
  std::vector<std::vector<std::uint8_t>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::uint8_t> row;
    row.reserve(line.size());
    for (char c : line) {
      require(c == '0' || c == '1', ErrorCode::BAD_FORMAT,
              "word files may contain only 0/1 characters");
      row.push_back(c == '1');
    }
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), ErrorCode::BAD_FORMAT, "empty word file");
  return rows;
}
}  // namespace detail

inline CompositeWord read_word(std::istream& is, int w) {
  auto rows = detail::read_bit_rows(is);
  std::vector<CompositeSymbol> symbols;
  symbols.reserve(rows.size());
  for (auto& row : rows) symbols.emplace_back(std::move(row), w);
  return CompositeWord(std::move(symbols));
}

inline ReceivedWord read_received(std::istream& is, int w) {
  return ReceivedWord(detail::read_bit_rows(is), w);
}

// ---------------------------------------------------------------------------
// Payload files: raw bits packed big-endian within bytes, final partial byte
// zero-padded; the bit length travels in a sidecar JSON header.
// ---------------------------------------------------------------------------

inline std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  return bytes;
}

inline std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& bytes,
                                             long bit_count) {
  require(static_cast<long>(bytes.size()) == (bit_count + 7) / 8, ErrorCode::BAD_FORMAT,
          "payload byte count does not match the bit length");
  std::vector<std::uint8_t> bits(bit_count);
  for (long i = 0; i < bit_count; ++i)
    bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
  return bits;
}

inline Json payload_header(const CodeSpec& spec) {
  const CodeParams& prm = spec.params();
  Json j;
  j["m"] = prm.m;
  j["n"] = prm.n;
  j["w"] = prm.w;
  j["t"] = prm.t;
  j["e"] = prm.e;
  j["variant"] = to_string(spec.variant());
  j["payload_bits"] = spec.payload_bits();
  return j;
}

// ---------------------------------------------------------------------------
// Shortmer map: TSV `index<TAB>bases`, 0-based contiguous, lex-sorted.
// ---------------------------------------------------------------------------

inline void write_shortmers(std::ostream& os, const ShortmerAlphabet& alphabet) {
  for (const auto& s : alphabet.shortmers()) os << s.index << '\t' << s.bases << '\n';
}

inline ShortmerAlphabet read_shortmers(std::istream& is) {
  std::vector<Shortmer> shortmers;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    require(tab != std::string::npos, ErrorCode::BAD_FORMAT,
            "shortmer lines are index<TAB>bases");
    Shortmer s;
    try {
      s.index = std::stoi(line.substr(0, tab));
    } catch (const std::exception&) {
      raise(ErrorCode::BAD_FORMAT, "bad shortmer index: " + line.substr(0, tab));
    }
    s.bases = line.substr(tab + 1);
    shortmers.push_back(std::move(s));
  }
  return ShortmerAlphabet(std::move(shortmers));
}

// ---------------------------------------------------------------------------
// Read sets: TSV, one read per line (m indices), self-describing header.
// ---------------------------------------------------------------------------

inline void write_reads(std::ostream& os, const ReadSet& rs) {
  os << "#caecc-reads m=" << rs.m << " n=" << rs.n << " w=" << rs.w << '\n';
  for (const auto& read : rs.reads) {
    for (std::size_t i = 0; i < read.size(); ++i) os << (i ? "\t" : "") << read[i];
    os << '\n';
  }
}

inline ReadSet read_reads(std::istream& is) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), ErrorCode::BAD_FORMAT, "empty read file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ReadSet rs;
  if (std::sscanf(line.c_str(), "#caecc-reads m=%d n=%d w=%d", &rs.m, &rs.n, &rs.w) != 3)
    raise(ErrorCode::BAD_FORMAT, "missing #caecc-reads header");
  require(rs.m >= 1 && rs.n >= 2 && rs.w >= 1, ErrorCode::BAD_FORMAT, "bad header values");
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> read;
    std::istringstream fields(line);
    int v;
    while (fields >> v) read.push_back(v);
    require(static_cast<int>(read.size()) == rs.m, ErrorCode::BAD_FORMAT,
            "each read carries exactly m indices");
    for (int idx : read)
      require(idx >= 0 && idx < rs.n, ErrorCode::BAD_FORMAT, "read index out of range");
    rs.reads.push_back(std::move(read));
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline std::string format_probability(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

inline Json sim_report_json(const SimReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["w"] = r.w;
  j["t"] = r.t;
  j["e"] = r.e;
  j["variant"] = r.variant;
  j["mode"] = to_string(r.mode);
  j["reads_per_trial"] = r.reads_per_trial;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["decode_failures"] = r.decode_failures;
  j["miscorrections"] = r.miscorrections;
  j["success_rate"] = r.success_rate();
  j["seed"] = r.seed;
  j["deficit_hist"] = r.deficit_hist;
  return j;
}

inline std::string sim_report_csv_header() {
  return "m,n,w,t,e,variant,mode,reads_per_trial,trials,successes,decode_failures,"
         "miscorrections,success_rate,seed";
}

inline std::string sim_report_csv_row(const SimReport& r) {
  std::ostringstream os;
  os << r.m << ',' << r.n << ',' << r.w << ',' << r.t << ',' << r.e << ',' << r.variant << ','
     << to_string(r.mode) << ',' << r.reads_per_trial << ',' << r.trials << ',' << r.successes
     << ',' << r.decode_failures << ',' << r.miscorrections << ','
     << format_probability(r.success_rate()) << ',' << r.seed;
  return os.str();
}

inline Json bound_report_json(const BoundReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["w"] = r.w;
  j["t"] = r.t;
  j["e"] = r.e;
  j["p"] = r.p;
  j["log2_space"] = r.log2_space;
  if (r.ball_packing) {
    j["ball_packing_log2_size_ub"] = r.ball_packing->log2_size_ub;
    j["ball_packing_redundancy_lb"] = r.ball_packing->redundancy_lb;
  } else {
    j["ball_packing_skip_reason"] = r.ball_packing_skip_reason;
  }
  j["noisy_rows_log2_size_ub"] = r.noisy_rows.log2_size_ub;
  j["noisy_rows_redundancy_lb"] = r.noisy_rows.redundancy_lb;
  {
    // the packing-proof spelling of the same bound, reported for cross-checking
    int e = std::min(r.e, r.w);
    double proof_form = static_cast<double>(r.t) * log2_big(binomial(r.n, r.w - e)) +
                        static_cast<double>(r.m - r.t) * log2_big(binomial(r.n, r.w)) -
                        static_cast<double>(r.t) * log2_big(binomial(r.w, e));
    j["noisy_rows_log2_size_ub_proof_form"] = proof_form;
  }
  j["uniform_construction_redundancy"] = r.uniform_construction_redundancy;
  if (r.two_tier_construction_redundancy) {
    j["t1"] = *r.t1;
    j["t2"] = *r.t2;
    j["two_tier_construction_redundancy"] = *r.two_tier_construction_redundancy;
  }
  j["two_error_ball_redundancy_lb"] = r.two_error_ball.redundancy_lb;
  j["two_error_ball_log2_size_ub_displayed"] = r.two_error_ball.log2_size_ub_displayed;
  j["two_error_ball_log2_size_ub_power_m"] = r.two_error_ball.log2_size_ub_power_m;
  j["two_error_ball_numerator_discrepancy"] =
      "displayed form uses C(n,w); the power-m form C(n,w)^m matches the packing argument";
  return j;
}

inline std::string bound_report_csv_header() {
  return "m,n,w,t,e,p,log2_space,ball_packing_log2_size_ub,ball_packing_redundancy_lb,noisy_rows_log2_size_ub,"
         "noisy_rows_redundancy_lb,uniform_construction_redundancy,two_tier_construction_redundancy,two_error_ball_redundancy_lb,"
         "two_error_ball_log2_size_ub_displayed,two_error_ball_log2_size_ub_power_m";
}

inline std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << r.m << ',' << r.n << ',' << r.w << ',' << r.t << ',' << r.e << ',' << r.p << ','
     << r.log2_space << ',';
  if (r.ball_packing)
    os << r.ball_packing->log2_size_ub << ',' << r.ball_packing->redundancy_lb << ',';
  else
    os << ",,";
  os << r.noisy_rows.log2_size_ub << ',' << r.noisy_rows.redundancy_lb << ',' << r.uniform_construction_redundancy << ',';
  if (r.two_tier_construction_redundancy) os << *r.two_tier_construction_redundancy;
  os << ',' << r.two_error_ball.redundancy_lb << ',' << r.two_error_ball.log2_size_ub_displayed << ','
     << r.two_error_ball.log2_size_ub_power_m;
  return os.str();
}

// ---------------------------------------------------------------------------
// Small file helpers
// ---------------------------------------------------------------------------

inline std::string slurp_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  require(is.good(), ErrorCode::IO_ERROR, "cannot open " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

inline void spit_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  require(os.good(), ErrorCode::IO_ERROR, "cannot open " + path + " for writing");
  os << content;
  require(os.good(), ErrorCode::IO_ERROR, "write to " + path + " failed");
}

inline std::vector<std::uint8_t> read_binary_file(const std::string& path) {
  std::string s = slurp_file(path);
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

inline void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  spit_file(path, std::string(bytes.begin(), bytes.end()));
}

}  // namespace caecc
