// caecc: encode, decode, simulate and analyze composite asymmetric
// error-correcting codes for combinatorial-composite DNA storage.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caecc/caecc.hpp"

namespace {

using namespace caecc;

// Grids: comma lists with a..b ranges, e.g. "1,5,10..12".
std::vector<long> parse_grid(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stol(item));
      } else {
        long lo = std::stol(item.substr(0, dots));
        long hi = std::stol(item.substr(dots + 2));
        require(lo <= hi, ErrorCode::BAD_FORMAT, "empty range " + item);
        for (long v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      raise(ErrorCode::BAD_FORMAT, "bad grid item: " + item);
    }
  }
  require(!out.empty(), ErrorCode::BAD_FORMAT, "empty grid: " + text);
  return out;
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (path) {
    spit_file(*path, content);
  } else {
    std::cout << content;
  }
}

std::string payload_sidecar_path(const std::string& payload_path) {
  return payload_path + ".json";
}

CodeSpec build_spec(const std::string& variant, int m, int n, int w, int t, int e, int t1,
                    int t2, int e1, int e2) {
  if (variant == "uniform") return CodeSpec::uniform(m, n, w, t, e);
  if (variant == "two_tier") return CodeSpec::two_tier(m, n, w, t1, t2);
  if (variant == "generalized") return CodeSpec::generalized(m, n, w, t1, e1, t2, e2);
  raise(ErrorCode::BAD_FORMAT, "unknown variant: " + variant);
}

// ---------------------------------------------------------------------------
// params
// ---------------------------------------------------------------------------

int cmd_params(int m, int n, int w, int t, int e, const std::string& format) {
  CodeParams params = validate_params(m, n, w, t, e);
  Int cnw = binomial(n, w);
  std::optional<long> bits;
  if (params.n == params.p && e == 1) bits = payload_bit_count(params);
  std::optional<std::string> size_log2;
  if (params.n == params.p && e == 1) {
    std::ostringstream os;
    os << log2_big(ipow(cnw, m) / ipow(params.p, t));
    size_log2 = os.str();
  }

  long e1_bits = floor_log2(cnw);
  if (format == "json") {
    Json j;
    j["m"] = m;
    j["n"] = n;
    j["w"] = w;
    j["t"] = t;
    j["e"] = e;
    j["p"] = params.p;
    j["symbols_per_position"] = cnw.str();
    j["e1_bits_per_row"] = e1_bits;
    if (bits)
      j["payload_bits"] = *bits;
    else
      j["payload_bits_unavailable"] = "explicit encoder requires n = p prime and e = 1";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "m=" << m << " n=" << n << " w=" << w << " t=" << t << " e=" << e << "\n";
    std::cout << "p=" << params.p << " (smallest prime >= n)\n";
    std::cout << "C(n,w)=" << cnw << "\n";
    std::cout << "e1_bits_per_row=" << e1_bits << "\n";
    if (bits)
      std::cout << "payload_bits=" << *bits << "\n";
    else
      std::cout << "payload_bits: unavailable (explicit encoder requires n = p prime, e = 1)\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// encode / decode / correct
// ---------------------------------------------------------------------------

int cmd_encode(int m, int n, int w, int t, int e, const std::string& in,
               const std::string& out) {
  CodeSpec spec = CodeSpec::uniform(m, n, w, t, e);
  long bits = spec.payload_bits();
  std::vector<std::uint8_t> bytes = read_binary_file(in);
  Payload payload{unpack_bits(bytes, bits)};

  std::ifstream sidecar(payload_sidecar_path(in));
  if (sidecar.good()) {
    Json j = Json::parse(sidecar);
    require(j["payload_bits"] == bits && j["m"] == m && j["n"] == n && j["w"] == w &&
                j["t"] == t && j["e"] == e,
            ErrorCode::BAD_FORMAT, "payload sidecar disagrees with the given parameters");
  }

  CompositeWord x = encode(payload, spec);
  std::ostringstream os;
  write_word(os, x);
  spit_file(out, os.str());
  return 0;
}

int cmd_decode(int m, int n, int w, int t, int e, const std::string& in,
               const std::string& out) {
  CodeSpec spec = CodeSpec::uniform(m, n, w, t, e);
  std::istringstream is(slurp_file(in));
  ReceivedWord y = read_received(is, w);
  Payload payload = decode(y, spec);
  write_binary_file(out, pack_bits(payload.bits));
  spit_file(payload_sidecar_path(out), payload_header(spec).dump(2) + "\n");
  return 0;
}

int cmd_correct(const CodeSpec& spec, const std::string& in, const std::string& out) {
  std::istringstream is(slurp_file(in));
  ReceivedWord y = read_received(is, spec.w());
  CompositeWord x = correct_word(y, spec);
  std::ostringstream os;
  write_word(os, x);
  spit_file(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int cmd_simulate(int m, int n, int w, int t, int e, const std::string& mode_name, long trials,
                 std::uint64_t seed, const std::string& reads_grid, const std::string& format,
                 const std::optional<std::string>& out,
                 const std::optional<std::string>& dump_reads) {
  CodeSpec spec = CodeSpec::uniform(m, n, w, t, e);
  SimMode mode;
  if (mode_name == "pattern")
    mode = SimMode::Pattern;
  else if (mode_name == "reads")
    mode = SimMode::Reads;
  else
    raise(ErrorCode::BAD_FORMAT, "mode must be pattern or reads");

  std::vector<long> reads = mode == SimMode::Reads ? parse_grid(reads_grid)
                                                   : std::vector<long>{0};
  require(!dump_reads || (mode == SimMode::Reads && reads.size() == 1), ErrorCode::BAD_FORMAT,
          "--dump-reads needs reads mode with a single --reads value");

  std::vector<SimReport> reports;
  for (long R : reads) {
    ReadSet first;
    ReadSet* capture = dump_reads ? &first : nullptr;
    reports.push_back(monte_carlo(spec, mode, R, trials, seed, capture));
    if (dump_reads) {
      std::ostringstream os;
      write_reads(os, first);
      spit_file(*dump_reads, os.str());
    }
  }

  std::ostringstream os;
  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(sim_report_json(r));
    os << j.dump(2) << "\n";
  } else {
    os << sim_report_csv_header() << "\n";
    for (const auto& r : reports) os << sim_report_csv_row(r) << "\n";
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

int cmd_bounds(const std::string& ms, const std::string& ns, const std::string& ws,
               const std::string& ts, const std::string& es, std::optional<int> t1,
               std::optional<int> t2, const std::string& format,
               const std::optional<std::string>& out) {
  std::vector<BoundReport> reports;
  for (long m : parse_grid(ms))
    for (long n : parse_grid(ns))
      for (long w : parse_grid(ws))
        for (long t : parse_grid(ts))
          for (long e : parse_grid(es))
            reports.push_back(compute_bound_report(static_cast<int>(m), static_cast<int>(n),
                                                   static_cast<int>(w), static_cast<int>(t),
                                                   static_cast<int>(e), t1, t2));
  std::ostringstream os;
  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(bound_report_json(r));
    os << j.dump(2) << "\n";
  } else {
    os << bound_report_csv_header() << "\n";
    for (const auto& r : reports) os << bound_report_csv_row(r) << "\n";
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

int cmd_stats(const std::string& ws, const std::string& rs, const std::string& es, bool table,
              std::optional<int> m, const std::string& ts, const std::string& format,
              const std::optional<std::string>& out) {
  std::ostringstream os;
  if (table) {
    require(m.has_value(), ErrorCode::BAD_FORMAT, "--table needs --m");
    std::vector<long> wg = parse_grid(ws), rg = parse_grid(rs);
    require(wg.size() == 1 && rg.size() == 1, ErrorCode::BAD_FORMAT,
            "--table needs single --w and --R values");
    MissDistribution dist = miss_distribution(static_cast<int>(wg[0]), rg[0]);
    std::vector<long> tg = ts.empty() ? parse_grid("1.." + std::to_string(*m)) : parse_grid(ts);
    std::vector<long> eg = es.empty() ? parse_grid("1..5") : parse_grid(es);
    if (format == "json") {
      Json j = Json::array();
      for (long t : tg)
        for (long e : eg) {
          Json row;
          row["t"] = t;
          row["e"] = e;
          row["probability"] = to_double(
              p_word_success(dist, static_cast<int>(t), static_cast<int>(e), *m));
          j.push_back(row);
        }
      os << j.dump(2) << "\n";
    } else {
      os << "t,e,probability\n";
      for (long t : tg)
        for (long e : eg)
          os << t << ',' << e << ','
             << format_probability(to_double(
                    p_word_success(dist, static_cast<int>(t), static_cast<int>(e), *m)))
             << "\n";
    }
  } else {
    if (format == "json") {
      Json j = Json::array();
      for (long w : parse_grid(ws))
        for (long R : parse_grid(rs)) {
          MissDistribution dist = miss_distribution(static_cast<int>(w), R);
          std::vector<long> eg = es.empty() ? parse_grid("0.." + std::to_string(w - 1))
                                            : parse_grid(es);
          for (long e : eg) {
            Json row;
            row["w"] = w;
            row["R"] = R;
            row["e_or_t"] = e;
            row["value"] = to_double(p_at_least_e(dist, static_cast<int>(e)));
            j.push_back(row);
          }
        }
      os << j.dump(2) << "\n";
    } else {
      os << "w,R,e_or_t,value\n";
      for (long w : parse_grid(ws))
        for (long R : parse_grid(rs)) {
          MissDistribution dist = miss_distribution(static_cast<int>(w), R);
          std::vector<long> eg = es.empty() ? parse_grid("0.." + std::to_string(w - 1))
                                            : parse_grid(es);
          for (long e : eg)
            os << w << ',' << R << ',' << e << ','
               << format_probability(to_double(p_at_least_e(dist, static_cast<int>(e))))
               << "\n";
        }
    }
  }
  write_output(out, os.str());
  return 0;
}

// ---------------------------------------------------------------------------
// verify: exhaustive tiny-instance property battery
// ---------------------------------------------------------------------------

struct VerifyLine {
  std::string status;  // PASS / FAIL / SKIP
  std::string name;
  std::string detail;
};

void report_line(std::vector<VerifyLine>& lines, const std::string& name, bool ok,
                 const std::string& detail = "") {
  lines.push_back({ok ? "PASS" : "FAIL", name, detail});
}

void skip_line(std::vector<VerifyLine>& lines, const std::string& name,
               const std::string& reason) {
  lines.push_back({"SKIP", name, reason});
}

int cmd_verify(const CodeSpec& spec, long budget) {
  std::vector<VerifyLine> lines;
  const CodeParams& prm = spec.params();

  // Coset sizes: equal to C(n,w)/n exactly when n is prime.
  if (is_prime(prm.n)) {
    CosetTable table(prm.n, prm.w, prm.n);
    Int expected = binomial(prm.n, prm.w) / prm.n;
    bool ok = true;
    for (long s = 0; s < prm.n; ++s) ok = ok && table.count(s) == expected;
    report_line(lines, "coset-uniformity", ok, "every coset has C(n,w)/n words");
  } else {
    CosetTable table(prm.n, prm.w, prm.p);
    Int total = 0;
    for (long s = 0; s < prm.p; ++s) total += table.count(s);
    report_line(lines, "coset-total", total == binomial(prm.n, prm.w),
                "coset sizes sum to C(n,w)");
    skip_line(lines, "coset-uniformity", "n is not prime");
  }

  Int space = ipow(binomial(prm.n, prm.w), prm.m);
  if (space > budget) {
    skip_line(lines, "membership-count", "space larger than --budget");
    skip_line(lines, "correction-exhaustive", "space larger than --budget");
    skip_line(lines, "distance-criterion", "space larger than --budget");
    skip_line(lines, "caecc-ground-truth", "space larger than --budget");
    skip_line(lines, "redundancy-vs-bound", "space larger than --budget");
  } else {
    std::vector<CompositeWord> code = enumerate_codewords(spec, budget);
    report_line(lines, "membership-count",
                Int(code.size()) == code_size(spec, budget),
                "enumerated " + std::to_string(code.size()) + " codewords");

    bool t2ok = true;
    long checked = 0;
    for (const auto& x : code) {
      for_each_pattern(x, spec.total_row_budget(), spec.e2(), [&](const ErrorPattern& pat) {
        // Stay inside the advertised correction family.
        int tier2 = 0, tier1 = 0;
        for (const auto& row : pat.deletions) {
          if (static_cast<int>(row.size()) > spec.e1()) ++tier2;
          else if (!row.empty()) ++tier1;
        }
        if (tier2 > spec.t2() || tier1 + tier2 > spec.total_row_budget()) return;
        if (spec.variant() != Variant::Uniform && tier1 > spec.t1()) return;
        ++checked;
        try {
          if (!(correct_word(inject_errors(x, pat), spec) == x)) t2ok = false;
        } catch (const Error&) {
          t2ok = false;
        }
      });
      if (!t2ok) break;
    }
    report_line(lines, "correction-exhaustive", t2ok,
                std::to_string(checked) + " (codeword, pattern) pairs corrected");

    if (spec.variant() == Variant::Uniform) {
      report_line(lines, "distance-criterion",
                  min_distance_at_least(code, 2 * spec.e2(), spec.total_row_budget() + 1),
                  "min d_{2e-H} >= t+1");
    } else {
      skip_line(lines, "distance-criterion", "distance criterion applies to uniform codes");
    }
    try {
      auto check = verify_caecc_tiered_exhaustive(code, spec.t1(), spec.e1(), spec.t2(),
                                                  spec.e2());
      report_line(lines, "caecc-ground-truth", check.ok,
                  "no two codewords collide within the correction family");
    } catch (const Error& err) {
      skip_line(lines, "caecc-ground-truth", err.what());
    }

    double redundancy = static_cast<double>(prm.m) * log2_big(binomial(prm.n, prm.w)) -
                        log2_big(Int(code.size()));
    double bound = spec.variant() == Variant::Uniform
                       ? construction_redundancy_uniform(prm.t, prm.e, prm.p)
                       : construction_redundancy_two_tier(spec.t1(), spec.t2(), prm.p);
    std::ostringstream detail;
    detail << "achieved " << redundancy << " bits, construction bound " << bound << " bits";
    report_line(lines, "redundancy-vs-bound", redundancy <= bound + 1e-9, detail.str());
  }

  bool all_ok = true;
  for (const auto& line : lines) {
    std::cout << line.status << " " << line.name;
    if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
    std::cout << "\n";
    all_ok = all_ok && line.status != "FAIL";
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// shortmers
// ---------------------------------------------------------------------------

int cmd_shortmers(const std::optional<std::string>& map_path,
                  const std::optional<std::string>& word_path, std::optional<int> w,
                  const std::optional<std::string>& out) {
  ShortmerAlphabet alphabet = map_path
                                  ? [&] {
                                      std::istringstream is(slurp_file(*map_path));
                                      return read_shortmers(is);
                                    }()
                                  : ShortmerAlphabet::demo16();
  std::ostringstream os;
  if (word_path) {
    require(w.has_value(), ErrorCode::BAD_FORMAT, "--word needs --w");
    std::istringstream is(slurp_file(*word_path));
    CompositeWord x = read_word(is, *w);
    for (int i = 0; i < x.m(); ++i) {
      os << i << ":";
      for (const auto& bases : alphabet.symbol_bases(x.row(i))) os << " " << bases;
      os << "\n";
    }
  } else {
    write_shortmers(os, alphabet);
  }
  write_output(out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite asymmetric error-correcting codes for combinatorial DNA storage"};
  app.require_subcommand(1);

  int m = 0, n = 0, w = 0, t = 1, e = 1;
  int t1 = 1, t2 = 0, e1 = 1, e2 = 1;
  std::string variant = "uniform";
  std::string format = "text";
  std::string in_path, out_path;
  std::optional<std::string> opt_out, dump_reads, map_path, word_path;
  std::optional<int> opt_m, opt_t1, opt_t2, opt_w;
  std::string grid_m = "0", grid_n = "0", grid_w = "0", grid_t = "0", grid_e = "0";
  std::string grid_R = "1";
  std::string reads = "10", grid_ts, grid_es;
  long trials = 1000, budget = 2'000'000;
  std::uint64_t seed = 0;
  bool table = false;

  auto* params_cmd = app.add_subcommand("params", "validate parameters, report p and payload size");
  params_cmd->add_option("--m", m)->required();
  params_cmd->add_option("--n", n)->required();
  params_cmd->add_option("--w", w)->required();
  params_cmd->add_option("--t", t)->required();
  params_cmd->add_option("--e", e)->required();
  params_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* encode_cmd = app.add_subcommand("encode", "payload file -> codeword file");
  encode_cmd->add_option("--m", m)->required();
  encode_cmd->add_option("--n", n)->required();
  encode_cmd->add_option("--w", w)->required();
  encode_cmd->add_option("--t", t)->required();
  encode_cmd->add_option("--e", e)->capture_default_str();
  encode_cmd->add_option("--in", in_path)->required();
  encode_cmd->add_option("--out", out_path)->required();

  auto* decode_cmd = app.add_subcommand("decode", "received word file -> payload file");
  decode_cmd->add_option("--m", m)->required();
  decode_cmd->add_option("--n", n)->required();
  decode_cmd->add_option("--w", w)->required();
  decode_cmd->add_option("--t", t)->required();
  decode_cmd->add_option("--e", e)->capture_default_str();
  decode_cmd->add_option("--in", in_path)->required();
  decode_cmd->add_option("--out", out_path)->required();

  auto* correct_cmd = app.add_subcommand("correct", "received word file -> corrected word file");
  correct_cmd->add_option("--m", m)->required();
  correct_cmd->add_option("--n", n)->required();
  correct_cmd->add_option("--w", w)->required();
  correct_cmd->add_option("--t", t);
  correct_cmd->add_option("--e", e);
  correct_cmd->add_option("--variant", variant)
      ->check(CLI::IsMember({"uniform", "two_tier", "generalized"}));
  correct_cmd->add_option("--t1", t1);
  correct_cmd->add_option("--t2", t2);
  correct_cmd->add_option("--e1", e1);
  correct_cmd->add_option("--e2", e2);
  correct_cmd->add_option("--in", in_path)->required();
  correct_cmd->add_option("--out", out_path)->required();

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo decoding runs");
  std::string mode = "pattern";
  sim_cmd->add_option("--m", m)->required();
  sim_cmd->add_option("--n", n)->required();
  sim_cmd->add_option("--w", w)->required();
  sim_cmd->add_option("--t", t)->required();
  sim_cmd->add_option("--e", e)->capture_default_str();
  sim_cmd->add_option("--mode", mode)->check(CLI::IsMember({"pattern", "reads"}));
  sim_cmd->add_option("--trials", trials)->capture_default_str();
  sim_cmd->add_option("--seed", seed)->required();
  sim_cmd->add_option("--reads", reads, "reads per trial; grid like 1,5,10..12");
  sim_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  sim_cmd->add_option("--out", opt_out);
  sim_cmd->add_option("--dump-reads", dump_reads, "write the first trial's read set (TSV)");

  auto* bounds_cmd = app.add_subcommand("bounds", "redundancy bound reports over a grid");
  bounds_cmd->add_option("--m", grid_m)->required();
  bounds_cmd->add_option("--n", grid_n)->required();
  bounds_cmd->add_option("--w", grid_w)->required();
  bounds_cmd->add_option("--t", grid_t)->required();
  bounds_cmd->add_option("--e", grid_e)->required();
  bounds_cmd->add_option("--t1", opt_t1);
  bounds_cmd->add_option("--t2", opt_t2);
  bounds_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  bounds_cmd->add_option("--out", opt_out);

  auto* stats_cmd = app.add_subcommand("stats", "read-depth error probabilities");
  stats_cmd->add_option("--w", grid_w)->required();
  stats_cmd->add_option("--R", grid_R)->required();
  stats_cmd->add_option("--e", grid_es);
  stats_cmd->add_flag("--table", table, "emit a (t,e) success-probability table");
  stats_cmd->add_option("--m", opt_m);
  stats_cmd->add_option("--t", grid_ts);
  stats_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  stats_cmd->add_option("--out", opt_out);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive tiny-instance property battery");
  verify_cmd->add_option("--m", m)->required();
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--w", w)->required();
  verify_cmd->add_option("--t", t);
  verify_cmd->add_option("--e", e);
  verify_cmd->add_option("--variant", variant)
      ->check(CLI::IsMember({"uniform", "two_tier", "generalized"}));
  verify_cmd->add_option("--t1", t1);
  verify_cmd->add_option("--t2", t2);
  verify_cmd->add_option("--e1", e1);
  verify_cmd->add_option("--e2", e2);
  verify_cmd->add_option("--budget", budget)->capture_default_str();

  auto* shortmer_cmd = app.add_subcommand("shortmers", "dump or apply a shortmer map");
  shortmer_cmd->add_option("--map", map_path, "TSV map; defaults to the embedded 16-shortmer set");
  shortmer_cmd->add_option("--word", word_path, "word file to spell out");
  shortmer_cmd->add_option("--w", opt_w);
  shortmer_cmd->add_option("--out", opt_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*params_cmd) return cmd_params(m, n, w, t, e, format);
    if (*encode_cmd) return cmd_encode(m, n, w, t, e, in_path, out_path);
    if (*decode_cmd) return cmd_decode(m, n, w, t, e, in_path, out_path);
    if (*correct_cmd)
      return cmd_correct(build_spec(variant, m, n, w, t, e, t1, t2, e1, e2), in_path, out_path);
    if (*sim_cmd)
      return cmd_simulate(m, n, w, t, e, mode, trials, seed, reads, format == "text" ? "csv" : format,
                          opt_out, dump_reads);
    if (*bounds_cmd)
      return cmd_bounds(grid_m, grid_n, grid_w, grid_t, grid_e, opt_t1, opt_t2,
                        format == "text" ? "csv" : format, opt_out);
    if (*stats_cmd)
      return cmd_stats(grid_w, grid_R, grid_es, table, opt_m, grid_ts,
                       format == "text" ? "csv" : format, opt_out);
    if (*verify_cmd)
      return cmd_verify(build_spec(variant, m, n, w, t, e, t1, t2, e1, e2), budget);
    if (*shortmer_cmd) return cmd_shortmers(map_path, word_path, opt_w, opt_out);
  } catch (const Error& err) {
    Json j;
    j["code"] = to_string(err.code());
    j["message"] = err.what();
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    Json j;
    j["code"] = "INTERNAL";
    j["message"] = ex.what();
    std::cerr << j.dump() << "\n";
    return 2;
  }
  return 0;
}
