// powerful-lab: command-line surface over libpowerful's C API.
//
// Data payload goes to stdout (or --out); a one-line JSON run manifest with
// an FNV-1a digest of the payload goes to stderr, so reruns can be compared
// byte-for-byte. Findings (consecutive triples, 3AP hits in no-AP scans)
// print a FINDING banner on stderr and still exit 0.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powerful/powerful.h"

namespace {

struct CommandError {
  int exit_code;
  std::string message;
};

void check(pf_status st) {
  if (st == PF_OK) return;
  int code = (st == PF_ERR_DOMAIN || st == PF_ERR_PARSE) ? 2 : 1;
  throw CommandError{code, pf_last_error()};
}

std::string u128_str(pf_u128 v) {
  char buf[48];
  check(pf_u128_to_string(v, buf, sizeof buf));
  return buf;
}

pf_u128 parse_u128(const std::string& text) {
  pf_u128 v;
  check(pf_u128_from_string(text.c_str(), &v));
  return v;
}

std::string dbl(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

using Row = std::vector<std::pair<std::string, std::string>>;

// Accumulates the payload in either format; tokens arrive JSON-ready
// (numbers bare, strings quoted upstream).
class Output {
 public:
  explicit Output(bool csv) : csv_(csv) {}

  void row(const Row& kv) {
    if (csv_) {
      if (!header_done_) {
        for (size_t i = 0; i < kv.size(); ++i)
          payload_ += (i ? "," : "") + kv[i].first;
        payload_ += '\n';
        header_done_ = true;
      }
      for (size_t i = 0; i < kv.size(); ++i) payload_ += (i ? "," : "") + strip_quotes(kv[i].second);
      payload_ += '\n';
    } else {
      payload_ += '{';
      for (size_t i = 0; i < kv.size(); ++i) {
        if (i) payload_ += ',';
        payload_ += '"' + kv[i].first + "\":" + kv[i].second;
      }
      payload_ += "}\n";
    }
  }

  // single value: bare token in json mode, one-column csv otherwise
  void scalar(const std::string& name, const std::string& token) {
    if (csv_)
      payload_ += name + '\n' + strip_quotes(token) + '\n';
    else
      payload_ += token + '\n';
  }

  const std::string& payload() const { return payload_; }

 private:
  static std::string strip_quotes(const std::string& t) {
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
    return t;
  }

  bool csv_;
  bool header_done_ = false;
  std::string payload_;
};

struct Manifest {
  std::string subcommand;
  Row params;

  void param(const std::string& key, const std::string& value) { params.push_back({key, value}); }

  std::string render(double wall_ms, uint64_t digest) const {
    std::string out = "{\"subcommand\":\"" + subcommand + "\",\"params\":{";
    for (size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += '"' + params[i].first + "\":" + params[i].second;
    }
    char tail[128];
    std::snprintf(tail, sizeof tail, "},\"version\":\"%s\",\"wall_ms\":%.3f,\"digest\":\"fnv1a64:%016llx\"}",
                  pf_version(), wall_ms, (unsigned long long)digest);
    out += tail;
    return out;
  }
};

struct Options {
  std::string format = "json";
  unsigned threads = 0;
  std::string out_path;
};

void emit_ap_row(Output& out, const char* type, pf_u128 a, pf_u128 b, pf_u128 c, bool csv) {
  if (csv) {
    out.row({{"type", std::string(type)},
             {"n1", u128_str(a)},
             {"n2", u128_str(b)},
             {"n3", u128_str(c)}});
  } else {
    Row r;
    r.push_back({"type", "\"" + std::string(type) + "\""});
    r.push_back({"members", "[" + u128_str(a) + "," + u128_str(b) + "," + u128_str(c) + "]"});
    out.row(r);
  }
}

void emit_pair_row(Output& out, pf_u128 a, pf_u128 b, bool csv) {
  if (csv) {
    out.row({{"type", "pair"}, {"n1", u128_str(a)}, {"n2", u128_str(b)}});
  } else {
    out.row({{"type", "\"pair\""}, {"members", "[" + u128_str(a) + "," + u128_str(b) + "]"}});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"powerful-lab: enumeration and analysis of powerful (k-full) numbers"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--threads/--out may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "output format: json (JSON lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", opt.threads, "worker threads for scans (0 = all cores)");
  app.add_option("--out", opt.out_path, "write the data payload to a file instead of stdout");

  // shared option storage; each subcommand binds the flags it uses
  std::string s_x, s_y, s_q, s_r, s_z, s_B, s_N, s_gap_max, s_b, s_c, s_n1, s_n2, s_n3, s_P;
  std::vector<std::string> s_xs;
  uint32_t k = 2;
  double theta = 0.3, smooth_exponent = 0.5, noap_exponent = 0.2, s_arg = 0;
  bool triples_mode = false;
  std::string algo = "auto", verify_target;

  auto* cmd_enumerate = app.add_subcommand("enumerate", "k-full numbers up to N or in (x, x+y]");
  cmd_enumerate->add_option("--k", k, "fullness order (>= 2)");
  cmd_enumerate->add_option("--N", s_N, "upper bound for [1, N]");
  cmd_enumerate->add_option("--x", s_x, "interval start (exclusive)");
  cmd_enumerate->add_option("--y", s_y, "interval length");
  cmd_enumerate->add_option("--B", s_B, "smoothness bound on the largest prime factor");
  cmd_enumerate->add_option("--algo", algo, "auto | dfs | a2b3")
      ->check(CLI::IsMember({"auto", "dfs", "a2b3"}));

  auto* cmd_count = app.add_subcommand("count", "Q_k(x), or a window report when --y is given");
  cmd_count->add_option("--k", k);
  cmd_count->add_option("--x", s_x)->required();
  cmd_count->add_option("--y", s_y);

  auto* cmd_constant = app.add_subcommand("constant", "Euler-product main-term constant, or zeta via --s");
  cmd_constant->add_option("--k", k);
  cmd_constant->add_option("--P", s_P, "truncation prime (default 1e6)");
  cmd_constant->add_option("--s", s_arg, "evaluate zeta(s) instead (s >= 1.1)");

  auto* cmd_ratio = app.add_subcommand("ratio", "short-interval count over its predicted main term");
  cmd_ratio->add_option("--x", s_x)->required();
  cmd_ratio->add_option("--theta", theta)->required();
  cmd_ratio->add_option("--k", k);

  auto* cmd_scan = app.add_subcommand("scan", "sup of window count / y^(1/k) over starts <= x");
  cmd_scan->add_option("--x", s_x, "largest window start")->required();
  cmd_scan->add_option("--y", s_y)->required();
  cmd_scan->add_option("--k", k);

  auto* cmd_residue = app.add_subcommand("residue", "squarefull in (x, x+y] with n = r (mod q)");
  cmd_residue->add_option("--x", s_x)->required();
  cmd_residue->add_option("--y", s_y)->required();
  cmd_residue->add_option("--q", s_q)->required();
  cmd_residue->add_option("--r", s_r)->required();

  auto* cmd_rough = app.add_subcommand("rough", "integers in (x, x+y], n = r (mod q), least prime factor > z");
  cmd_rough->add_option("--x", s_x)->required();
  cmd_rough->add_option("--y", s_y)->required();
  cmd_rough->add_option("--q", s_q)->required();
  cmd_rough->add_option("--r", s_r)->required();
  cmd_rough->add_option("--z", s_z)->required();

  auto* cmd_smooth = app.add_subcommand("smooth", "k-full in the window with p+(n) <= y^exponent");
  cmd_smooth->add_option("--x", s_x)->required();
  cmd_smooth->add_option("--y", s_y)->required();
  cmd_smooth->add_option("--k", k);
  cmd_smooth->add_option("--exponent", smooth_exponent, "smoothness exponent (default 0.5)");

  auto* cmd_shiu = app.add_subcommand("shiu", "prefix split of one squarefull n, or a case histogram with --y");
  cmd_shiu->add_option("--x", s_x, "n for a single split; interval start with --y")->required();
  cmd_shiu->add_option("--y", s_y, "interval length (histogram mode)");
  cmd_shiu->add_option("--z", s_z, "split threshold (histogram default: floor(sqrt(y)))");

  auto* cmd_aps = app.add_subcommand("aps", "three-term progressions among squarefull numbers in (x, x+y]");
  cmd_aps->add_option("--x", s_x)->required();
  cmd_aps->add_option("--y", s_y)->required();

  auto* cmd_consecutive = app.add_subcommand("consecutive", "consecutive squarefull pairs (or triples) up to N");
  cmd_consecutive->add_option("--N", s_N)->required();
  cmd_consecutive->add_flag("--triples", triples_mode, "scan for triples instead of pairs");

  auto* cmd_abc = app.add_subcommand("abc", "coprime reduction of b < c into an abc triple with its quality");
  cmd_abc->add_option("--b", s_b)->required();
  cmd_abc->add_option("--c", s_c)->required();

  auto* cmd_gaps = app.add_subcommand("gaps", "consecutive k-full pairs up to N with gap <= gap-max");
  cmd_gaps->add_option("--N", s_N)->required();
  cmd_gaps->add_option("--k", k);
  cmd_gaps->add_option("--gap-max", s_gap_max)->required();

  auto* cmd_certify = app.add_subcommand("certify", "abc certificates from squarefull 3APs");
  cmd_certify->add_option("--n1", s_n1);
  cmd_certify->add_option("--n2", s_n2);
  cmd_certify->add_option("--n3", s_n3);
  cmd_certify->add_option("--x", s_x, "with --y: certify every 3AP in (x, x+y]");
  cmd_certify->add_option("--y", s_y);

  auto* cmd_verify = app.add_subcommand("verify", "main | lemma1 | noap");
  cmd_verify->add_option("target", verify_target, "what to verify")
      ->required()
      ->check(CLI::IsMember({"main", "lemma1", "noap"}));
  cmd_verify->add_option("--x", s_xs, "sample point(s); comma-separated for noap")->delimiter(',');
  cmd_verify->add_option("--k", k);
  cmd_verify->add_option("--exponent", noap_exponent, "window exponent for noap (default 0.2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  pf_session* session = pf_session_new(0);
  if (!session) {
    std::cerr << "error: " << pf_last_error() << "\n";
    return 1;
  }

  bool csv = opt.format == "csv";
  Output out(csv);
  Manifest manifest;
  std::string findings;  // banner text, stderr
  auto t0 = std::chrono::steady_clock::now();

  try {
    if (app.got_subcommand(cmd_enumerate)) {
      manifest.subcommand = "enumerate";
      pf_u128 x{0, 0}, y{0, 0};
      if (!s_N.empty()) {
        y = parse_u128(s_N);
      } else if (!s_x.empty() && !s_y.empty()) {
        x = parse_u128(s_x);
        y = parse_u128(s_y);
      } else {
        throw CommandError{2, "enumerate needs --N, or both --x and --y"};
      }
      pf_u128 bound = s_B.empty() ? pf_u128_from_u64(0) : parse_u128(s_B);
      pf_algorithm a = algo == "dfs" ? PF_ALGO_DFS : algo == "a2b3" ? PF_ALGO_A2B3 : PF_ALGO_AUTO;
      manifest.param("k", std::to_string(k));
      manifest.param("x", u128_str(x));
      manifest.param("y", u128_str(y));
      manifest.param("B", u128_str(bound));
      manifest.param("algo", "\"" + algo + "\"");
      pf_enum* stream = nullptr;
      check(pf_enum_interval_new(session, x, y, k, bound, a, &stream));
      pf_u128 buf[1024];
      size_t produced = 0;
      do {
        check(pf_enum_next(stream, buf, 1024, &produced));
        for (size_t i = 0; i < produced; ++i) out.row({{"n", u128_str(buf[i])}});
      } while (produced == 1024);
      pf_enum_free(stream);

    } else if (app.got_subcommand(cmd_count)) {
      manifest.subcommand = "count";
      pf_u128 x = parse_u128(s_x);
      manifest.param("k", std::to_string(k));
      manifest.param("x", u128_str(x));
      if (s_y.empty()) {
        pf_u128 c;
        check(pf_qk_count(session, x, k, &c));
        out.scalar("count", u128_str(c));
      } else {
        pf_u128 y = parse_u128(s_y);
        manifest.param("y", u128_str(y));
        pf_window_report r;
        check(pf_window_count(session, x, y, k, &r));
        out.row({{"x", u128_str(r.x)},
                 {"y", u128_str(r.y)},
                 {"k", std::to_string(r.k)},
                 {"count", u128_str(r.count)},
                 {"conj_ratio", dbl(r.conj_ratio)},
                 {"thm1_ratio", dbl(r.thm1_ratio)}});
      }

    } else if (app.got_subcommand(cmd_constant)) {
      manifest.subcommand = "constant";
      if (cmd_constant->count("--s")) {
        manifest.param("s", dbl(s_arg));
        double v;
        check(pf_zeta(s_arg, &v));
        out.row({{"s", dbl(s_arg)}, {"zeta", dbl(v)}});
      } else {
        pf_u128 P = s_P.empty() ? pf_u128_from_u64(1000000) : parse_u128(s_P);
        if (P.hi) throw CommandError{2, "truncation prime P must be below 2^64"};
        manifest.param("k", std::to_string(k));
        manifest.param("P", u128_str(P));
        pf_euler_constant ec;
        check(pf_euler_product_constant(session, k, P.lo, &ec));
        out.row({{"k", std::to_string(ec.k)},
                 {"P", std::to_string(ec.truncation_prime)},
                 {"value", dbl(ec.value)},
                 {"tail_bound", dbl(ec.tail_bound)}});
      }

    } else if (app.got_subcommand(cmd_ratio)) {
      manifest.subcommand = "ratio";
      pf_u128 x = parse_u128(s_x);
      manifest.param("x", u128_str(x));
      manifest.param("theta", dbl(theta));
      manifest.param("k", std::to_string(k));
      pf_interval_ratio r;
      check(pf_short_interval_ratio(session, x, theta, k, &r));
      out.row({{"x", u128_str(x)},
               {"theta", dbl(theta)},
               {"k", std::to_string(k)},
               {"window", u128_str(r.window)},
               {"observed", u128_str(r.observed)},
               {"predicted", dbl(r.predicted)},
               {"ratio", dbl(r.ratio)}});

    } else if (app.got_subcommand(cmd_scan)) {
      manifest.subcommand = "scan";
      pf_u128 x = parse_u128(s_x), y = parse_u128(s_y);
      manifest.param("x", u128_str(x));
      manifest.param("y", u128_str(y));
      manifest.param("k", std::to_string(k));
      pf_sup_ratio r;
      check(pf_sup_ratio_scan(session, x, y, k, opt.threads, &r));
      out.row({{"x_max", u128_str(x)},
               {"y", u128_str(y)},
               {"k", std::to_string(k)},
               {"best_x", u128_str(r.best_x)},
               {"best_count", u128_str(r.best_count)},
               {"best_ratio", dbl(r.best_ratio)}});

    } else if (app.got_subcommand(cmd_residue)) {
      manifest.subcommand = "residue";
      pf_u128 x = parse_u128(s_x), y = parse_u128(s_y), q = parse_u128(s_q), r = parse_u128(s_r);
      manifest.param("x", u128_str(x));
      manifest.param("y", u128_str(y));
      manifest.param("q", u128_str(q));
      manifest.param("r", u128_str(r));
      pf_residue_report rep;
      check(pf_residue_count(session, x, y, q, r, &rep));
      out.row({{"x", u128_str(x)},
               {"y", u128_str(y)},
               {"q", u128_str(q)},
               {"r", u128_str(r)},
               {"count", u128_str(rep.count)},
               {"comparator", dbl(rep.comparator)},
               {"coprime", rep.coprime ? "true" : "false"}});

    } else if (app.got_subcommand(cmd_rough)) {
      manifest.subcommand = "rough";
      pf_u128 x = parse_u128(s_x), y = parse_u128(s_y), q = parse_u128(s_q), r = parse_u128(s_r),
              z = parse_u128(s_z);
      manifest.param("x", u128_str(x));
      manifest.param("y", u128_str(y));
      manifest.param("q", u128_str(q));
      manifest.param("r", u128_str(r));
      manifest.param("z", u128_str(z));
      pf_rough_report rep;
      check(pf_rough_count(session, x, y, q, r, z, &rep));
      out.row({{"x", u128_str(x)},
               {"y", u128_str(y)},
               {"q", u128_str(q)},
               {"r", u128_str(r)},
               {"z", u128_str(z)},
               {"count", u128_str(rep.count)},
               {"comparator", dbl(rep.comparator)}});

    } else if (app.got_subcommand(cmd_smooth)) {
      manifest.subcommand = "smooth";
      pf_u128 x = parse_u128(s_x), y = parse_u128(s_y);
      manifest.param("x", u128_str(x));
      manifest.param("y", u128_str(y));
      manifest.param("k", std::to_string(k));
      manifest.param("exponent", dbl(smooth_exponent));
      pf_smooth_report rep;
      check(pf_smooth_window_count(session, x, y, k, smooth_exponent, &rep));
      out.row({{"x", u128_str(x)},
               {"y", u128_str(y)},
               {"k", std::to_string(k)},
               {"exponent", dbl(smooth_exponent)},
               {"smooth_bound", u128_str(rep.smooth_bound)},
               {"count", u128_str(rep.count)},
               {"comparator", dbl(rep.comparator)}});

    } else if (app.got_subcommand(cmd_shiu)) {
      manifest.subcommand = "shiu";
      pf_u128 x = parse_u128(s_x);
      manifest.param("x", u128_str(x));
      if (s_y.empty()) {
        if (s_z.empty()) throw CommandError{2, "shiu single-split mode needs --z"};
        pf_u128 z = parse_u128(s_z);
        manifest.param("z", u128_str(z));
        pf_shiu_split sp;
        check(pf_shiu_split_number(session, x, z, &sp));
        out.row({{"n", u128_str(sp.n)},
                 {"z", u128_str(sp.z)},
                 {"b_part", u128_str(sp.b_part)},
                 {"d_part", u128_str(sp.d_part)},
                 {"case_id", std::to_string(sp.case_id)}});
      } else {
        pf_u128 y = parse_u128(s_y);
        pf_u128 z;
        if (s_z.empty())
          check(pf_ikroot(y, 2, &z));  // Theorem-2 coupling at q = 1
        else
          z = parse_u128(s_z);
        manifest.param("y", u128_str(y));
        manifest.param("z", u128_str(z));
        pf_u128 counts[3], total;
        check(pf_case_histogram(session, x, y, z, counts, &total));
        out.row({{"x", u128_str(x)},
                 {"y", u128_str(y)},
                 {"z", u128_str(z)},
                 {"case1", u128_str(counts[0])},
                 {"case2", u128_str(counts[1])},
                 {"case3", u128_str(counts[2])},
                 {"total", u128_str(total)}});
      }

    } else if (app.got_subcommand(cmd_aps)) {
      manifest.subcommand = "aps";
      pf_u128 x = parse_u128(s_x), y = parse_u128(s_y);
      manifest.param("x", u128_str(x));
      manifest.param("y", u128_str(y));
      size_t count = 0;
      check(pf_find_3aps(session, x, y, nullptr, 0, &count));
      std::vector<pf_ap_triple> aps(count);
      if (count) check(pf_find_3aps(session, x, y, aps.data(), count, &count));
      for (const auto& t : aps) emit_ap_row(out, "3ap", t.n1, t.n2, t.n3, csv);

    } else if (app.got_subcommand(cmd_consecutive)) {
      manifest.subcommand = "consecutive";
      pf_u128 N = parse_u128(s_N);
      manifest.param("N", u128_str(N));
      manifest.param("triples", triples_mode ? "true" : "false");
      if (triples_mode) {
        size_t count = 0;
        check(pf_find_consecutive_triples(session, N, nullptr, 0, &count));
        std::vector<pf_consecutive_triple> ts(count);
        if (count) check(pf_find_consecutive_triples(session, N, ts.data(), count, &count));
        for (const auto& t : ts) emit_ap_row(out, "triple", t.a, t.b, t.c, csv);
        if (count)
          findings = "FINDING: " + std::to_string(count) +
                     " consecutive squarefull triple(s) found; this contradicts the expected structure";
      } else {
        size_t count = 0;
        check(pf_find_consecutive_pairs(session, N, nullptr, 0, &count));
        std::vector<pf_pair> ps(count);
        if (count) check(pf_find_consecutive_pairs(session, N, ps.data(), count, &count));
        for (const auto& p : ps) emit_pair_row(out, p.a, p.b, csv);
      }

    } else if (app.got_subcommand(cmd_abc)) {
      manifest.subcommand = "abc";
      pf_u128 b = parse_u128(s_b), c = parse_u128(s_c);
      manifest.param("b", u128_str(b));
      manifest.param("c", u128_str(c));
      pf_abc_triple t;
      check(pf_make_coprime_triple(session, b, c, &t));
      out.row({{"a", u128_str(t.a)},
               {"b", u128_str(t.b)},
               {"c", u128_str(t.c)},
               {"rad", u128_str(t.rad)},
               {"quality", dbl(t.quality)},
               {"abc_interesting", t.quality > 1.0 ? "true" : "false"}});

    } else if (app.got_subcommand(cmd_gaps)) {
      manifest.subcommand = "gaps";
      pf_u128 N = parse_u128(s_N), gap_max = parse_u128(s_gap_max);
      manifest.param("N", u128_str(N));
      manifest.param("k", std::to_string(k));
      manifest.param("gap_max", u128_str(gap_max));
      size_t count = 0;
      check(pf_powerful_gap_scan(session, N, k, gap_max, nullptr, 0, &count));
      std::vector<pf_gap_record> gaps(count);
      if (count) check(pf_powerful_gap_scan(session, N, k, gap_max, gaps.data(), count, &count));
      for (const auto& g : gaps)
        out.row({{"b", u128_str(g.b)},
                 {"c", u128_str(g.c)},
                 {"gap", u128_str(g.gap)},
                 {"exponent", dbl(g.exponent)}});

    } else if (app.got_subcommand(cmd_certify)) {
      manifest.subcommand = "certify";
      std::vector<pf_ap_triple> triples;
      if (!s_n1.empty() || !s_n2.empty() || !s_n3.empty()) {
        if (s_n1.empty() || s_n2.empty() || s_n3.empty())
          throw CommandError{2, "certify needs all of --n1 --n2 --n3, or --x with --y"};
        triples.push_back({parse_u128(s_n1), parse_u128(s_n2), parse_u128(s_n3)});
        manifest.param("n1", u128_str(triples[0].n1));
        manifest.param("n2", u128_str(triples[0].n2));
        manifest.param("n3", u128_str(triples[0].n3));
      } else if (!s_x.empty() && !s_y.empty()) {
        pf_u128 x = parse_u128(s_x), y = parse_u128(s_y);
        manifest.param("x", u128_str(x));
        manifest.param("y", u128_str(y));
        size_t count = 0;
        check(pf_find_3aps(session, x, y, nullptr, 0, &count));
        triples.resize(count);
        if (count) check(pf_find_3aps(session, x, y, triples.data(), count, &count));
      } else {
        throw CommandError{2, "certify needs --n1 --n2 --n3, or --x with --y"};
      }
      std::vector<pf_ap_certificate> certs;
      certs.reserve(triples.size());
      for (const auto& t : triples) {
        pf_ap_certificate c;
        check(pf_ap_abc_certificate(session, t, &c));
        certs.push_back(c);
      }
      std::stable_sort(certs.begin(), certs.end(),
                       [](const pf_ap_certificate& a, const pf_ap_certificate& b) {
                         return a.triple.quality > b.triple.quality;
                       });
      for (const auto& c : certs)
        out.row({{"n1", u128_str(c.source.n1)},
                 {"n2", u128_str(c.source.n2)},
                 {"n3", u128_str(c.source.n3)},
                 {"D", u128_str(c.divisor)},
                 {"a", u128_str(c.triple.a)},
                 {"b", u128_str(c.triple.b)},
                 {"c", u128_str(c.triple.c)},
                 {"rad", u128_str(c.triple.rad)},
                 {"quality", dbl(c.triple.quality)}});

    } else if (app.got_subcommand(cmd_verify)) {
      manifest.subcommand = "verify";
      manifest.param("target", "\"" + verify_target + "\"");
      if (verify_target == "main") {
        if (s_xs.size() != 1) throw CommandError{2, "verify main needs exactly one --x"};
        pf_u128 x = parse_u128(s_xs[0]);
        manifest.param("x", u128_str(x));
        manifest.param("k", std::to_string(k));
        pf_main_term_check r;
        check(pf_verify_main_term(session, x, k, &r));
        out.row({{"x", u128_str(x)},
                 {"k", std::to_string(k)},
                 {"observed", u128_str(r.observed)},
                 {"predicted_main", dbl(r.predicted_main)},
                 {"ratio", dbl(r.ratio)},
                 {"residual_normalized", dbl(r.residual_normalized)}});
      } else if (verify_target == "lemma1") {
        if (s_xs.size() != 1) throw CommandError{2, "verify lemma1 needs exactly one --x"};
        pf_u128 X = parse_u128(s_xs[0]);
        manifest.param("x", u128_str(X));
        pf_reciprocal_sum r;
        check(pf_reciprocal_sum_squarefull(session, X, &r));
        out.row({{"X", u128_str(X)}, {"sum", dbl(r.sum)}, {"normalized", dbl(r.normalized)}});
      } else {  // noap
        if (s_xs.empty()) throw CommandError{2, "verify noap needs at least one --x sample"};
        manifest.param("exponent", dbl(noap_exponent));
        std::vector<pf_u128> xs;
        std::string xs_json = "[";
        for (const auto& s : s_xs) {
          xs.push_back(parse_u128(s));
          xs_json += (xs.size() > 1 ? "," : "") + u128_str(xs.back());
        }
        manifest.param("x", xs_json + "]");
        std::vector<pf_u128> windows(xs.size());
        size_t hit_count = 0;
        check(pf_verify_no_ap_short(session, xs.data(), xs.size(), noap_exponent, windows.data(),
                                    nullptr, 0, &hit_count));
        std::vector<pf_ap_triple> hits(hit_count);
        if (hit_count)
          check(pf_verify_no_ap_short(session, xs.data(), xs.size(), noap_exponent, windows.data(),
                                      hits.data(), hit_count, &hit_count));
        for (size_t i = 0; i < xs.size(); ++i) {
          size_t sample_hits = 0;
          if (hit_count && !pf_u128_eq(windows[i], pf_u128_from_u64(0)))
            check(pf_find_3aps(session, xs[i], windows[i], nullptr, 0, &sample_hits));
          out.row({{"x", u128_str(xs[i])},
                   {"window", u128_str(windows[i])},
                   {"hits", std::to_string(sample_hits)}});
        }
        for (const auto& t : hits) emit_ap_row(out, "3ap", t.n1, t.n2, t.n3, csv);
        if (hit_count)
          findings = "FINDING: " + std::to_string(hit_count) +
                     " squarefull 3AP(s) in a short window; certify them to inspect abc quality";
      }
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    if (e.exit_code == 2) std::cerr << "run with --help for usage\n";
    pf_session_free(session);
    return e.exit_code;
  }

  auto t1 = std::chrono::steady_clock::now();
  double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  const std::string& payload = out.payload();
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << json_escape(opt.out_path) << "\n";
      pf_session_free(session);
      return 1;
    }
    f << payload;
  } else {
    std::cout << payload;
    std::cout.flush();
  }
  if (!findings.empty()) std::cerr << findings << "\n";
  std::cerr << manifest.render(wall_ms, fnv1a64(payload)) << "\n";
  pf_session_free(session);
  return 0;
}
