// apvar: d_k over arithmetic progressions from the command line.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "apvar/arith.hpp"
#include "apvar/checks.hpp"
#include "apvar/dk_sieve.hpp"
#include "apvar/farey.hpp"
#include "apvar/parallel.hpp"
#include "apvar/progression.hpp"
#include "apvar/report.hpp"
#include "apvar/residue.hpp"

namespace {

using apvar::u64;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned k = 2;
  u64 x = 0;
  u64 Q = 0;
  u64 q = 1;
  std::optional<u64> a;
  u64 gamma = 0;
  std::string format = "csv";
  std::string out;
  std::string table;
  std::optional<int> threads;
  std::string suite = "all";
  double budget = apvar::kDefaultWorkBudget;
  double exponent = 0.75;
};

void check_k(const RunConfig& c) {
  if (c.k < 1 || c.k > apvar::kMaxFold) throw UsageError("--k must be in 1..8");
}

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw std::ios_base::failure("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

apvar::DkTable load_or_sieve(const RunConfig& c, u64 need_x) {
  if (!c.table.empty() && std::filesystem::exists(c.table)) {
    apvar::DkTable t = apvar::read_dktb(c.table);
    if (t.k != c.k) throw UsageError("cached table has k=" + std::to_string(t.k) + ", expected " + std::to_string(c.k));
    if (t.x < need_x) throw UsageError("cached table stops at x=" + std::to_string(t.x));
    return t;
  }
  apvar::DkTable t = apvar::sieve_dk(need_x, c.k);
  if (!c.table.empty()) apvar::write_dktb(c.table, t);
  return t;
}

int cmd_sieve(const RunConfig& c) {
  check_k(c);
  if (c.x < 1) throw UsageError("--x must be >= 1");
  if (c.out.empty()) throw UsageError("sieve needs --out");
  apvar::write_dktb(c.out, apvar::sieve_dk(c.x, c.k));
  return kOk;
}

int cmd_main_term(const RunConfig& c) {
  check_k(c);
  if (c.q < 1) throw UsageError("--q must be >= 1");
  const u64 a = c.a.value_or(1);
  if (a < 1 || a > c.q) throw UsageError("--a must lie in 1..q");
  apvar::MainTermCache cache(c.k);
  const apvar::LogPoly& f = cache.f(c.q, a);
  const apvar::LogPoly& m = cache.m(c.q);
  nlohmann::json j = apvar::logpoly_json(c.k, c.q, a, f);
  j["M"] = apvar::logpoly_json(c.k, c.q, std::nullopt, m);
  if (c.x > 1) {
    j["x"] = c.x;
    j["f_at_x"] = apvar::eval_logpoly(f, static_cast<double>(c.x));
    j["M_at_x"] = apvar::eval_logpoly(m, static_cast<double>(c.x));
  }
  Sink sink(c.out);
  sink.stream() << j.dump() << '\n';
  return kOk;
}

int cmd_variance(const RunConfig& c) {
  check_k(c);
  if (c.x < 1 || c.Q < 1) throw UsageError("variance needs --x and --Q");
  if (c.Q > c.x) throw UsageError("--Q must not exceed --x");
  const apvar::DkTable t = load_or_sieve(c, c.x);
  const apvar::VarianceReport rep = apvar::variance_total(t, c.x, c.Q);
  Sink sink(c.out);
  if (c.format == "json")
    sink.stream() << apvar::variance_json(rep).dump() << '\n';
  else
    apvar::write_variance_csv(sink.stream(), rep);
  return kOk;
}

int cmd_expsum(const RunConfig& c) {
  check_k(c);
  if (c.x < 1 || c.q < 1) throw UsageError("expsum needs --x and --q");
  const apvar::DkTable t = load_or_sieve(c, c.x);
  const apvar::ResidueClassSums cls = apvar::ap_sums(t, c.q, c.x);
  apvar::MainTermCache cache(c.k);
  std::vector<apvar::ExpSumValue> sums;
  std::vector<apvar::DeltaValue> deltas;
  const u64 lo = c.a ? *c.a : 1;
  const u64 hi = c.a ? *c.a : c.q;
  for (u64 a = lo; a <= hi; ++a) {
    sums.push_back(apvar::exp_sum(cls, static_cast<apvar::i64>(a)));
    deltas.push_back(apvar::delta_value(cls, static_cast<apvar::i64>(a), cache));
  }
  Sink sink(c.out);
  if (c.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < sums.size(); ++i)
      arr.push_back({{"a", sums[i].a}, {"q", sums[i].q}, {"X", sums[i].X}, {"re", sums[i].re}, {"im", sums[i].im},
                     {"delta_re", deltas[i].value.real()}, {"delta_im", deltas[i].value.imag()}});
    sink.stream() << arr.dump() << '\n';
  } else {
    apvar::write_expsum_csv(sink.stream(), sums, deltas);
  }
  return kOk;
}

int cmd_farey(const RunConfig& c) {
  if (c.gamma < 2) throw UsageError("farey needs --gamma >= 2");
  const auto arcs = apvar::dissection(c.gamma);
  Sink sink(c.out);
  if (c.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& arc : arcs)
      arr.push_back({{"a", arc.center.num}, {"q", arc.center.den}, {"left_num", arc.left.num}, {"left_den", arc.left.den},
                     {"right_num", arc.right.num}, {"right_den", arc.right.den}});
    sink.stream() << arr.dump() << '\n';
  } else {
    apvar::write_farey_csv(sink.stream(), arcs);
  }
  return kOk;
}

int cmd_growth(const RunConfig& c) {
  check_k(c);
  const u64 top = c.x == 0 ? (u64{1} << 18) : c.x;
  std::vector<u64> grid;
  for (u64 x = u64{1} << 14; x <= top; x <<= 1) grid.push_back(x);
  if (grid.empty()) throw UsageError("growth needs --x >= 16384");
  const apvar::DkTable t = load_or_sieve(c, grid.back());
  const apvar::GrowthStudy g = apvar::growth_study(t, grid, apvar::QRule::power(c.exponent));
  Sink sink(c.out);
  if (c.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : g.rows) rows.push_back({{"x", r.x}, {"Q", r.Q}, {"V", r.V}, {"V_over_xQ", r.V_over_xQ}});
    sink.stream() << nlohmann::json{{"k", g.k}, {"rows", rows}, {"slope", g.slope}}.dump() << '\n';
  } else {
    apvar::write_growth_csv(sink.stream(), g);
  }
  std::cerr << "slope " << apvar::format_double(g.slope) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& c) {
  check_k(c);
  apvar::SuiteOptions opt;
  opt.k = c.k;
  if (c.x > 0) opt.x = c.x;
  if (c.Q > 0) opt.Q = c.Q;
  if (c.gamma > 0) opt.gamma = c.gamma;
  opt.budget = c.budget;
  static const std::vector<std::string> suites{"identities", "dirichlet", "farey", "growth", "all"};
  if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) throw UsageError("unknown suite: " + c.suite);
  const auto results = apvar::run_suite(c.suite, opt);
  Sink sink(c.out);
  for (const auto& r : results) sink.stream() << apvar::check_json(r).dump() << '\n';
  return apvar::all_pass(results) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-fold divisor function over arithmetic progressions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_k = [&](CLI::App* s) { s->add_option("--k", cfg.k, "fold parameter (1..8)"); };
  auto add_threads = [&](CLI::App* s) { s->add_option("--threads", cfg.threads, "worker threads (overrides APVAR_THREADS)"); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", cfg.out, "output path (stdout if omitted)"); };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_table = [&](CLI::App* s) { s->add_option("--table", cfg.table, "DKTB cache: read if present, else written"); };

  auto* sieve = app.add_subcommand("sieve", "write a DKTB table of d_k(n), n <= x");
  add_k(sieve);
  sieve->add_option("--x", cfg.x)->required();
  add_out(sieve);
  add_threads(sieve);

  auto* main_term = app.add_subcommand("main-term", "f_x(q,a) and M_x(q) as polynomials in log x");
  add_k(main_term);
  main_term->add_option("--q", cfg.q)->required();
  main_term->add_option("--a", cfg.a);
  main_term->add_option("--x", cfg.x, "also evaluate at this x");
  add_format(main_term);
  add_out(main_term);

  auto* variance = app.add_subcommand("variance", "V_x(q) for q <= Q and V(x,Q)");
  add_k(variance);
  variance->add_option("--x", cfg.x)->required();
  variance->add_option("--Q", cfg.Q)->required();
  add_format(variance);
  add_out(variance);
  add_table(variance);
  add_threads(variance);

  auto* expsum = app.add_subcommand("expsum", "S_X(a/q) and Delta_X(a/q)");
  add_k(expsum);
  expsum->add_option("--x", cfg.x)->required();
  expsum->add_option("--q", cfg.q)->required();
  expsum->add_option("--a", cfg.a, "single numerator (all 1..q if omitted)");
  add_format(expsum);
  add_out(expsum);
  add_table(expsum);
  add_threads(expsum);

  auto* farey = app.add_subcommand("farey", "Farey dissection arcs of order gamma");
  farey->add_option("--gamma", cfg.gamma)->required();
  add_format(farey);
  add_out(farey);

  auto* growth = app.add_subcommand("growth", "V(x, x^c) over x = 2^14 .. --x");
  add_k(growth);
  growth->add_option("--x", cfg.x, "largest x (default 2^18)");
  growth->add_option("--exponent", cfg.exponent, "Q = floor(x^exponent)");
  add_format(growth);
  add_out(growth);
  add_table(growth);
  add_threads(growth);

  auto* verify = app.add_subcommand("verify", "run verification suites; JSON line per check");
  add_k(verify);
  verify->add_option("--suite", cfg.suite, "identities, dirichlet, farey, growth or all");
  verify->add_option("--x", cfg.x);
  verify->add_option("--Q", cfg.Q);
  verify->add_option("--gamma", cfg.gamma);
  verify->add_option("--budget", cfg.budget, "max x*Q steps for the expansion check");
  add_out(verify);
  add_threads(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    apvar::set_thread_count(apvar::resolve_thread_count(cfg.threads));
    if (sieve->parsed()) return cmd_sieve(cfg);
    if (main_term->parsed()) return cmd_main_term(cfg);
    if (variance->parsed()) return cmd_variance(cfg);
    if (expsum->parsed()) return cmd_expsum(cfg);
    if (farey->parsed()) return cmd_farey(cfg);
    if (growth->parsed()) return cmd_growth(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const apvar::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const apvar::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}
