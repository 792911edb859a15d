#include "apvar/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "apvar/arith.hpp"
#include "apvar/farey.hpp"
#include "apvar/residue.hpp"
#include "apvar/serial_reference.hpp"

namespace apvar {

namespace {

CheckResult count_check(const std::string& name, u64 mismatches) {
  return {name, static_cast<double>(mismatches), 0.0, static_cast<double>(mismatches), mismatches == 0};
}

// Largest coefficientwise |l - r|, reported through lhs/rhs at the worst index.
struct AbsWorst {
  double diff = 0, lhs = 0, rhs = 0;
  void see(const LogPoly& l, const LogPoly& r) {
    const std::size_t n = std::max(l.coeffs.size(), r.coeffs.size());
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::abs(l[j] - r[j]);
      if (d >= diff) {
        diff = d;
        lhs = l[j];
        rhs = r[j];
      }
    }
  }
};

}  // namespace

CheckResult worst_of(const std::string& name, const std::vector<IdentityPair>& pairs, double tol) {
  CheckResult r{name, 0, 0, 0, true};
  for (const auto& p : pairs) {
    const double d = p.rel_diff();
    if (d >= r.rel_diff) {
      r.rel_diff = d;
      r.lhs = p.lhs;
      r.rhs = p.rhs;
    }
  }
  r.pass = !pairs.empty() && r.rel_diff < tol;
  return r;
}

CheckResult ramanujan_orthogonality_check(u64 q_max) {
  u64 bad = 0;
  for (u64 q = 1; q <= q_max; ++q) {
    const auto divs = divisors(q);
    std::vector<std::vector<i64>> c(divs.size(), std::vector<i64>(q + 1));
    for (std::size_t i = 0; i < divs.size(); ++i)
      for (u64 a = 1; a <= q; ++a) c[i][a] = ramanujan_sum(divs[i], a);
    for (std::size_t i = 0; i < divs.size(); ++i)
      for (std::size_t j = 0; j < divs.size(); ++j) {
        i128 s = 0;
        for (u64 a = 1; a <= q; ++a) s += static_cast<i128>(c[i][a]) * c[j][a];
        const i128 expect = (i == j) ? static_cast<i128>(q) * static_cast<i128>(euler_phi(divs[i])) : 0;
        if (s != expect) ++bad;
      }
  }
  return count_check("ramanujan_orthogonality(q<=" + std::to_string(q_max) + ")", bad);
}

CheckResult divisor_dft_check(u64 q_max) {
  u64 bad = 0;
  for (u64 q = 1; q <= q_max; ++q)
    for (u64 a = 1; a <= q; ++a) {
      i64 s = 0;
      for (u64 d : divisors(q)) s += ramanujan_sum(d, a);
      if (s != (a % q == 0 ? static_cast<i64>(q) : 0)) ++bad;
    }
  return count_check("ramanujan_divisor_sum(q<=" + std::to_string(q_max) + ")", bad);
}

CheckResult reconstruction_check(u64 q_max, unsigned k_max) {
  AbsWorst w;
  for (unsigned k = 1; k <= k_max; ++k) {
    MainTermCache cache(k);
    for (u64 q = 1; q <= q_max; ++q) {
      const auto divs = divisors(q);
      for (u64 a = 1; a <= q; ++a) {
        LogPoly rebuilt{std::vector<double>(k, 0.0)};
        for (u64 d : divs)
          rebuilt = rebuilt + cache.m(d) * (static_cast<double>(ramanujan_sum(d, a)) / static_cast<double>(d));
        w.see(cache.f(q, a), rebuilt);
      }
    }
  }
  return {"main_term_reconstruction(q<=" + std::to_string(q_max) + ",k<=" + std::to_string(k_max) + ")", w.lhs, w.rhs,
          w.diff, w.diff < kReconstructionTolerance};
}

CheckResult class_sum_check(u64 q_max, unsigned k_max) {
  AbsWorst w;
  for (unsigned k = 1; k <= k_max; ++k) {
    MainTermCache cache(k);
    const LogPoly whole = cache.f(1, 1);
    for (u64 q = 1; q <= q_max; ++q) {
      LogPoly s{std::vector<double>(k, 0.0)};
      for (u64 a = 1; a <= q; ++a) s = s + cache.f(q, a);
      w.see(s, whole * static_cast<double>(q));
    }
  }
  return {"main_term_class_sum(q<=" + std::to_string(q_max) + ",k<=" + std::to_string(k_max) + ")", w.lhs, w.rhs,
          w.diff, w.diff < kReconstructionTolerance};
}

CheckResult f_star_parseval_check(u64 q_max, unsigned k, double X) {
  MainTermCache cache(k);
  std::vector<IdentityPair> pairs;
  for (u64 q = 1; q <= q_max; ++q) {
    long double s = 0;
    for (u64 a = 1; a <= q; ++a) {
      const double f = eval_logpoly(cache.f(q, a), X);
      s += static_cast<long double>(f) * f;
    }
    pairs.push_back({static_cast<double>(s), static_cast<double>(q) * eval_logpoly(cache.f_star(q), X)});
  }
  return worst_of("f_star_orthogonality(q<=" + std::to_string(q_max) + ",k=" + std::to_string(k) + ")", pairs,
                  kIdentityTolerance);
}

CheckResult dirichlet_check(u64 q_max, unsigned k_max, u64 N) {
  std::vector<IdentityPair> pairs;
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  for (unsigned k = 1; k <= k_max; ++k) {
    const DkTable t = serial::sieve_dk(N, k);
    for (u64 q = 1; q <= q_max; ++q) {
      // One pass, bucketed by gcd(n, q).
      std::vector<long double> by_gcd(q + 1, 0.0L);
      for (u64 n = 1; n <= N; ++n) {
        const long double nn = static_cast<long double>(n);
        by_gcd[gcd(n, q)] += static_cast<long double>(t.values[n]) / (nn * nn);
      }
      for (u64 d : divisors(q))
        pairs.push_back({static_cast<double>(by_gcd[d]), std::pow(zeta2, static_cast<double>(k)) * correction_value(q, d, k, 2.0)});
    }
  }
  return worst_of("dirichlet_correction(q<=" + std::to_string(q_max) + ",k<=" + std::to_string(k_max) +
                      ",N=" + std::to_string(N) + ")",
                  pairs, kDirichletTolerance);
}

CheckResult farey_containment_check(u64 gamma_max) {
  u64 bad = 0;
  for (u64 g = 2; g <= gamma_max; ++g) {
    const auto rep = verify_containment(g);
    bad += rep.violations.size() + (rep.tiles ? 0 : 1);
  }
  return count_check("farey_tiling_and_containment(gamma<=" + std::to_string(gamma_max) + ")", bad);
}

CheckResult farey_length_check(u64 gamma_max) {
  u64 bad = 0;
  u64 phi_sum = 0;
  for (u64 g = 1; g <= gamma_max; ++g) {
    phi_sum += euler_phi(g);
    if (farey_sequence(g).size() != 1 + phi_sum) ++bad;
  }
  return count_check("farey_length(gamma<=" + std::to_string(gamma_max) + ")", bad);
}

std::vector<CheckResult> identities_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const DkTable table = sieve_dk(opt.x, opt.k);

  {
    const u64 lim = std::min<u64>(opt.x, 10000);
    u64 bad = 0;
    if (lim >= 2) {
      const FactorTable ft(lim);
      for (u64 n = 1; n <= lim; ++n)
        if (table.values[n] != (n == 1 ? 1 : ft.d_k(n, opt.k))) ++bad;
    } else if (table.values[1] != 1) {
      ++bad;
    }
    out.push_back(count_check("sieve_vs_factorization(n<=" + std::to_string(lim) + ")", bad));
  }

  std::vector<IdentityPair> pars;
  for (u64 q = 1; q <= std::min<u64>(50, opt.x); ++q) pars.push_back(parseval_check(table, q, opt.x));
  out.push_back(worst_of("parseval(q<=50)", pars, kIdentityTolerance));

  const u64 Q = std::min(opt.Q, opt.x);
  out.push_back(worst_of("variance_expansion(Q=" + std::to_string(Q) + ")",
                         {variance_expansion_check(table, opt.x, Q, opt.budget)}, kIdentityTolerance));

  {
    MainTermCache cache(opt.k);
    const double whole = error_vector(ap_sums(table, 1, opt.x), cache).sum();
    std::vector<IdentityPair> sums;
    for (u64 q = 2; q <= std::min<u64>(50, opt.x); ++q) sums.push_back({error_vector(ap_sums(table, q, opt.x), cache).sum(), whole});
    if (!sums.empty()) out.push_back(worst_of("error_class_sum(q<=50)", sums, 1e-6));
  }

  out.push_back(ramanujan_orthogonality_check(100));
  out.push_back(divisor_dft_check(100));
  out.push_back(reconstruction_check(60, opt.k));
  out.push_back(class_sum_check(60, opt.k));
  out.push_back(f_star_parseval_check(60, opt.k, 1e3));
  return out;
}

std::vector<CheckResult> dirichlet_suite(const SuiteOptions& opt) {
  return {dirichlet_check(30, std::min(opt.k, 4u), 100000)};
}

std::vector<CheckResult> farey_suite(const SuiteOptions& opt) {
  return {farey_containment_check(opt.gamma), farey_length_check(1000)};
}

std::vector<CheckResult> growth_suite(const SuiteOptions& opt) {
  std::vector<u64> grid;
  for (unsigned e = 14; e <= 18; ++e) grid.push_back(u64{1} << e);
  const DkTable table = sieve_dk(grid.back(), opt.k);
  const GrowthStudy g = growth_study(table, grid, QRule::power(0.75));
  std::vector<CheckResult> out;
  const bool in_band = g.slope >= kGrowthSlopeLow && g.slope <= kGrowthSlopeHigh;
  out.push_back({"growth_slope(k=" + std::to_string(opt.k) + ",Q=x^0.75)", g.slope, 1.0, std::abs(g.slope - 1.0), in_band});

  const auto rep = variance_total(table, grid.front(), 1);
  const double e = error_vector(table, 1, grid.front()).e[1];
  out.push_back(worst_of("variance_Q1_is_E_squared", {{rep.total, e * e}}, kIdentityTolerance));
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (suite == "identities") return identities_suite(opt);
  if (suite == "dirichlet") return dirichlet_suite(opt);
  if (suite == "farey") return farey_suite(opt);
  if (suite == "growth") return growth_suite(opt);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"identities", "dirichlet", "farey", "growth"}) {
      auto part = run_suite(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown suite: " + suite);
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace apvar
