#include "apvar/progression.hpp"

#include <algorithm>
#include <cmath>

#include "apvar/arith.hpp"
#include "apvar/detail/kernels.hpp"

namespace apvar {

namespace {

void check_x(const DkTable& table, u64 x) {
  if (x < 1 || x > table.x) throw DomainError("x must lie in 1..table.x");
}

// f_x(q, r) at log x for r = 1..q, evaluated once per divisor gcd(q, r).
std::vector<double> main_term_values(u64 q, double log_x, MainTermCache& cache) {
  std::vector<double> by_gcd(q + 1, 0.0);
  for (u64 d : divisors(q)) by_gcd[d] = eval_at_log(cache.f(q, d), log_x);
  std::vector<double> f(q + 1, 0.0);
  for (u64 r = 1; r <= q; ++r) f[r] = by_gcd[gcd(q, r)];
  return f;
}

struct PerModulus {
  double v = 0;
  VarianceTerms terms;
};

PerModulus modulus_terms(const DkTable& table, u64 q, u64 x, double log_x, MainTermCache& cache) {
  std::vector<u128> A(q + 1, 0);
  detail::accumulate_classes(table, q, x, A.data());
  const auto f = main_term_values(q, log_x, cache);
  const double xd = static_cast<double>(x);
  const double qd = static_cast<double>(q);
  long double v = 0, sq = 0, cross = 0, fsq = 0;
  for (u64 a = 1; a <= q; ++a) {
    const double Ad = to_double(A[a]);
    const double e = Ad - xd * f[a] / qd;
    v += static_cast<long double>(e) * e;
    sq += static_cast<long double>(A[a]) * static_cast<long double>(A[a]);
    cross += static_cast<long double>(Ad) * f[a];
    fsq += static_cast<long double>(f[a]) * f[a];
  }
  PerModulus out;
  out.v = static_cast<double>(v);
  out.terms.congruence = static_cast<double>(sq);
  out.terms.cross = static_cast<double>(-2.0L * xd * cross / qd);
  out.terms.square = static_cast<double>(static_cast<long double>(xd) * xd * fsq / (static_cast<long double>(qd) * qd));
  return out;
}

}  // namespace

double ErrorVector::sum() const {
  long double s = 0;
  for (u64 a = 1; a <= q; ++a) s += e[a];
  return static_cast<double>(s);
}

double ErrorVector::sum_of_squares() const {
  long double s = 0;
  for (u64 a = 1; a <= q; ++a) s += static_cast<long double>(e[a]) * e[a];
  return static_cast<double>(s);
}

ErrorVector error_vector(const ResidueClassSums& cls, MainTermCache& cache) {
  const double log_x = std::log(static_cast<double>(cls.X));
  const auto f = main_term_values(cls.q, log_x, cache);
  ErrorVector ev{cls.q, cls.X, cache.k(), std::vector<double>(cls.q + 1, 0.0)};
  const double xd = static_cast<double>(cls.X);
  const double qd = static_cast<double>(cls.q);
  for (u64 a = 1; a <= cls.q; ++a) ev.e[a] = to_double(cls.sums[a]) - xd * f[a] / qd;
  return ev;
}

ErrorVector error_vector(const DkTable& table, u64 q, u64 x) {
  check_x(table, x);
  MainTermCache cache(table.k);
  return error_vector(ap_sums(table, q, x), cache);
}

DeltaValue delta_value(const ResidueClassSums& cls, i64 a, MainTermCache& cache) {
  const ExpSumValue s = exp_sum(cls, a);
  const i64 qi = static_cast<i64>(cls.q);
  const u64 ar = static_cast<u64>(((a % qi) + qi) % qi);
  const u64 reduced = cls.q / gcd(cls.q, ar);  // gcd(q, 0) = q, so a = 0 mod q gives 1
  const double main = static_cast<double>(cls.X) *
                      eval_at_log(cache.m(reduced), std::log(static_cast<double>(cls.X))) /
                      static_cast<double>(reduced);
  return {{s.re - main, s.im}, a, cls.q, cls.X};
}

DeltaValue delta_value(const ResidueClassSums& cls, i64 a, unsigned k) {
  MainTermCache cache(k);
  return delta_value(cls, a, cache);
}

double variance_q(const DkTable& table, u64 q, u64 x) {
  check_x(table, x);
  if (q < 1) throw DomainError("variance_q needs q >= 1");
  MainTermCache cache(table.k);
  return modulus_terms(table, q, x, std::log(static_cast<double>(x)), cache).v;
}

VarianceReport variance_total(const DkTable& table, u64 x, u64 Q) {
  check_x(table, x);
  if (Q < 1 || Q > x) throw DomainError("variance needs 1 <= Q <= x");
  MainTermCache cache(table.k);
  const double log_x = std::log(static_cast<double>(x));
  std::vector<PerModulus> per(Q + 1);
#pragma omp parallel for schedule(dynamic, 16)
  for (i64 q = 1; q <= static_cast<i64>(Q); ++q)
    per[static_cast<u64>(q)] = modulus_terms(table, static_cast<u64>(q), x, log_x, cache);

  VarianceReport rep{x, Q, table.k, std::vector<double>(Q + 1, 0.0), 0.0, {}};
  long double total = 0, t1 = 0, t2 = 0, t3 = 0;
  for (u64 q = 1; q <= Q; ++q) {
    rep.per_q[q] = per[q].v;
    total += per[q].v;
    t1 += per[q].terms.congruence;
    t2 += per[q].terms.cross;
    t3 += per[q].terms.square;
  }
  rep.total = static_cast<double>(total);
  rep.terms = {static_cast<double>(t1), static_cast<double>(t2), static_cast<double>(t3)};
  return rep;
}

double IdentityPair::rel_diff() const {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

IdentityPair parseval_check(const DkTable& table, u64 q, u64 x) {
  check_x(table, x);
  MainTermCache cache(table.k);
  const ResidueClassSums cls = ap_sums(table, q, x);
  const double lhs = error_vector(cls, cache).sum_of_squares();
  long double rhs = 0;
  for (u64 a = 1; a <= q; ++a) rhs += std::norm(delta_value(cls, static_cast<i64>(a), cache).value);
  return {lhs, static_cast<double>(rhs / static_cast<long double>(q))};
}

IdentityPair variance_expansion_check(const DkTable& table, u64 x, u64 Q, double budget) {
  check_x(table, x);
  if (Q < 1 || Q > x) throw DomainError("expansion check needs 1 <= Q <= x");
  if (static_cast<double>(x) * static_cast<double>(Q) > budget)
    throw ResourceError("expansion check needs x*Q = " + std::to_string(static_cast<double>(x) * Q) +
                        " steps, over the budget of " + std::to_string(budget));
  MainTermCache cache(table.k);
  const double log_x = std::log(static_cast<double>(x));
  const long double xd = static_cast<long double>(x);
  std::vector<long double> direct(Q + 1), t1(Q + 1), t2(Q + 1), t3(Q + 1);
  const u64* v = table.values.data();
#pragma omp parallel for schedule(dynamic, 4)
  for (i64 qi = 1; qi <= static_cast<i64>(Q); ++qi) {
    const u64 q = static_cast<u64>(qi);
    const ResidueClassSums cls = [&] {
      ResidueClassSums c{q, x, std::vector<u128>(q + 1, 0)};
      detail::accumulate_classes(table, q, x, c.sums.data());
      return c;
    }();
    direct[q] = error_vector(cls, cache).sum_of_squares();
    long double sq = 0;
    for (u64 a = 1; a <= q; ++a) sq += static_cast<long double>(cls.sums[a]) * static_cast<long double>(cls.sums[a]);
    t1[q] = sq;
    // Cross term summed over n itself, with f looked up by residue.
    const auto f = main_term_values(q, log_x, cache);
    long double cross = 0;
    u64 r = 0;
    for (u64 n = 1; n <= x; ++n) {
      if (++r == q + 1) r = 1;
      cross += static_cast<long double>(v[n]) * f[r];
    }
    t2[q] = -2.0L * xd * cross / static_cast<long double>(q);
    t3[q] = xd * xd * eval_at_log(cache.f_star(q), log_x) / static_cast<long double>(q);
  }
  long double lhs = 0, a1 = 0, a2 = 0, a3 = 0;
  for (u64 q = 1; q <= Q; ++q) {
    lhs += direct[q];
    a1 += t1[q];
    a2 += t2[q];
    a3 += t3[q];
  }
  return {static_cast<double>(lhs), static_cast<double>(a1 + a2 + a3)};
}

u64 QRule::operator()(u64 x) const {
  if (!(param > 0)) throw DomainError("Q rule parameter must be positive");
  const double xd = static_cast<double>(x);
  const double raw = kind == Kind::Ratio ? xd / param : std::pow(xd, param);
  const u64 Q = static_cast<u64>(std::floor(raw + 1e-9));
  return std::clamp<u64>(Q, 1, x);
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("slope needs two or more paired points");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0) throw DomainError("slope needs distinct abscissae");
  return sxy / sxx;
}

GrowthStudy growth_study(const DkTable& table, const std::vector<u64>& x_grid, QRule rule) {
  if (x_grid.empty()) throw DomainError("growth study needs a non-empty grid");
  for (std::size_t i = 1; i < x_grid.size(); ++i)
    if (x_grid[i] <= x_grid[i - 1]) throw DomainError("growth grid must be increasing");
  GrowthStudy out{table.k, {}, 0.0};
  std::vector<double> lx, lv;
  for (u64 x : x_grid) {
    const u64 Q = rule(x);
    const double V = variance_total(table, x, Q).total;
    const double xQ = static_cast<double>(x) * static_cast<double>(Q);
    out.rows.push_back({x, Q, V, V / xQ});
    lx.push_back(std::log(xQ));
    lv.push_back(std::log(V));
  }
  if (out.rows.size() >= 2) out.slope = least_squares_slope(lx, lv);
  return out;
}

GrowthStudy growth_study(unsigned k, const std::vector<u64>& x_grid, QRule rule) {
  if (x_grid.empty()) throw DomainError("growth study needs a non-empty grid");
  return growth_study(sieve_dk(*std::max_element(x_grid.begin(), x_grid.end()), k), x_grid, rule);
}

double main_term_ratio(const DkTable& table, u64 q, u64 a, u64 x, MainTermCache& cache) {
  check_x(table, x);
  if (a < 1 || a > q) throw DomainError("main_term_ratio needs 1 <= a <= q");
  u128 A = 0;
  for (u64 n = a; n <= x; n += q) A += table.values[n];
  const double main = static_cast<double>(x) * eval_at_log(cache.f(q, a), std::log(static_cast<double>(x))) /
                      static_cast<double>(q);
  return to_double(A) / main;
}

double deviation_slope(const DkTable& table, u64 q, u64 a, const std::vector<u64>& X_grid, MainTermCache& cache) {
  std::vector<double> lx, ld;
  for (u64 X : X_grid) {
    check_x(table, X);
    const DeltaValue d = delta_value(ap_sums(table, q, X), static_cast<i64>(a), cache);
    lx.push_back(std::log(static_cast<double>(X)));
    ld.push_back(std::log(std::abs(d.value)));
  }
  return least_squares_slope(lx, ld);
}

}  // namespace apvar
