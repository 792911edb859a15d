#include "apvar/residue.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "apvar/arith.hpp"
#include "apvar/stieltjes.hpp"

namespace apvar {

LogPoly LogPoly::operator+(const LogPoly& o) const {
  LogPoly r{std::vector<double>(std::max(coeffs.size(), o.coeffs.size()), 0.0)};
  for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] = (*this)[j] + o[j];
  return r;
}

LogPoly LogPoly::operator-(const LogPoly& o) const { return *this + o * -1.0; }

LogPoly LogPoly::operator*(const LogPoly& o) const {
  if (coeffs.empty() || o.coeffs.empty()) return {};
  LogPoly r{std::vector<double>(coeffs.size() + o.coeffs.size() - 1, 0.0)};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  return r;
}

LogPoly LogPoly::operator*(double c) const {
  LogPoly r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

double eval_at_log(const LogPoly& p, double log_x) {
  double acc = 0;
  for (std::size_t j = p.coeffs.size(); j-- > 0;) acc = acc * log_x + p.coeffs[j];
  return acc;
}

double eval_logpoly(const LogPoly& p, double X) {
  if (!(X > 1.0)) throw DomainError("eval_logpoly: X must exceed 1");
  return eval_at_log(p, std::log(X));
}

namespace {

void check_k(unsigned k) {
  if (k < 1 || k > kMaxFold) throw DomainError("k must be in 1..8");
}

// p^{-s} = p^{-1} exp(-(s-1) log p) as a Taylor series in t = s - 1.
LaurentSeries inverse_power_series(u64 p, unsigned order) {
  const double lp = std::log(static_cast<double>(p));
  std::vector<double> c(order + 1);
  double term = 1.0 / static_cast<double>(p);
  for (unsigned j = 0; j <= order; ++j) {
    c[j] = term;
    term *= -lp / static_cast<double>(j + 1);
  }
  return LaurentSeries::taylor(std::move(c));
}

// Res_{s=1} X^{s-1}/s * zeta^k * correction(q, delta), as a polynomial in log X.
LogPoly residue_poly(u64 q, u64 delta, unsigned k) {
  const unsigned order = k + 2;
  const LaurentSeries z = zeta_power_series(k, order);
  const LaurentSeries c = constrained_dirichlet_correction(q, delta, k, order);
  std::vector<double> inv_s(order + 1);
  for (unsigned j = 0; j <= order; ++j) inv_s[j] = (j % 2 == 0) ? 1.0 : -1.0;
  const LaurentSeries prod = z * c * LaurentSeries::taylor(std::move(inv_s));
  // X^{t} = sum_j (log X)^j t^j / j!, so (log X)^j pairs with t^{-1-j}.
  LogPoly out{std::vector<double>(k, 0.0)};
  double fact = 1.0;
  for (unsigned j = 0; j < k; ++j) {
    if (j > 0) fact *= j;
    out.coeffs[j] = prod.coeff(-1 - static_cast<int>(j)) / fact;
  }
  return out;
}

}  // namespace

LaurentSeries zeta_power_series(unsigned k, unsigned order) {
  check_k(k);
  if (order > kMaxSeriesOrder) throw DomainError("series order exceeds the Stieltjes table");
  std::vector<double> c(order + 1);
  c[0] = 1.0;
  long double fact = 1.0L;
  for (unsigned n = 0; n < order; ++n) {
    if (n > 0) fact *= n;
    const long double g = kStieltjes[n] / fact;
    c[n + 1] = static_cast<double>((n % 2 == 0) ? g : -g);
  }
  return LaurentSeries(1, std::move(c)).pow(k);
}

LaurentSeries local_correction_series(u64 p, unsigned alpha, unsigned beta, unsigned k, unsigned order) {
  check_k(k);
  if (alpha < 1) throw DomainError("local correction needs alpha >= 1");
  if (beta > alpha) throw DomainError("local correction needs beta <= alpha");
  if (p < 2) throw DomainError("local correction needs a prime p");
  const LaurentSeries u = inverse_power_series(p, order);
  const LaurentSeries one = LaurentSeries::constant(1.0, static_cast<int>(order));
  const LaurentSeries euler = (one - u).pow(k);
  if (beta < alpha) return euler * u.pow(beta) * static_cast<double>(d_k_prime_power(beta, k));
  LaurentSeries head = LaurentSeries::constant(0.0, static_cast<int>(order));
  LaurentSeries upow = one;
  for (unsigned j = 0; j < alpha; ++j) {
    head = head + upow * static_cast<double>(d_k_prime_power(j, k));
    upow = upow * u;
  }
  return one - euler * head;
}

LaurentSeries constrained_dirichlet_correction(u64 q, u64 delta, unsigned k, unsigned order) {
  if (q < 1 || delta < 1) throw DomainError("correction needs q, delta >= 1");
  if (q % delta != 0) throw DomainError("correction needs delta | q");
  LaurentSeries r = LaurentSeries::constant(1.0, static_cast<int>(order));
  for (const auto& pp : factorize(q)) r = r * local_correction_series(pp.p, pp.a, valuation(delta, pp.p), k, order);
  return r;
}

double correction_value(u64 q, u64 delta, unsigned k, double s) {
  check_k(k);
  if (q < 1 || delta < 1 || q % delta != 0) throw DomainError("correction needs delta | q");
  double r = 1.0;
  for (const auto& pp : factorize(q)) {
    const unsigned beta = valuation(delta, pp.p);
    const double u = std::pow(static_cast<double>(pp.p), -s);
    const double euler = std::pow(1.0 - u, static_cast<double>(k));
    if (beta < pp.a) {
      r *= euler * static_cast<double>(d_k_prime_power(beta, k)) * std::pow(u, beta);
    } else {
      double head = 0;
      for (unsigned j = 0; j < pp.a; ++j) head += static_cast<double>(d_k_prime_power(j, k)) * std::pow(u, j);
      r *= 1.0 - euler * head;
    }
  }
  return r;
}

LogPoly ap_main_term(u64 q, u64 a, unsigned k) {
  check_k(k);
  if (q < 1 || a < 1 || a > q) throw DomainError("ap_main_term needs 1 <= a <= q");
  const u64 delta = gcd(q, a);
  const u64 reduced = q / delta;
  return residue_poly(q, delta, k) * (static_cast<double>(q) / static_cast<double>(euler_phi(reduced)));
}

LogPoly m_poly(u64 q, unsigned k) {
  if (q < 1) throw DomainError("m_poly needs q >= 1");
  MainTermCache cache(k);
  return cache.m(q);
}

LogPoly f_star(u64 q, unsigned k) {
  if (q < 1) throw DomainError("f_star needs q >= 1");
  MainTermCache cache(k);
  return cache.f_star(q);
}

MainTermCache::MainTermCache(unsigned k) : k_(k) { check_k(k); }

const LogPoly& MainTermCache::f_for_gcd(u64 q, u64 delta) {
  const auto key = std::make_pair(q, delta);
  {
    std::shared_lock lock(mutex_);
    if (auto it = f_.find(key); it != f_.end()) return it->second;
  }
  LogPoly value = ap_main_term(q, delta, k_);
  std::unique_lock lock(mutex_);
  return f_.try_emplace(key, std::move(value)).first->second;
}

const LogPoly& MainTermCache::f(u64 q, u64 a) {
  if (q < 1 || a < 1 || a > q) throw DomainError("f needs 1 <= a <= q");
  return f_for_gcd(q, gcd(q, a));
}

const LogPoly& MainTermCache::m(u64 q) {
  if (q < 1) throw DomainError("M needs q >= 1");
  {
    std::shared_lock lock(mutex_);
    if (auto it = m_.find(q); it != m_.end()) return it->second;
  }
  // c_d(q) = phi(d) for d | q, so f(q, q) = sum_{d|q} phi(d) M(d) / d.
  LogPoly rest = f_for_gcd(q, q);
  for (u64 d : divisors(q)) {
    if (d == q) continue;
    rest = rest - m(d) * (static_cast<double>(euler_phi(d)) / static_cast<double>(d));
  }
  LogPoly value = rest * (static_cast<double>(q) / static_cast<double>(euler_phi(q)));
  std::unique_lock lock(mutex_);
  return m_.try_emplace(q, std::move(value)).first->second;
}

LogPoly MainTermCache::f_star(u64 q) {
  LogPoly acc{std::vector<double>(2 * k_ - 1, 0.0)};
  for (u64 d : divisors(q)) {
    const LogPoly& md = m(d);
    const double dd = static_cast<double>(d);
    acc = acc + (md * md) * (static_cast<double>(euler_phi(d)) / (dd * dd));
  }
  return acc;
}

}  // namespace apvar
