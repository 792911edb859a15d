#pragma once

// Main terms as polynomials in log X, obtained as residues at s = 1 of
// X^{s-1}/s * zeta(s)^k * (Euler-factor correction).

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "apvar/common.hpp"
#include "apvar/laurent.hpp"

namespace apvar {

// sum_j coeffs[j] (log X)^j
struct LogPoly {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator[](std::size_t j) const { return j < coeffs.size() ? coeffs[j] : 0.0; }

  LogPoly operator+(const LogPoly& o) const;
  LogPoly operator-(const LogPoly& o) const;
  LogPoly operator*(const LogPoly& o) const;
  LogPoly operator*(double c) const;
};

// Horner at log X. X <= 1 is rejected.
double eval_logpoly(const LogPoly& p, double X);
// Horner at a given log X; accepts log X = 0 (X = 1).
double eval_at_log(const LogPoly& p, double log_x);

inline constexpr unsigned kMaxSeriesOrder = 15;

// zeta(s)^k about s = 1 with `order` coefficients kept after the leading
// t^{-k} term.
LaurentSeries zeta_power_series(unsigned k, unsigned order);

// Ratio of the local factor at p of sum_{(n,q)=delta} d_k(n) n^{-s} to the
// local factor of zeta(s)^k, where alpha = v_p(q), beta = v_p(delta):
//   beta < alpha:  (1 - p^{-s})^k d_k(p^beta) p^{-beta s}
//   beta = alpha:  1 - (1 - p^{-s})^k sum_{j<alpha} d_k(p^j) p^{-j s}
// Taylor coefficients t^0..t^order.
LaurentSeries local_correction_series(u64 p, unsigned alpha, unsigned beta, unsigned k, unsigned order);

// Product of the local corrections over p | q.
LaurentSeries constrained_dirichlet_correction(u64 q, u64 delta, unsigned k, unsigned order);

// The same product evaluated in closed form at a real s > 0.
double correction_value(u64 q, u64 delta, unsigned k, double s);

// f_X(q, a) for 1 <= a <= q.
LogPoly ap_main_term(u64 q, u64 a, unsigned k);

// M_X(q), via M(q) = (q/phi(q)) (f(q,q) - sum_{d|q, d<q} phi(d) M(d)/d).
LogPoly m_poly(u64 q, unsigned k);

// f*_X(q) = sum_{d|q} phi(d) M(d)^2 / d^2.
LogPoly f_star(u64 q, unsigned k);

// Memoized f and M for one k. Lookups and inserts may race; results are
// identical regardless of which thread fills an entry.
class MainTermCache {
 public:
  explicit MainTermCache(unsigned k);

  unsigned k() const { return k_; }

  // f_X(q, a); depends on a only through gcd(q, a).
  const LogPoly& f(u64 q, u64 a);
  const LogPoly& m(u64 q);
  LogPoly f_star(u64 q);

 private:
  const LogPoly& f_for_gcd(u64 q, u64 delta);

  unsigned k_;
  std::shared_mutex mutex_;
  std::map<std::pair<u64, u64>, LogPoly> f_;
  std::map<u64, LogPoly> m_;
};

}  // namespace apvar
