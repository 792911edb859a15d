#pragma once

// Error terms, deviations and variances of d_k over arithmetic progressions.

#include <complex>
#include <vector>

#include "apvar/dk_sieve.hpp"
#include "apvar/residue.hpp"

namespace apvar {

// E_x(q, a) = A(x; q, a) - x f_x(q, a) / q for a = 1..q.
struct ErrorVector {
  u64 q = 0;
  u64 x = 0;
  unsigned k = 0;
  std::vector<double> e;  // indexed 1..q

  double sum() const;
  double sum_of_squares() const;
};

ErrorVector error_vector(const DkTable& table, u64 q, u64 x);
ErrorVector error_vector(const ResidueClassSums& cls, MainTermCache& cache);

// Delta_X(a/q) = S_X(a/q) - X M_X(q') / q' with q' = q / gcd(q, a).
struct DeltaValue {
  std::complex<double> value;
  i64 a = 0;
  u64 q = 0;
  u64 X = 0;
};

DeltaValue delta_value(const ResidueClassSums& cls, i64 a, unsigned k);
DeltaValue delta_value(const ResidueClassSums& cls, i64 a, MainTermCache& cache);

double variance_q(const DkTable& table, u64 q, u64 x);

// The three pieces of V(x,Q) after expanding the square:
//   congruence = sum_q sum_a A(x;q,a)^2
//   cross      = -2x sum_q (1/q) sum_a A(x;q,a) f_x(q,a)
//   square     = x^2 sum_q (1/q^2) sum_a f_x(q,a)^2
struct VarianceTerms {
  double congruence = 0;
  double cross = 0;
  double square = 0;

  double sum() const { return congruence + cross + square; }
};

struct VarianceReport {
  u64 x = 0;
  u64 Q = 0;
  unsigned k = 0;
  std::vector<double> per_q;  // indexed 1..Q
  double total = 0;
  VarianceTerms terms;
};

// Per-q work runs in parallel; the sum over q is taken serially in
// ascending q.
VarianceReport variance_total(const DkTable& table, u64 x, u64 Q);

struct IdentityPair {
  double lhs = 0;
  double rhs = 0;

  double rel_diff() const;
};

// lhs = sum_a E_x(q,a)^2, rhs = (1/q) sum_{a=1}^q |Delta_x(a/q)|^2 (all a,
// reduced or not).
IdentityPair parseval_check(const DkTable& table, u64 q, u64 x);

inline constexpr double kDefaultWorkBudget = 2e9;

// lhs = sum of E^2 directly; rhs = the three-term expansion with the cross
// term summed over n <= x and the square term taken from f*. Throws
// ResourceError when x*Q exceeds the budget.
IdentityPair variance_expansion_check(const DkTable& table, u64 x, u64 Q, double budget = kDefaultWorkBudget);

struct QRule {
  enum class Kind { Ratio, Power };
  Kind kind = Kind::Power;
  double param = 0.75;

  static QRule ratio(double r) { return {Kind::Ratio, r}; }
  static QRule power(double c) { return {Kind::Power, c}; }
  // Q = floor(x / r) or floor(x^c), clamped to 1..x.
  u64 operator()(u64 x) const;
};

struct GrowthRow {
  u64 x = 0;
  u64 Q = 0;
  double V = 0;
  double V_over_xQ = 0;
};

struct GrowthStudy {
  unsigned k = 0;
  std::vector<GrowthRow> rows;
  double slope = 0;  // least squares of log V on log(xQ)
};

GrowthStudy growth_study(unsigned k, const std::vector<u64>& x_grid, QRule rule);
GrowthStudy growth_study(const DkTable& table, const std::vector<u64>& x_grid, QRule rule);

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// A(x;q,a) / (x f_x(q,a) / q).
double main_term_ratio(const DkTable& table, u64 q, u64 a, u64 x, MainTermCache& cache);

// Slope of log|Delta_X(a/q)| against log X over the grid.
double deviation_slope(const DkTable& table, u64 q, u64 a, const std::vector<u64>& X_grid, MainTermCache& cache);

}  // namespace apvar
