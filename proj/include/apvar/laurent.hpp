#pragma once

#include <vector>

namespace apvar {

// Truncated Laurent series in t = s - 1:
//   sum_{e = -pole_order}^{order_cap} c_e t^e + O(t^{order_cap + 1}).
// Arithmetic keeps only the coefficients that are fully determined by the
// operands.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  // coeffs[i] is the coefficient of t^{i - pole_order}.
  LaurentSeries(int pole_order, std::vector<double> coeffs);

  static LaurentSeries constant(double c, int order_cap);
  // t^0 coefficients of a Taylor series known through t^{order_cap}.
  static LaurentSeries taylor(std::vector<double> coeffs);

  int pole_order() const { return pole_; }
  int order_cap() const { return static_cast<int>(coeffs_.size()) - 1 - pole_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  // Zero below the pole; DomainError past the cap.
  double coeff(int exponent) const;
  double residue() const { return coeff(-1); }

  // Truncated sum at t; exact only when the tail is negligible.
  double evaluate(double t) const;

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries operator*(double c) const;
  LaurentSeries pow(unsigned n) const;
  // Requires pole_order 0 and a nonzero constant term.
  LaurentSeries reciprocal() const;
  // Drops coefficients above the given cap.
  LaurentSeries truncated(int order_cap) const;

 private:
  int pole_ = 0;
  std::vector<double> coeffs_{0.0};
};

}  // namespace apvar
