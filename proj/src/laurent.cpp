#include "apvar/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "apvar/common.hpp"

namespace apvar {

LaurentSeries::LaurentSeries(int pole_order, std::vector<double> coeffs)
    : pole_(pole_order), coeffs_(std::move(coeffs)) {
  if (pole_ < 0) throw DomainError("pole order must be >= 0");
  if (coeffs_.empty()) throw DomainError("Laurent series needs at least one coefficient");
}

LaurentSeries LaurentSeries::constant(double c, int order_cap) {
  if (order_cap < 0) throw DomainError("order cap must be >= 0");
  std::vector<double> v(static_cast<std::size_t>(order_cap) + 1, 0.0);
  v[0] = c;
  return {0, std::move(v)};
}

LaurentSeries LaurentSeries::taylor(std::vector<double> coeffs) { return {0, std::move(coeffs)}; }

double LaurentSeries::coeff(int exponent) const {
  if (exponent < -pole_) return 0.0;
  if (exponent > order_cap()) throw DomainError("coefficient beyond truncation order");
  return coeffs_[static_cast<std::size_t>(exponent + pole_)];
}

double LaurentSeries::evaluate(double t) const {
  double acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc * std::pow(t, -pole_);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  const int pole = std::max(pole_, o.pole_);
  const int cap = std::min(order_cap(), o.order_cap());
  std::vector<double> v(static_cast<std::size_t>(cap + pole + 1), 0.0);
  for (int e = -pole; e <= cap; ++e) v[static_cast<std::size_t>(e + pole)] = coeff(e) + o.coeff(e);
  return {pole, std::move(v)};
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o * -1.0; }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  const std::size_t n = std::min(coeffs_.size(), o.coeffs_.size());
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return {pole_ + o.pole_, std::move(v)};
}

LaurentSeries LaurentSeries::operator*(double c) const {
  auto v = coeffs_;
  for (auto& x : v) x *= c;
  return {pole_, std::move(v)};
}

LaurentSeries LaurentSeries::pow(unsigned n) const {
  LaurentSeries r{0, std::vector<double>(coeffs_.size(), 0.0)};
  r.coeffs_[0] = 1.0;
  LaurentSeries base = *this;
  // Square-and-multiply; every product keeps min(len) coefficients.
  while (n > 0) {
    if (n & 1u) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

LaurentSeries LaurentSeries::reciprocal() const {
  if (pole_ != 0 || coeffs_[0] == 0.0) throw DomainError("reciprocal needs a unit series");
  const std::size_t n = coeffs_.size();
  std::vector<double> v(n, 0.0);
  v[0] = 1.0 / coeffs_[0];
  for (std::size_t i = 1; i < n; ++i) {
    double s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += coeffs_[j] * v[i - j];
    v[i] = -s / coeffs_[0];
  }
  return {0, std::move(v)};
}

LaurentSeries LaurentSeries::truncated(int cap) const {
  if (cap > order_cap()) throw DomainError("cannot extend a truncated series");
  if (cap < -pole_) throw DomainError("truncation below the pole");
  return {pole_, std::vector<double>(coeffs_.begin(), coeffs_.begin() + cap + pole_ + 1)};
}

}  // namespace apvar
