#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace apvar::oracle {

bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::vector<u64>> naive_dk_tables(u64 x, unsigned k) {
  std::vector<std::vector<u64>> t(k + 1, std::vector<u64>(x + 1, 0));
  for (u64 n = 1; n <= x; ++n) t[1][n] = 1;
  for (unsigned j = 2; j <= k; ++j)
    for (u64 n = 1; n <= x; ++n) {
      u64 s = 0;
      for (u64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        s += t[j - 1][d];
        if (d != n / d) s += t[j - 1][n / d];
      }
      t[j][n] = s;
    }
  return t;
}

u64 count_ordered_tuples(u64 n, unsigned k) {
  if (k == 1) return 1;
  u64 s = 0;
  for (u64 u = 1; u <= n; ++u)
    if (n % u == 0) s += count_ordered_tuples(n / u, k - 1);
  return s;
}

u64 hyperbola_divisor_sum(u64 x) {
  u64 s = 0;
  for (u64 d = 1; d <= x; ++d) s += x / d;
  return s;
}

std::complex<double> ramanujan_exponential(u64 q, u64 n) {
  std::complex<double> s = 0;
  for (u64 a = 1; a <= q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>((a * n) % q) / static_cast<double>(q);
    s += std::polar(1.0, ang);
  }
  return s;
}

std::complex<double> direct_exp_sum(const std::vector<u64>& values, u64 X, i64 a, u64 q) {
  std::complex<long double> s = 0;
  const i64 qi = static_cast<i64>(q);
  const u64 ar = static_cast<u64>(((a % qi) + qi) % qi);
  for (u64 n = 1; n <= X; ++n) {
    const long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>((ar * n) % q) / q;
    s += std::polar(static_cast<long double>(values[n]), ang);
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

double zeta_euler_maclaurin(double s, int N) {
  // B_{2j} / (2j)!
  static const long double b[] = {1.0L / 12, -1.0L / 720, 1.0L / 30240, -1.0L / 1209600, 1.0L / 47900160,
                                   -691.0L / 1307674368000};
  long double sum = 0;
  for (int n = 1; n < N; ++n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  const long double Nn = N;
  sum += std::pow(Nn, 1 - static_cast<long double>(s)) / (s - 1) + 0.5L * std::pow(Nn, -static_cast<long double>(s));
  // Derivative factor s(s+1)...(s+2j-2) N^{-s-2j+1}
  long double rising = s;
  for (int j = 1; j <= 6; ++j) {
    sum += b[j - 1] * rising * std::pow(Nn, -static_cast<long double>(s) - 2 * j + 1);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
  }
  return static_cast<double>(sum);
}

std::vector<Fraction> farey_by_enumeration(u64 gamma) {
  std::vector<Fraction> out;
  for (i64 q = 1; q <= static_cast<i64>(gamma); ++q)
    for (i64 a = 0; a <= q; ++a)
      if (std::gcd(a, q) == 1) out.push_back({a, q});
  std::sort(out.begin(), out.end(), [](const Fraction& l, const Fraction& r) {
    return static_cast<i128>(l.num) * r.den < static_cast<i128>(r.num) * l.den;
  });
  return out;
}

}  // namespace apvar::oracle
