#include "apvar/serial_reference.hpp"

#include <algorithm>
#include <cmath>

#include "apvar/detail/kernels.hpp"

namespace apvar::serial {

DkTable sieve_dk(u64 x, unsigned k) {
  detail::check_sieve_args(x, k);
  DkTable t{x, k, detail::allocate_values(x, 1)};
  std::fill(t.values.begin() + 1, t.values.end(), u64{1});
  u64* v = t.values.data();
  for (unsigned round = 1; round < k; ++round)
    for (u64 d = x / 2; d >= 1; --d)
      for (u64 m = 2 * d; m <= x; m += d) v[m] += v[d];
  return t;
}

ResidueClassSums ap_sums(const DkTable& table, u64 q, u64 X) {
  if (q < 1) throw DomainError("ap_sums: q must be >= 1");
  if (X < 1 || X > table.x) throw DomainError("ap_sums: X must lie in 1..table.x");
  ResidueClassSums cls{q, X, std::vector<u128>(q + 1, 0)};
  u64 r = 0;
  for (u64 n = 1; n <= X; ++n) {
    if (++r == q + 1) r = 1;
    cls.sums[r] += table.values[n];
  }
  return cls;
}

VarianceReport variance_total(const DkTable& table, u64 x, u64 Q) {
  if (x < 1 || x > table.x) throw DomainError("x must lie in 1..table.x");
  if (Q < 1 || Q > x) throw DomainError("variance needs 1 <= Q <= x");
  MainTermCache cache(table.k);
  const double log_x = std::log(static_cast<double>(x));
  const double xd = static_cast<double>(x);
  VarianceReport rep{x, Q, table.k, std::vector<double>(Q + 1, 0.0), 0.0, {}};
  long double total = 0, t1 = 0, t2 = 0, t3 = 0;
  for (u64 q = 1; q <= Q; ++q) {
    const ResidueClassSums cls = serial::ap_sums(table, q, x);
    const double qd = static_cast<double>(q);
    long double v = 0, sq = 0, cross = 0, fsq = 0;
    for (u64 a = 1; a <= q; ++a) {
      const double f = eval_at_log(cache.f(q, a), log_x);
      const double A = to_double(cls.sums[a]);
      const double e = A - xd * f / qd;
      v += static_cast<long double>(e) * e;
      sq += static_cast<long double>(cls.sums[a]) * static_cast<long double>(cls.sums[a]);
      cross += static_cast<long double>(A) * f;
      fsq += static_cast<long double>(f) * f;
    }
    rep.per_q[q] = static_cast<double>(v);
    total += static_cast<double>(v);
    t1 += static_cast<double>(sq);
    t2 += static_cast<double>(-2.0L * xd * cross / qd);
    t3 += static_cast<double>(static_cast<long double>(xd) * xd * fsq / (static_cast<long double>(qd) * qd));
  }
  rep.total = static_cast<double>(total);
  rep.terms = {static_cast<double>(t1), static_cast<double>(t2), static_cast<double>(t3)};
  return rep;
}

}  // namespace apvar::serial
