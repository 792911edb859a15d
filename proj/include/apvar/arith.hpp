#pragma once

// Exact elementary number theory over 64-bit integers.

#include <vector>

#include "apvar/common.hpp"

namespace apvar {

struct PrimePower {
  u64 p;
  unsigned a;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Smallest-prime-factor table for 2 <= n <= limit. Immutable once built.
class FactorTable {
 public:
  explicit FactorTable(u64 limit);

  u64 limit() const { return limit_; }
  u64 spf(u64 n) const;

  std::vector<PrimePower> factorize(u64 n) const;
  int mobius(u64 n) const;
  u64 euler_phi(u64 n) const;
  u64 d_k(u64 n, unsigned k) const;

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
};

inline FactorTable build_factor_table(u64 limit) { return FactorTable(limit); }

// Trial-division variants for moduli that live outside any table.
std::vector<PrimePower> factorize(u64 n);
int mobius(u64 n);
u64 euler_phi(u64 n);

// Number of ordered k-tuples with product n.
u64 d_k_of(u64 n, unsigned k);
u64 d_k_prime_power(unsigned a, unsigned k);

// c_q(n) = sum_{d | (q,n)} mu(q/d) d.
i64 ramanujan_sum(u64 q, u64 n);

std::vector<u64> divisors(u64 q);

u64 gcd(u64 a, u64 b);

// Exponent of p in n (n >= 1).
unsigned valuation(u64 n, u64 p);

struct Rational {
  i64 num;
  i64 den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// theta = 2/(k+1), delta_cap = 1/(k-1), delta = 2/(2k-1). Requires k >= 2.
struct ErrorExponents {
  Rational theta;
  Rational delta_cap;
  Rational delta;
};

ErrorExponents error_exponents(unsigned k);

}  // namespace apvar
