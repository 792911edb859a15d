#include "apvar/arith.hpp"

#include <algorithm>
#include <new>

namespace apvar {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

FactorTable::FactorTable(u64 limit) : limit_(limit) {
  if (limit < 2) throw DomainError("factor table limit must be >= 2");
  if (limit > 0xffffffffull) throw DomainError("factor table limit exceeds 32-bit range");
  try {
    spf_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("factor table needs " + std::to_string((limit + 1) * sizeof(std::uint32_t)) +
                        " bytes");
  }
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (u64 m = i * i; m <= limit; m += i)
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(i);
  }
}

u64 FactorTable::spf(u64 n) const {
  if (n < 2 || n > limit_) throw DomainError("spf index out of range");
  return spf_[n];
}

std::vector<PrimePower> FactorTable::factorize(u64 n) const {
  if (n == 0 || n > limit_) throw DomainError("factorize: n out of table range");
  std::vector<PrimePower> out;
  while (n > 1) {
    const u64 p = spf_[n];
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.push_back({p, a});
  }
  return out;
}

namespace {

int mobius_of(const std::vector<PrimePower>& f) {
  for (const auto& pp : f)
    if (pp.a > 1) return 0;
  return (f.size() % 2 == 0) ? 1 : -1;
}

u64 phi_of(const std::vector<PrimePower>& f) {
  u64 r = 1;
  for (const auto& pp : f) {
    r *= pp.p - 1;
    for (unsigned i = 1; i < pp.a; ++i) r *= pp.p;
  }
  return r;
}

u64 dk_of(const std::vector<PrimePower>& f, unsigned k) {
  if (k == 0) throw DomainError("d_k requires k >= 1");
  u64 r = 1;
  for (const auto& pp : f) r *= d_k_prime_power(pp.a, k);
  return r;
}

}  // namespace

int FactorTable::mobius(u64 n) const { return mobius_of(factorize(n)); }
u64 FactorTable::euler_phi(u64 n) const { return phi_of(factorize(n)); }
u64 FactorTable::d_k(u64 n, unsigned k) const { return dk_of(factorize(n), k); }

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  std::vector<PrimePower> out;
  for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.push_back({p, a});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int mobius(u64 n) { return mobius_of(factorize(n)); }
u64 euler_phi(u64 n) { return phi_of(factorize(n)); }

u64 d_k_prime_power(unsigned a, unsigned k) {
  if (k == 0) throw DomainError("d_k requires k >= 1");
  // C(a+k-1, k-1), built incrementally so every intermediate is an exact binomial.
  u64 r = 1;
  for (unsigned i = 1; i < k; ++i) r = r * (a + i) / i;
  return r;
}

u64 d_k_of(u64 n, unsigned k) { return dk_of(factorize(n), k); }

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<u64> divisors(u64 q) {
  if (q == 0) throw DomainError("divisors: q must be >= 1");
  std::vector<u64> out{1};
  for (const auto& pp : factorize(q)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= pp.a; ++i) {
      pk *= pp.p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 ramanujan_sum(u64 q, u64 n) {
  if (q == 0) throw DomainError("ramanujan_sum: q must be >= 1");
  const u64 g = gcd(q, n);  // gcd(q, 0) = q
  i64 s = 0;
  for (u64 d : divisors(g)) s += mobius(q / d) * static_cast<i64>(d);
  return s;
}

ErrorExponents error_exponents(unsigned k) {
  if (k < 2) throw DomainError("error exponents need k >= 2");
  const i64 kk = k;
  return {{2, kk + 1}, {1, kk - 1}, {2, 2 * kk - 1}};
}

}  // namespace apvar
