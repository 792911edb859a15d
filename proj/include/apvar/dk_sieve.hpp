#pragma once

// Tables of d_k(n) for n <= x and the aggregates built on them.

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "apvar/common.hpp"

namespace apvar {

struct DkTable {
  u64 x = 0;
  unsigned k = 0;
  // values[n] = d_k(n) for 1 <= n <= x; values[0] is an unused 0.
  std::vector<u64> values;

  u64 operator[](u64 n) const { return values[n]; }
  friend bool operator==(const DkTable&, const DkTable&) = default;
};

struct SieveOptions {
  std::size_t segment_size = std::size_t{1} << 20;
};

// k-1 rounds of Dirichlet convolution with the constant-1 function. Each
// round is split into independent output segments run under OpenMP; the
// result does not depend on the thread count.
DkTable sieve_dk(u64 x, unsigned k, const SieveOptions& opts = {});

u128 total_sum(const DkTable& table);
u128 square_sum(const DkTable& table);

// A(X; q, a) for a = 1..q, with a = q standing for the class 0 mod q.
struct ResidueClassSums {
  u64 q = 0;
  u64 X = 0;
  std::vector<u128> sums;  // indexed 1..q; sums[0] unused

  u128 at(u64 a) const { return sums[a]; }
  u128 total() const;
};

ResidueClassSums ap_sums(const DkTable& table, u64 q, u64 X);

struct ExpSumValue {
  double re = 0;
  double im = 0;
  i64 a = 0;
  u64 q = 0;
  u64 X = 0;

  std::complex<double> value() const { return {re, im}; }
};

// S_X(a/q) = sum_{r=1}^q e(ar/q) A(X; q, r).
ExpSumValue exp_sum(const ResidueClassSums& cls, i64 a);

// e(m/q) for m = 0..q-1, with m/q reduced before the trig call.
std::vector<std::complex<double>> unit_roots(u64 q);

// DKTB cache file: "DKTB", u32 version = 1, u64 x, u32 k, then x u64 values,
// all little-endian.
inline constexpr std::uint32_t kDktbVersion = 1;

std::vector<unsigned char> encode_dktb(const DkTable& table);
DkTable decode_dktb(const std::vector<unsigned char>& bytes);
void write_dktb(const std::string& path, const DkTable& table);
DkTable read_dktb(const std::string& path);

}  // namespace apvar
