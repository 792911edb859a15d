#include "apvar/dk_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <new>
#include <numbers>

#include "apvar/detail/kernels.hpp"

namespace apvar {

namespace detail {

std::vector<u64> allocate_values(u64 x, std::size_t buffers) {
  const u128 bytes = static_cast<u128>(x + 1) * sizeof(u64) * buffers;
  if (x > (u64{1} << 40)) throw ResourceError("sieve up to x needs " + to_string(bytes) + " bytes");
  try {
    return std::vector<u64>(x + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("sieve up to x needs " + to_string(bytes) + " bytes");
  }
}

void check_sieve_args(u64 x, unsigned k) {
  if (x < 1) throw DomainError("sieve_dk: x must be >= 1");
  if (k < 1 || k > kMaxFold) throw DomainError("sieve_dk: k must be in 1..8");
}

void accumulate_classes(const DkTable& table, u64 q, u64 X, u128* out) {
  const u64* v = table.values.data();
  for (u64 r = 1; r <= q; ++r) {
    u128 s = 0;
    for (u64 n = r; n <= X; n += q) s += v[n];
    out[r] = s;
  }
}

}  // namespace detail

DkTable sieve_dk(u64 x, unsigned k, const SieveOptions& opts) {
  detail::check_sieve_args(x, k);
  if (opts.segment_size == 0) throw DomainError("sieve_dk: segment size must be positive");
  DkTable t{x, k, detail::allocate_values(x, k > 1 ? 2 : 1)};
  std::fill(t.values.begin() + 1, t.values.end(), u64{1});
  if (k == 1) return t;

  std::vector<u64> next = detail::allocate_values(x, 1);
  const u64 seg = opts.segment_size;
  const i64 nseg = static_cast<i64>((x + seg - 1) / seg);

  for (unsigned round = 1; round < k; ++round) {
    const u64* cur = t.values.data();
    u64* out = next.data();
#pragma omp parallel for schedule(dynamic, 1)
    for (i64 s = 0; s < nseg; ++s) {
      const u64 lo = 1 + static_cast<u64>(s) * seg;
      const u64 hi = std::min(x, lo + seg - 1);
      std::fill(out + lo, out + hi + 1, u64{0});
      for (u64 d = 1; d <= hi; ++d) {
        const u64 c = cur[d];
        for (u64 m = (lo + d - 1) / d * d; m <= hi; m += d) out[m] += c;
      }
    }
    t.values.swap(next);
  }
  return t;
}

u128 total_sum(const DkTable& table) {
  u128 s = 0;
  for (u64 n = 1; n <= table.x; ++n) s += table.values[n];
  return s;
}

u128 square_sum(const DkTable& table) {
  u128 s = 0;
  for (u64 n = 1; n <= table.x; ++n) {
    const u128 v = table.values[n];
    s += v * v;
  }
  return s;
}

u128 ResidueClassSums::total() const {
  u128 s = 0;
  for (u64 a = 1; a <= q; ++a) s += sums[a];
  return s;
}

ResidueClassSums ap_sums(const DkTable& table, u64 q, u64 X) {
  if (q < 1) throw DomainError("ap_sums: q must be >= 1");
  if (X < 1 || X > table.x) throw DomainError("ap_sums: X must lie in 1..table.x");
  ResidueClassSums cls{q, X, std::vector<u128>(q + 1, 0)};
  const u64* v = table.values.data();
  u128* out = cls.sums.data();
#pragma omp parallel for schedule(static)
  for (i64 r = 1; r <= static_cast<i64>(q); ++r) {
    u128 s = 0;
    for (u64 n = static_cast<u64>(r); n <= X; n += q) s += v[n];
    out[r] = s;
  }
  return cls;
}

std::vector<std::complex<double>> unit_roots(u64 q) {
  std::vector<std::complex<double>> roots(q);
  for (u64 m = 0; m < q; ++m) {
    // Fold into [0, 1/2] of a turn so the argument stays small.
    u64 num = m;
    bool conj = false;
    if (2 * num > q) {
      num = q - num;
      conj = true;
    }
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(q);
    const double c = std::cos(ang);
    const double s = std::sin(ang);
    roots[m] = {c, conj ? -s : s};
  }
  return roots;
}

ExpSumValue exp_sum(const ResidueClassSums& cls, i64 a) {
  const u64 q = cls.q;
  const i64 qi = static_cast<i64>(q);
  const u64 ar = static_cast<u64>(((a % qi) + qi) % qi);
  const auto roots = unit_roots(q);
  double re = 0;
  double im = 0;
  u64 m = ar % q;  // a*r mod q, stepped incrementally
  for (u64 r = 1; r <= q; ++r) {
    const double A = to_double(cls.sums[r]);
    re += A * roots[m].real();
    im += A * roots[m].imag();
    m += ar;
    if (m >= q) m -= q;
  }
  return {re, im, a, q, cls.X};
}

namespace {

void put_u32(std::vector<unsigned char>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<unsigned char>(v >> (8 * i)));
}
void put_u64(std::vector<unsigned char>& b, u64 v) {
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<unsigned char>(v >> (8 * i)));
}
std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}
u64 get_u64(const unsigned char* p) {
  u64 v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<u64>(p[i]) << (8 * i);
  return v;
}

constexpr std::size_t kHeaderBytes = 4 + 4 + 8 + 4;

}  // namespace

std::vector<unsigned char> encode_dktb(const DkTable& table) {
  std::vector<unsigned char> b;
  b.reserve(kHeaderBytes + 8 * table.x);
  b.insert(b.end(), {'D', 'K', 'T', 'B'});
  put_u32(b, kDktbVersion);
  put_u64(b, table.x);
  put_u32(b, table.k);
  for (u64 n = 1; n <= table.x; ++n) put_u64(b, table.values[n]);
  return b;
}

DkTable decode_dktb(const std::vector<unsigned char>& bytes) {
  if (bytes.size() < kHeaderBytes) throw DomainError("DKTB: truncated header");
  if (bytes[0] != 'D' || bytes[1] != 'K' || bytes[2] != 'T' || bytes[3] != 'B')
    throw DomainError("DKTB: bad magic");
  const unsigned char* p = bytes.data();
  if (get_u32(p + 4) != kDktbVersion) throw DomainError("DKTB: unsupported version");
  const u64 x = get_u64(p + 8);
  const unsigned k = get_u32(p + 16);
  if (k < 1 || k > kMaxFold) throw DomainError("DKTB: k out of range");
  if (x < 1 || (bytes.size() - kHeaderBytes) / 8 != x || (bytes.size() - kHeaderBytes) % 8 != 0)
    throw DomainError("DKTB: payload size does not match x");
  DkTable t{x, k, detail::allocate_values(x, 1)};
  for (u64 n = 1; n <= x; ++n) t.values[n] = get_u64(p + kHeaderBytes + 8 * (n - 1));
  return t;
}

void write_dktb(const std::string& path, const DkTable& table) {
  const auto bytes = encode_dktb(table);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw std::runtime_error("write failed: " + path);
}

DkTable read_dktb(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return decode_dktb(bytes);
}

}  // namespace apvar
