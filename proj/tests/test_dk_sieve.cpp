#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "apvar/arith.hpp"
#include "apvar/dk_sieve.hpp"
#include "apvar/parallel.hpp"
#include "apvar/serial_reference.hpp"
#include "oracles.hpp"

using namespace apvar;

namespace {

std::vector<u64> body(const DkTable& t) { return {t.values.begin() + 1, t.values.end()}; }

}  // namespace

TEST_CASE("sieve small tables") {
  CHECK(body(sieve_dk(10, 2)) == std::vector<u64>{1, 2, 2, 3, 2, 4, 2, 4, 3, 4});
  CHECK(body(sieve_dk(6, 3)) == std::vector<u64>{1, 3, 3, 6, 3, 9});
  for (unsigned k = 1; k <= 8; ++k) CHECK(body(sieve_dk(1, k)) == std::vector<u64>{1});
  CHECK_THROWS_AS(sieve_dk(0, 2), DomainError);
  CHECK_THROWS_AS(sieve_dk(10, 0), DomainError);
  CHECK_THROWS_AS(sieve_dk(10, 9), DomainError);
  CHECK_THROWS_AS(sieve_dk(u64{1} << 50, 2), ResourceError);
}

TEST_CASE("sieve agrees with naive convolution and factorization, n <= 10^4, k <= 6") {
  const auto naive = oracle::naive_dk_tables(10000, 6);
  const FactorTable ft(10000);
  for (unsigned k = 1; k <= 6; ++k) {
    const DkTable par = sieve_dk(10000, k, {.segment_size = 777});
    const DkTable ser = serial::sieve_dk(10000, k);
    CHECK(par == ser);
    for (u64 n = 1; n <= 10000; ++n) {
      REQUIRE(par[n] == naive[k][n]);
      if (n > 1) REQUIRE(par[n] == ft.d_k(n, k));
    }
  }
}

TEST_CASE("sieve output does not depend on thread count or segment size") {
  const DkTable ref = serial::sieve_dk(20000, 4);
  for (int threads : {1, 2, 3, 8}) {
    set_thread_count(threads);
    for (std::size_t seg : {std::size_t{37}, std::size_t{1000}, std::size_t{4096}, std::size_t{1} << 20})
      CHECK(sieve_dk(20000, 4, {.segment_size = seg}) == ref);
  }
  set_thread_count(resolve_thread_count(std::nullopt));
}

TEST_CASE("table invariants") {
  const DkTable t = sieve_dk(2000, 5);
  CHECK(t[1] == 1);
  for (u64 p = 2; p <= 2000; ++p)
    if (oracle::is_prime_trial(p)) REQUIRE(t[p] == 5);
  const DkTable t2 = sieve_dk(3000, 2);
  CHECK(total_sum(t2) == oracle::hyperbola_divisor_sum(3000));
}

TEST_CASE("total and square sums") {
  REQUIRE(oracle::hyperbola_divisor_sum(100) == 482);
  CHECK(total_sum(sieve_dk(100, 2)) == 482);
  CHECK(square_sum(sieve_dk(10, 2)) == 83);
  CHECK(total_sum(sieve_dk(1, 3)) == 1);
  CHECK(square_sum(sieve_dk(1, 3)) == 1);
}

TEST_CASE("residue class sums") {
  const DkTable t = sieve_dk(10, 2);
  const auto one = ap_sums(t, 1, 10);
  CHECK(one.at(1) == total_sum(t));
  const auto two = ap_sums(t, 2, 10);
  CHECK(two.at(1) == 10);
  CHECK(two.at(2) == 17);
  const auto twelve = ap_sums(t, 12, 10);
  CHECK(twelve.at(11) == 0);
  CHECK(twelve.at(12) == 0);
  CHECK_THROWS_AS(ap_sums(t, 3, 11), DomainError);
  CHECK_THROWS_AS(ap_sums(t, 0, 10), DomainError);
}

TEST_CASE("class sums partition the total for q <= 200") {
  const DkTable t = sieve_dk(20000, 3);
  const u128 whole = total_sum(t);
  for (u64 q = 1; q <= 200; ++q) {
    const auto cls = ap_sums(t, q, t.x);
    REQUIRE(cls.total() == whole);
    const auto ref = serial::ap_sums(t, q, t.x);
    REQUIRE(cls.sums == ref.sums);
  }
}

TEST_CASE("exponential sums from class aggregates") {
  const DkTable t100 = sieve_dk(100, 2);
  const auto s0 = exp_sum(ap_sums(t100, 1, 100), 0);
  CHECK(s0.re == doctest::Approx(482));
  CHECK(s0.im == doctest::Approx(0).epsilon(1e-12));

  const DkTable t10 = sieve_dk(10, 2);
  const auto half = exp_sum(ap_sums(t10, 2, 10), 1);
  CHECK(half.re == doctest::Approx(7));
  CHECK(std::abs(half.im) < 1e-12);

  const auto third = exp_sum(ap_sums(t10, 3, 3), 1);
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2);  // e(1/3)
  const std::complex<double> expect = 1.0 * w + 2.0 * std::conj(w) + 2.0;
  CHECK(third.re == doctest::Approx(expect.real()));
  CHECK(third.im == doctest::Approx(expect.imag()));

  // a is taken mod q, negatives included
  const auto cls = ap_sums(t100, 7, 100);
  CHECK(exp_sum(cls, 3).re == doctest::Approx(exp_sum(cls, 10).re));
  CHECK(exp_sum(cls, -4).im == doctest::Approx(exp_sum(cls, 3).im));
}

TEST_CASE("exponential sums match direct summation, q <= 20, X <= 10^4") {
  const DkTable t = sieve_dk(10000, 3);
  const double whole = to_double(total_sum(t));
  for (u64 X : {1ull, 17ull, 999ull, 10000ull})
    for (u64 q = 1; q <= 20; ++q) {
      const auto cls = ap_sums(t, q, X);
      for (u64 a = 0; a < q; ++a) {
        const auto s = exp_sum(cls, static_cast<i64>(a));
        const auto d = oracle::direct_exp_sum(t.values, X, static_cast<i64>(a), q);
        REQUIRE(std::abs(s.value() - d) <= 1e-9 * whole);
        REQUIRE(std::abs(s.value()) <= whole * (1 + 1e-12));
      }
    }
}

TEST_CASE("DKTB layout and round trip") {
  const DkTable t = sieve_dk(100, 2);
  const auto bytes = encode_dktb(t);
  REQUIRE(bytes.size() == 4 + 4 + 8 + 4 + 8 * 100);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "DKTB");
  CHECK(bytes[4] == 1);
  CHECK(bytes[8] == 100);
  CHECK(bytes[16] == 2);
  CHECK(bytes[20] == 1);       // d(1)
  CHECK(bytes[20 + 8] == 2);   // d(2)
  CHECK(decode_dktb(bytes) == t);
  CHECK(encode_dktb(decode_dktb(bytes)) == bytes);

  auto bad = bytes;
  bad[0] = 'X';
  CHECK_THROWS_AS(decode_dktb(bad), DomainError);
  bad = bytes;
  bad[4] = 2;
  CHECK_THROWS_AS(decode_dktb(bad), DomainError);
  bad = bytes;
  bad.pop_back();
  CHECK_THROWS_AS(decode_dktb(bad), DomainError);

  const auto path = (std::filesystem::temp_directory_path() / "apvar_test.dktb").string();
  write_dktb(path, t);
  CHECK(read_dktb(path) == t);
  std::filesystem::remove(path);
}
