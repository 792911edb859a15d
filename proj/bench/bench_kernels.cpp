// Parallel kernels against the serial reference versions.

#include <benchmark/benchmark.h>

#include "apvar/dk_sieve.hpp"
#include "apvar/progression.hpp"
#include "apvar/serial_reference.hpp"

namespace {

void BM_SieveParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(apvar::sieve_dk(st.range(0), 3));
}
void BM_SieveSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(apvar::serial::sieve_dk(st.range(0), 3));
}
BENCHMARK(BM_SieveParallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveSerial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

const apvar::DkTable& table() {
  static const apvar::DkTable t = apvar::sieve_dk(1 << 20, 2);
  return t;
}

void BM_ApSumsParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(apvar::ap_sums(table(), st.range(0), table().x));
}
void BM_ApSumsSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(apvar::serial::ap_sums(table(), st.range(0), table().x));
}
BENCHMARK(BM_ApSumsParallel)->Arg(7)->Arg(997)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApSumsSerial)->Arg(7)->Arg(997)->Unit(benchmark::kMicrosecond);

void BM_VarianceParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(apvar::variance_total(table(), 1 << 16, st.range(0)));
}
void BM_VarianceSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(apvar::serial::variance_total(table(), 1 << 16, st.range(0)));
}
BENCHMARK(BM_VarianceParallel)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VarianceSerial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
