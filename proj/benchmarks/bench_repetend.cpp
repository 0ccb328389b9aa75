#include "repetend/certify.hpp"
#include "repetend/expansion.hpp"
#include "repetend/numtheory.hpp"

#include <benchmark/benchmark.h>

namespace {

using repetend::Natural;

void BM_OrderIncremental(benchmark::State& state) {
  const Natural m(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        repetend::multiplicative_order(Natural(2), m, {repetend::OrderStrategy::Incremental}));
  }
}
BENCHMARK(BM_OrderIncremental)->Arg(1019)->Arg(100003)->Arg(1000003);

void BM_OrderDivisors(benchmark::State& state) {
  const Natural m(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        repetend::multiplicative_order(Natural(2), m, {repetend::OrderStrategy::Divisors}));
  }
}
BENCHMARK(BM_OrderDivisors)->Arg(1019)->Arg(100003)->Arg(1000003);

void BM_Expand(benchmark::State& state) {
  const Natural m(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(repetend::expand(m, 10));
}
BENCHMARK(BM_Expand)->Arg(7)->Arg(9973)->Arg(99991);

void BM_FactorSemiprime(benchmark::State& state) {
  const Natural n = Natural("1000000007") * Natural("998244353");
  for (auto _ : state) benchmark::DoNotOptimize(repetend::factorize(n));
}
BENCHMARK(BM_FactorSemiprime);

void BM_IsPrime(benchmark::State& state) {
  const Natural p("340282366920938463463374607431768211507");
  for (auto _ : state) benchmark::DoNotOptimize(repetend::is_prime(p));
}
BENCHMARK(BM_IsPrime);

void BM_ScanBase2(benchmark::State& state) {
  repetend::ScanConfig config;
  config.base = 2;
  config.max_length = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    repetend::scan(config, [&](const repetend::PrimitivityCertificate&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ScanBase2)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
