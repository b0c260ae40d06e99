#include <benchmark/benchmark.h>

#include <random>

#include "nearspace/nearspace.hpp"

namespace {

using namespace nearspace;

const Nearfield& dn32() {
  static const Nearfield R = Nearfield::build(3, 2);
  return R;
}

NfMatrix random_matrix(const Nearfield& R, std::size_t k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, R.order() - 1);
  NfMatrix M(n);
  for (std::size_t i = 0; i < k; ++i) {
    NfVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Elem{pick(rng)};
    M.append(row);
  }
  return M;
}

void BM_FieldMul(benchmark::State& state) {
  const auto F = FiniteField::build(3, static_cast<std::uint32_t>(state.range(0)));
  std::uint32_t a = 1;
  for (auto _ : state) {
    a = F.mul(Elem{a % F.order()}, Elem{(a * 7 + 3) % F.order()}).index + 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(6)->Arg(10);

void BM_FieldMulPoly(benchmark::State& state) {
  const auto F = FiniteField::build(3, static_cast<std::uint32_t>(state.range(0)));
  std::uint32_t a = 1;
  for (auto _ : state) {
    a = F.mul_poly(Elem{a % F.order()}, Elem{(a * 7 + 3) % F.order()}).index + 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMulPoly)->Arg(2)->Arg(6)->Arg(10);

void BM_NearfieldMul(benchmark::State& state) {
  const auto R = Nearfield::build(static_cast<std::uint64_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
  std::uint32_t a = 1;
  for (auto _ : state) {
    a = R.mul(Elem{a % R.order()}, Elem{(a * 5 + 1) % R.order()}).index + 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_NearfieldMul)->Args({3, 2})->Args({5, 4})->Args({7, 3});

void BM_Ege(benchmark::State& state) {
  const auto& R = dn32();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto M = random_matrix(R, n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ege(R, M));
}
BENCHMARK(BM_Ege)->RangeMultiplier(2)->Range(4, 64);

void BM_Aege(benchmark::State& state) {
  const auto& R = dn32();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto M = random_matrix(R, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(aege(R, M));
}
BENCHMARK(BM_Aege)->RangeMultiplier(2)->Range(4, 64);

void BM_GenBruteforce(benchmark::State& state) {
  const auto& R = dn32();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto M = random_matrix(R, 2, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::gen_bruteforce(R, n, M.rows()));
}
BENCHMARK(BM_GenBruteforce)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SpanBruteforce(benchmark::State& state) {
  const auto& R = dn32();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto M = random_matrix(R, 2, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::span_bruteforce(R, n, M.rows()));
}
BENCHMARK(BM_SpanBruteforce)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
