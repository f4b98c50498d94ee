#include <benchmark/benchmark.h>

#include <random>

#include "dualcanon/mu_canon.hpp"
#include "dualcanon/pipeline.hpp"
#include "dualcanon/polyalg.hpp"

namespace {

using namespace dualcanon;

KMatrix random_kmatrix(int n, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  KMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(dist(rng));
  return m;
}

void BM_MatMul(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = static_cast<int>(state.range(0));
  KMatrix a = random_kmatrix(n, rng), b = random_kmatrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8)->Arg(16);

void BM_Det(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = static_cast<int>(state.range(0));
  KMatrix a = random_kmatrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(det(a));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(16);

void BM_CharPoly(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int n = static_cast<int>(state.range(0));
  KMatrix a = random_kmatrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8);

void BM_MuCanonical(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int m = static_cast<int>(state.range(0));
  KMatrix a = random_kmatrix(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mu_canonical(a));
}
BENCHMARK(BM_MuCanonical)->Arg(3)->Arg(5)->Arg(8);

void BM_CanonicalSmall(benchmark::State& state) {
  std::mt19937_64 rng(7);
  DualMatrix a(jordan_matrix(Partition({2, 1}), Rational(2)),
               random_kmatrix(3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_small(a));
}
BENCHMARK(BM_CanonicalSmall);

}  // namespace

BENCHMARK_MAIN();
