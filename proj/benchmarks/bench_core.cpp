#include <benchmark/benchmark.h>

#include <random>

#include "rhocalc/circle_heat.hpp"
#include "rhocalc/lens.hpp"
#include "rhocalc/zoo_conjugacy.hpp"

using namespace rhocalc;

static Cyclotomic random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  Cyclotomic out = Cyclotomic::zero(n);
  for (int k = 0; k < n; ++k) out += make_rational(num(rng), den(rng)) * Cyclotomic::root_of_unity(n, k);
  return out;
}

static void BM_CyclotomicMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto a = random_element(rng, n), b = random_element(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(5)->Arg(12)->Arg(24)->Arg(60);

static void BM_CyclotomicInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto a = random_element(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(12)->Arg(24);

static void BM_EtaTerm(benchmark::State& state) {
  const QuadratureConfig cfg;
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eta_term(n, cfg));
}
BENCHMARK(BM_EtaTerm)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_LensTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LensSpace lens(n, {1, 2, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(lens_delocalized_rho(lens));
}
BENCHMARK(BM_LensTable)->Arg(3)->Arg(7)->Arg(15)->Unit(benchmark::kMicrosecond);

static void BM_SpanRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto family = canonical_lens_family(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(span_rank(n, Parity::Plus, 4, family));
}
BENCHMARK(BM_SpanRank)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ClassBallHnn(benchmark::State& state) {
  const auto hnn = ZooGroup::hnn_shift();
  const auto h = hnn->normalize("q:1");
  ConjugacyOptions options;
  options.jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(class_ball(hnn, h, static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_ClassBallHnn)->Args({5, 1})->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_ClassBallLamplighter(benchmark::State& state) {
  const auto l2 = ZooGroup::lamplighter(2);
  const auto t = l2->normalize("t");
  for (auto _ : state) benchmark::DoNotOptimize(class_ball(l2, t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ClassBallLamplighter)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_WordBallIntegerLamplighter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(word_ball(ZooGroup::lamplighter(0), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WordBallIntegerLamplighter)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
