#include <random>

#include <benchmark/benchmark.h>

#include "mingens/certificate.hpp"
#include "mingens/generator_count.hpp"
#include "mingens/matrix.hpp"
#include "mingens/norm_lift.hpp"
#include "mingens/univariate.hpp"

using namespace mingens;

namespace {

Field field_for(int id) {
  switch (id) {
    case 0: return Field::rationals();
    case 1: return Field::prime(101);
    default: return Field::extension(2, 4);
  }
}

void BM_PointSearch(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(0)));
  const unsigned d = static_cast<unsigned>(state.range(1));
  PointSearchOptions opt;
  opt.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(greedy_point_search(f, 2, d, opt));
}
BENCHMARK(BM_PointSearch)->ArgsProduct({{0, 1, 2}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_SolveCertificate(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(0)));
  const unsigned d = static_cast<unsigned>(state.range(1));
  const auto pts = greedy_point_search(f, 2, d, {}).points;
  for (auto _ : state) benchmark::DoNotOptimize(solve_certificate(f, 2, pts, d));
}
BENCHMARK(BM_SolveCertificate)->ArgsProduct({{0, 1, 2}, {2, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_Determinant(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(3);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(static_cast<long>(rng() % 19) - 9);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Determinant)->ArgsProduct({{0, 1, 2}, {8, 16, 32}});

void BM_Telescope(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  const unsigned d = 3;
  const auto gens = sharp_instance(f, n, d);
  for (auto _ : state) benchmark::DoNotOptimize(telescope_generators(f, n, gens, d));
}
BENCHMARK(BM_Telescope)->ArgsProduct({{0, 1}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_EnumerateIrreducibles(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto need = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_irreducibles(q, need));
}
BENCHMARK(BM_EnumerateIrreducibles)->ArgsProduct({{2, 3, 4}, {50, 200}})->Unit(benchmark::kMillisecond);

void BM_ExtremalSet(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal_set(2, d));
}
BENCHMARK(BM_ExtremalSet)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GaloisSearch(benchmark::State& state) {
  const auto params = conjecture_params(2, static_cast<unsigned>(state.range(0)), 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(galois_search(params, seed++, 100000, 1));
}
BENCHMARK(BM_GaloisSearch)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
