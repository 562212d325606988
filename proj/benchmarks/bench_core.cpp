#include "delzant/catalog.hpp"
#include "delzant/characters.hpp"
#include "delzant/desingularize.hpp"
#include "delzant/subdivision.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace delzant;

static void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithForm)->Arg(3)->Arg(6)->Arg(8);

static void BM_FaceLattice(benchmark::State& state) {
  const auto p = state.range(0) == 0 ? catalog::egyptian_pyramid() : catalog::unit_cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(face_lattice(p));
}
BENCHMARK(BM_FaceLattice)->Arg(0)->Arg(2)->Arg(3)->Arg(4);

static void BM_CanonicalDesingularization(benchmark::State& state) {
  const auto p = catalog::egyptian_pyramid();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_desingularization(p));
}
BENCHMARK(BM_CanonicalDesingularization);

static void BM_CountPoints(benchmark::State& state) {
  const auto p = catalog::egyptian_pyramid();
  for (auto _ : state) benchmark::DoNotOptimize(count_points(p, state.range(0)));
}
BENCHMARK(BM_CountPoints)->Arg(1)->Arg(4)->Arg(8);

static void BM_EhrhartFit(benchmark::State& state) {
  const auto p = catalog::weighted_triangle();
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_fit(p, 12));
}
BENCHMARK(BM_EhrhartFit);

static void BM_WeylCharacter(benchmark::State& state) {
  const auto r = RootSystemData::make(RootType::A3);
  const auto c = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_character(r, {c, c, c}));
}
BENCHMARK(BM_WeylCharacter)->Arg(1)->Arg(2)->Arg(3);

static void BM_ValidateDualSubdivision(benchmark::State& state) {
  const auto r = RootSystemData::make(state.range(0) == 2 ? RootType::A2 : RootType::A3);
  RationalVector lambda;
  for (std::size_t j = 0; j < r.k; ++j) lambda.push_back(make_rational(1, 7 + 4 * static_cast<long>(j)));
  const auto d = dual_subdivision(r, lambda);
  for (auto _ : state) benchmark::DoNotOptimize(validate(d.subdivision));
}
BENCHMARK(BM_ValidateDualSubdivision)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
