#include <benchmark/benchmark.h>

#include "kol/cubic_field.hpp"
#include "kol/diffraction.hpp"
#include "kol/modelset.hpp"
#include "kol/rng.hpp"
#include "kol/sequences.hpp"
#include "kol/windows.hpp"

namespace {

void BM_CubicMul(benchmark::State& state) {
  const kol::CubicNumber a = kol::CubicNumber::alpha();
  kol::CubicNumber x(kol::Rational(3, 7), kol::Rational(-1, 2), kol::Rational(5, 3));
  for (auto _ : state) {
    x = x * a;
    x = x * a.inverse();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_CubicMul);

void BM_SelfRead(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kol::seq::kol_selfread(3, 1, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SelfRead)->Range(1 << 10, 1 << 20);

void BM_BlockFixedPoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kol::seq::block_fixed_point(n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BlockFixedPoint)->Range(1 << 10, 1 << 20);

void BM_Membership(benchmark::State& state) {
  kol::Rng rng(kol::kDefaultSeed);
  benchmark::DoNotOptimize(kol::win::membership({0, 0}, kol::win::WindowLabel::AB));
  for (auto _ : state) {
    const kol::Complex z(3 * rng.uniform() - 1.5, 3 * rng.uniform() - 1.5);
    benchmark::DoNotOptimize(kol::win::membership(z, kol::win::WindowLabel::AB));
  }
}
BENCHMARK(BM_Membership);

void BM_SitesInRange(benchmark::State& state) {
  const auto L = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kol::ms::sites_in_range(L));
}
BENCHMARK(BM_SitesInRange)->Arg(1'000)->Arg(10'000);

void BM_SpectrumWindow(benchmark::State& state) {
  kol::dif::SpectrumConfig cfg;
  cfg.bound = static_cast<int>(state.range(0));
  cfg.samples = 20'000;
  for (auto _ : state)
    benchmark::DoNotOptimize(kol::dif::spectrum_table(kol::dif::Deformation::integer_lengths,
                                                      kol::dif::Method::window, cfg));
}
BENCHMARK(BM_SpectrumWindow)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
