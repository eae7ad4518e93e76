#include <benchmark/benchmark.h>

#include "uncsmear/monte_carlo.hpp"
#include "uncsmear/oscillator2d.hpp"
#include "uncsmear/smearing.hpp"

using namespace uncsmear;

namespace {

void BM_SmearPoint(benchmark::State& state) {
  const auto model = static_cast<ModelId>(state.range(0));
  const auto shape = static_cast<KernelShape>(state.range(1));
  const Smearer s(ClassicalOrbit::at_resolved_energy(model, default_params(model)),
                  KernelSpec{shape, kDefaultKappa1D, std::nullopt});
  const double mid = s.orbit().turning_points().midpoint();
  double x = mid;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s(x));
    x = x > mid + 1.0 ? mid - 1.0 : x + 0.013;
  }
  state.SetLabel(std::string(to_string(model)) + "/" + std::string(to_string(shape)));
}
BENCHMARK(BM_SmearPoint)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1, 2}});

void BM_SmearDefaultGrid(benchmark::State& state) {
  const auto shape = static_cast<KernelShape>(state.range(0));
  const auto orbit = ClassicalOrbit::at_resolved_energy(ModelId::Harmonic, {});
  const Smearer s(orbit, KernelSpec{shape, kDefaultKappa1D, std::nullopt});
  const Grid g = default_grid(orbit, shape);
  for (auto _ : state) benchmark::DoNotOptimize(smear_density(s, g));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * g.size()));
}
BENCHMARK(BM_SmearDefaultGrid)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_McOracle(benchmark::State& state) {
  const auto model = static_cast<ModelId>(state.range(0));
  const auto params = default_params(model);
  McOptions opt;
  opt.samples = 100'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_oracle(model, params, KernelSpec{}, ground_energy(model, params), opt));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * opt.samples));
}
BENCHMARK(BM_McOracle)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Smear2DGrid(benchmark::State& state) {
  const Osc2DParams p(2.0);
  Smear2DOptions o;
  o.n_beta = static_cast<int>(state.range(0));
  const Smearer2D sm(p, o);
  const Grid g(-3.0, 3.0, 201);
  for (auto _ : state) benchmark::DoNotOptimize(sm.on_grid(g, g));
}
BENCHMARK(BM_Smear2DGrid)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
