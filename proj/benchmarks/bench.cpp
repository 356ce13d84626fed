#include <benchmark/benchmark.h>

#include <qcrit/analysis.hpp>
#include <qcrit/entanglement.hpp>
#include <random>

using namespace qcrit;

namespace {

QuantumState random_state(SectorPtr sector, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(sector->size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = cplx(g(rng), g(rng));
  v.normalize();
  return QuantumState(std::move(sector), std::move(v));
}

void BM_apply_tfim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = build_tfim(n, 1.0);
  const OperatorExpression h = std::get<OperatorExpression>(total_operator(spec));
  auto psi = random_state(spec.sector, 42);
  for (auto _ : state) {
    auto out = apply(h, psi);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_apply_tfim)->Arg(10)->Arg(12)->Arg(14)->Complexity();

void BM_apply_xxz_sector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = build_xxz(n, 0.5);
  const OperatorExpression h = std::get<OperatorExpression>(total_operator(spec));
  auto psi = random_state(spec.sector, 42);
  for (auto _ : state) {
    auto out = apply(h, psi);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_apply_xxz_sector)->Arg(12)->Arg(16);

void BM_ground_state_dense(benchmark::State& state) {
  const auto spec = build_tfim(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) {
    auto sol = ground_state(spec);
    benchmark::DoNotOptimize(sol.energy);
  }
}
BENCHMARK(BM_ground_state_dense)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ground_state_lanczos(benchmark::State& state) {
  const auto spec = build_tfim(static_cast<int>(state.range(0)), 1.0);
  SolverOptions so;
  so.dense_cutoff = 1;
  for (auto _ : state) {
    auto sol = ground_state(spec, so);
    benchmark::DoNotOptimize(sol.energy);
  }
}
BENCHMARK(BM_ground_state_lanczos)
    ->Arg(10)
    ->Arg(12)
    ->Arg(14)
    ->Unit(benchmark::kMillisecond);

void BM_partial_trace(benchmark::State& state) {
  const auto spec = build_tfim(static_cast<int>(state.range(0)), 1.0);
  auto psi = random_state(spec.sector, 7);
  for (auto _ : state) {
    auto rdm = reduced_density_matrix(psi, {0, 1});
    benchmark::DoNotOptimize(rdm.rho.data());
  }
}
BENCHMARK(BM_partial_trace)->Arg(12)->Arg(16);

void BM_sweep_lipkin(benchmark::State& state) {
  ModelParams p;
  p.model = ModelId::Lipkin;
  p.n_sites = static_cast<int>(state.range(0));
  std::vector<double> grid;
  for (int i = 0; i < 21; ++i) grid.push_back(0.5 + 0.05 * i);
  SweepOptions opts;
  opts.solver.dense_cutoff = 256;
  for (auto _ : state) {
    auto recs = sweep(p, grid, opts);
    benchmark::DoNotOptimize(recs.data());
  }
}
BENCHMARK(BM_sweep_lipkin)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
