#include <benchmark/benchmark.h>

#include "nuent/measures.hpp"
#include "nuent/sweep.hpp"

namespace {

using namespace nuent;

void BM_ReportClosedForm(benchmark::State& state) {
  const MixingMatrix u = build_pmns({});
  double le = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(report(u, {}, Flavor::muon, le, EvalPath::closed_form));
    le += 0.37;
  }
}
BENCHMARK(BM_ReportClosedForm);

void BM_ReportGeneric(benchmark::State& state) {
  const MixingMatrix u = build_pmns({});
  double le = 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(report(u, {}, Flavor::muon, le, EvalPath::generic));
    le += 0.37;
  }
}
BENCHMARK(BM_ReportGeneric);

void BM_HermitianEigenvalues8(benchmark::State& state) {
  const double s = 1.0 / std::sqrt(3.0);
  const ComplexMatrix rho = density(TripartiteState({s, cplx(0.0, s), -s})).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
}
BENCHMARK(BM_HermitianEigenvalues8);

void BM_Sweep(benchmark::State& state) {
  SweepConfig c;
  c.initial = Flavor::electron;
  c.le_max = 40.0;
  c.points = 4001;
  c.path = state.range(0) ? SweepPath::both : SweepPath::closed_form;
  c.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c));
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
