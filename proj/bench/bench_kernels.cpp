// Serial reference kernels against their OpenMP versions on one mesh size.

#include <map>
#include <memory>

#include <benchmark/benchmark.h>

#include "qcurl/analysis.hpp"
#include "qcurl/interp.hpp"
#include "qcurl/mms.hpp"
#include "qcurl/solver.hpp"
#include "qcurl/system.hpp"

using namespace qcurl;

namespace {

struct Fixture {
  GlobalDofMap dofs;
  ReferenceMatrices ref;
  CellTabulation tab;
  RowMatrix k;
  Eigen::VectorXd x;
  DofVector uh;

  explicit Fixture(int n)
      : dofs(BrickMesh(n)),
        ref(ReferenceMatrices::build(reference_spaces())),
        tab(CellTabulation::build(reference_spaces(), 6)) {
    SaddleSystem s{assemble_A(dofs, ref), assemble_B(dofs, ref), {}};
    k = s.full();
    x = Eigen::VectorXd::LinSpaced(s.size(), -1.0, 1.0);
    uh = global_Ih(manufactured_solution(), dofs);
  }
};

Fixture& fixture(int n) {
  static std::map<int, std::unique_ptr<Fixture>> cache;
  auto& f = cache[n];
  if (!f) f = std::make_unique<Fixture>(n);
  return *f;
}

VectorFunction source() {
  return [](const Vec3& x) { return manufactured_solution().f(x); };
}

void BM_assemble_A(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_A(f.dofs, f.ref));
}
void BM_assemble_A_serial(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::assemble_A(f.dofs, f.ref));
}

void BM_assemble_rhs(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_rhs(f.dofs, f.tab, source(), Scheme::Modified));
}
void BM_assemble_rhs_serial(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::assemble_rhs(f.dofs, f.tab, source(), Scheme::Modified));
}

void BM_error_vs_exact(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  const FieldSampler exact = sampler(manufactured_solution());
  for (auto _ : state) benchmark::DoNotOptimize(error_vs_exact(f.uh, f.dofs, f.tab, exact));
}
void BM_error_vs_exact_serial(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  const FieldSampler exact = sampler(manufactured_solution());
  for (auto _ : state) benchmark::DoNotOptimize(reference::error_vs_exact(f.uh, f.dofs, f.tab, exact));
}

void BM_spmv(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  Eigen::VectorXd y;
  for (auto _ : state) {
    spmv(f.k, f.x, y);
    benchmark::DoNotOptimize(y.data());
  }
}
void BM_spmv_serial(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  Eigen::VectorXd y;
  for (auto _ : state) {
    reference::spmv(f.k, f.x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_global_Ih(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(global_Ih(manufactured_solution(), f.dofs));
}
void BM_global_Ih_serial(benchmark::State& state) {
  Fixture& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::global_Ih(manufactured_solution(), f.dofs));
}

}  // namespace

BENCHMARK(BM_assemble_A)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_assemble_A_serial)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_assemble_rhs)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_assemble_rhs_serial)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_error_vs_exact)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_error_vs_exact_serial)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_spmv)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_spmv_serial)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_global_Ih)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_global_Ih_serial)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
