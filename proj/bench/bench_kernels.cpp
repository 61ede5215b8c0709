// Serial vs OpenMP kernels. Usage: bench_kernels [--benchmark_filter=...]
#include <benchmark/benchmark.h>

#include <vector>

#include "msdiff/kernels.hpp"
#include "msdiff/scenarios.hpp"
#include "msdiff/schemes.hpp"

using namespace msdiff;

namespace {

struct Fixture {
  explicit Fixture(int j_max)
      : spec(scenario_catalog("uphill-semidegenerate").spec),
        coeffs(derive_coefficients(spec)),
        grid(build_grid(j_max)),
        state(initial_state(InitialProfile::uphill, grid)),
        n1(grid.node_count()),
        n2(grid.node_count()),
        out(grid.node_count()) {}

  MixtureSpec spec;
  MixtureCoefficients coeffs;
  Grid1D grid;
  MixtureState state;
  std::vector<double> n1, n2, out;
};

template <Backend B>
void BM_NodeFluxes(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    kernels::node_fluxes(f.spec, f.coeffs, f.state.xi1.values, f.state.xi2.values,
                         f.grid.dx(), FluxBoundary::outer_faces, f.n1, f.n2, B);
    benchmark::DoNotOptimize(f.n1.data());
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <Backend B>
void BM_ConservativeUpdate(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)));
  kernels::node_fluxes(f.spec, f.coeffs, f.state.xi1.values, f.state.xi2.values,
                       f.grid.dx(), FluxBoundary::outer_faces, f.n1, f.n2, B);
  for (auto _ : st) {
    kernels::conservative_update(f.state.xi1.values, f.n1, 1e-7, f.grid.dx(), f.out, B);
    benchmark::DoNotOptimize(f.out.data());
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <Backend B>
void BM_GlobalStep(benchmark::State& st) {
  Fixture f(static_cast<int>(st.range(0)));
  const Discretization disc(f.spec, f.grid, FluxBoundary::outer_faces, B);
  const double dt = cfl_time_step(f.grid, f.spec);
  const FluxField flux = compute_fluxes(f.state, disc);
  for (auto _ : st) {
    StepResult r = step_global(f.state, flux, dt, disc);
    benchmark::DoNotOptimize(r.state.xi1.values.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

#define MSDIFF_SIZES ->Arg(140)->Arg(4096)->Arg(65536)

BENCHMARK(BM_NodeFluxes<Backend::serial>) MSDIFF_SIZES;
BENCHMARK(BM_NodeFluxes<Backend::openmp>) MSDIFF_SIZES;
BENCHMARK(BM_ConservativeUpdate<Backend::serial>) MSDIFF_SIZES;
BENCHMARK(BM_ConservativeUpdate<Backend::openmp>) MSDIFF_SIZES;
BENCHMARK(BM_GlobalStep<Backend::serial>) MSDIFF_SIZES;
BENCHMARK(BM_GlobalStep<Backend::openmp>) MSDIFF_SIZES;

BENCHMARK_MAIN();
