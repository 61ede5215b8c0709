#pragma once

#include "msdiff/grid.hpp"
#include "msdiff/kernels.hpp"
#include "msdiff/mixture.hpp"
#include "msdiff/time_series.hpp"

namespace msdiff {

/// Everything a stepper needs besides the state: parameters, the derived
/// coefficients, the grid and the kernel options.
struct Discretization {
  MixtureSpec spec;
  MixtureCoefficients coeffs;
  Grid1D grid;
  FluxBoundary boundary = FluxBoundary::outer_faces;
  Backend backend = Backend::serial;

  Discretization(const MixtureSpec& s, const Grid1D& g,
                 FluxBoundary b = FluxBoundary::outer_faces,
                 Backend be = Backend::serial);
};

struct SchemeConfig {
  SchemeKind kind = SchemeKind::global;
  double dt = 0.0;
  int k_iters = 1;
  double t_end = 1.0;
  int snapshot_stride = 1;
};

void validate(const SchemeConfig& cfg);

/// safety * dx^2 / (2 * max(D12, D13, D23)).
double cfl_time_step(const Grid1D& grid, const MixtureSpec& spec,
                     double safety = 1.0);

/// Largest step that is <= the CFL bound and divides t_end into a whole
/// number of steps: t_end / ceil(t_end / dt_cfl).
double cfl_aligned_time_step(const Grid1D& grid, const MixtureSpec& spec,
                             double t_end, double safety = 1.0);

/// Number of steps t_end/dt; throws ValidationError unless dt divides t_end
/// to 1e-9 relative.
long step_count(double dt, double t_end);

inline constexpr long kMaxSnapshots = 512;

/// Smallest stride that keeps a run of `steps` steps at <= kMaxSnapshots
/// snapshots, counting the initial and the final one.
int default_snapshot_stride(long steps);

FluxField compute_fluxes(const MixtureState& state, const Discretization& disc);

struct StepResult {
  MixtureState state;
  FluxField flux;
};

/// Global linearization: xi^{n+1} = xi^n + dt D+ N^n, then N^{n+1} from the
/// inverse flux system evaluated at xi^{n+1}.
StepResult step_global(const MixtureState& state, const FluxField& flux,
                       double dt, const Discretization& disc);

/// Richardson local linearization. Starting from xi^{n+1,0} = xi^n, for
/// k = 1..K: N^k = inverse(xi^{n+1,k-1}) * (-D- xi^{n+1,k-1}), then
/// xi^{n+1,k} = xi^n + dt D+ N^k. Returns (xi^{n+1,K}, N^K).
StepResult step_richardson(const MixtureState& state, double dt, int k_iters,
                           const Discretization& disc);

/// Runs from `initial` to cfg.t_end. Snapshots at t = 0, every
/// snapshot_stride steps, and at t_end; each pairs a state with the flux
/// computed from it. Stepper failures are rethrown as SolverError.
TimeSeries run_simulation(const MixtureState& initial, const SchemeConfig& cfg,
                          const Discretization& disc);

}  // namespace msdiff
