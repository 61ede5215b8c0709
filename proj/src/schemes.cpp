#include "msdiff/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "msdiff/error.hpp"
#include "msdiff/format.hpp"

namespace msdiff {

std::string_view to_string(SchemeKind kind) {
  return kind == SchemeKind::global ? "global" : "richardson";
}

SchemeKind parse_scheme_kind(std::string_view text) {
  if (text == "global") return SchemeKind::global;
  if (text == "richardson") return SchemeKind::richardson;
  throw ValidationError("unknown scheme '" + std::string(text) +
                        "' (valid: global, richardson)");
}

const Snapshot* TimeSeries::find(double t) const {
  for (const auto& snap : snapshots) {
    if (snap.t == t) return &snap;
  }
  return nullptr;
}

Discretization::Discretization(const MixtureSpec& s, const Grid1D& g,
                               FluxBoundary b, Backend be)
    : spec(s), coeffs(derive_coefficients(s)), grid(g), boundary(b),
      backend(be) {}

void validate(const SchemeConfig& cfg) {
  if (!(std::isfinite(cfg.dt) && cfg.dt > 0.0)) {
    throw ValidationError("dt must be positive, got " + format_double(cfg.dt));
  }
  if (!(std::isfinite(cfg.t_end) && cfg.t_end > 0.0)) {
    throw ValidationError("t_end must be positive, got " +
                          format_double(cfg.t_end));
  }
  if (cfg.kind == SchemeKind::richardson && cfg.k_iters < 1) {
    throw ValidationError("k_iters must be >= 1, got " +
                          std::to_string(cfg.k_iters));
  }
  if (cfg.snapshot_stride < 1) {
    throw ValidationError("snapshot_stride must be >= 1, got " +
                          std::to_string(cfg.snapshot_stride));
  }
}

double cfl_time_step(const Grid1D& grid, const MixtureSpec& spec,
                     double safety) {
  return safety * grid.dx() * grid.dx() / (2.0 * spec.max_diffusivity());
}

double cfl_aligned_time_step(const Grid1D& grid, const MixtureSpec& spec,
                             double t_end, double safety) {
  const double ratio = t_end / cfl_time_step(grid, spec, safety);
  // Ratios that are integers up to roundoff must not gain an extra step.
  const double steps = std::ceil(ratio * (1.0 - 1e-12));
  return t_end / steps;
}

long step_count(double dt, double t_end) {
  const double ratio = t_end / dt;
  const double steps = std::round(ratio);
  if (steps < 1.0 || std::abs(steps * dt - t_end) > 1e-9 * t_end) {
    throw ValidationError("dt = " + format_double(dt) +
                          " does not divide t_end = " + format_double(t_end));
  }
  return static_cast<long>(steps);
}

int default_snapshot_stride(long steps) {
  const long budget = kMaxSnapshots - 2;
  return static_cast<int>(std::max(1L, (steps + budget - 1) / budget));
}

namespace {

void check_state(const MixtureState& state, const Grid1D& grid) {
  if (state.xi1.size() != grid.node_count() ||
      state.xi2.size() != grid.node_count()) {
    throw ValidationError("state does not match the grid (" +
                          std::to_string(grid.node_count()) + " nodes)");
  }
}

FluxField empty_flux(std::size_t n) {
  return {NodalField(n, 0.0, Quantity::flux), NodalField(n, 0.0, Quantity::flux)};
}

void fill_fluxes(const MixtureState& state, const Discretization& disc,
                 FluxField& flux) {
  kernels::node_fluxes(disc.spec, disc.coeffs, state.xi1.values,
                       state.xi2.values, disc.grid.dx(), disc.boundary,
                       flux.n1.values, flux.n2.values, disc.backend);
}

void advance(const MixtureState& base, const FluxField& flux, double dt,
             const Discretization& disc, MixtureState& out) {
  const double dx = disc.grid.dx();
  kernels::conservative_update(base.xi1.values, flux.n1.values, dt, dx,
                               out.xi1.values, disc.backend);
  kernels::conservative_update(base.xi2.values, flux.n2.values, dt, dx,
                               out.xi2.values, disc.backend);
  out.t = base.t + dt;
}

}  // namespace

FluxField compute_fluxes(const MixtureState& state, const Discretization& disc) {
  check_state(state, disc.grid);
  FluxField flux = empty_flux(disc.grid.node_count());
  fill_fluxes(state, disc, flux);
  return flux;
}

StepResult step_global(const MixtureState& state, const FluxField& flux,
                       double dt, const Discretization& disc) {
  check_state(state, disc.grid);
  StepResult result{state, empty_flux(disc.grid.node_count())};
  advance(state, flux, dt, disc, result.state);
  fill_fluxes(result.state, disc, result.flux);
  return result;
}

StepResult step_richardson(const MixtureState& state, double dt, int k_iters,
                           const Discretization& disc) {
  check_state(state, disc.grid);
  if (k_iters < 1) {
    throw ValidationError("k_iters must be >= 1, got " +
                          std::to_string(k_iters));
  }
  StepResult result{state, empty_flux(disc.grid.node_count())};
  MixtureState iterate = state;
  for (int k = 1; k <= k_iters; ++k) {
    try {
      fill_fluxes(iterate, disc, result.flux);
    } catch (const SingularSystemError& e) {
      throw SingularSystemError(
          "richardson iteration " + std::to_string(k) + ": " + e.what(),
          e.node());
    }
    advance(state, result.flux, dt, disc, result.state);
    if (k < k_iters) {
      iterate.xi1 = result.state.xi1;
      iterate.xi2 = result.state.xi2;
    }
  }
  return result;
}

TimeSeries run_simulation(const MixtureState& initial, const SchemeConfig& cfg,
                          const Discretization& disc) {
  validate(cfg);
  check_state(initial, disc.grid);
  const long steps = step_count(cfg.dt, cfg.t_end);

  TimeSeries series;
  series.grid = disc.grid;
  series.spec = disc.spec;
  series.kind = cfg.kind;
  series.dt = cfg.dt;
  series.k_iters = cfg.kind == SchemeKind::richardson ? cfg.k_iters : 1;

  long n = 0;
  try {
    MixtureState state = initial;
    state.t = 0.0;
    FluxField flux = compute_fluxes(state, disc);
    series.snapshots.push_back({0.0, state, flux});

    for (n = 1; n <= steps; ++n) {
      if (cfg.kind == SchemeKind::global) {
        auto next = step_global(state, flux, cfg.dt, disc);
        state = std::move(next.state);
        flux = std::move(next.flux);
      } else {
        state = step_richardson(state, cfg.dt, cfg.k_iters, disc).state;
        // Snapshots pair a state with the flux of that same state.
        flux = compute_fluxes(state, disc);
      }
      // Multiply rather than accumulate: runs whose steps differ by a power
      // of two then report bit-identical times.
      state.t = n == steps ? cfg.t_end : static_cast<double>(n) * cfg.dt;
      if (n % cfg.snapshot_stride == 0 || n == steps) {
        series.snapshots.push_back({state.t, state, flux});
      }
    }
  } catch (const SingularSystemError& e) {
    throw SolverError("step " + std::to_string(n) + ": " + e.what(), n);
  }
  return series;
}

}  // namespace msdiff
