#include "msdiff/diagnostics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <string>

#include "msdiff/error.hpp"
#include "msdiff/format.hpp"
#include "msdiff/schemes.hpp"

namespace msdiff {

ThirdSpecies reconstruct_third(const MixtureState& state,
                               const FluxField& flux) {
  const std::size_t n = state.xi1.size();
  ThirdSpecies third{NodalField(n, 0.0, Quantity::mole_fraction),
                     NodalField(n, 0.0, Quantity::flux)};
  for (std::size_t j = 0; j < n; ++j) {
    third.xi3[j] = 1.0 - state.xi1[j] - state.xi2[j];
    // 0.0 - a - b keeps a zero flux at +0 rather than -0.
    third.n3[j] = 0.0 - flux.n1[j] - flux.n2[j];
  }
  return third;
}

MoleTotals total_moles(const MixtureState& state, const Grid1D& grid) {
  MoleTotals totals;
  for (std::size_t j = 0; j < state.xi1.size(); ++j) {
    totals.m1 += state.xi1[j];
    totals.m2 += state.xi2[j];
    totals.m3 += 1.0 - state.xi1[j] - state.xi2[j];
  }
  totals.m1 *= grid.dx();
  totals.m2 *= grid.dx();
  totals.m3 *= grid.dx();
  return totals;
}

double l1_distance(const MixtureState& a, const MixtureState& b,
                   const Grid1D& grid) {
  if (a.xi1.size() != b.xi1.size() || a.xi1.size() != grid.node_count()) {
    throw ValidationError("l1 distance between states on different grids");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < a.xi1.size(); ++j) {
    sum += std::abs(a.xi1[j] - b.xi1[j]) + std::abs(a.xi2[j] - b.xi2[j]);
  }
  return grid.dx() * sum;
}

double l1_error(const TimeSeries& candidate, const TimeSeries& reference,
                double t) {
  if (!(candidate.grid == reference.grid)) {
    throw ValidationError("cannot compare series on different grids (J=" +
                          std::to_string(candidate.grid.j_max()) + " vs J=" +
                          std::to_string(reference.grid.j_max()) + ")");
  }
  const Snapshot* c = candidate.find(t);
  const Snapshot* r = reference.find(t);
  if (c == nullptr || r == nullptr) {
    throw ValidationError("no snapshot at t = " + format_double(t) + " in " +
                          (c == nullptr ? "candidate" : "reference") +
                          " series");
  }
  return l1_distance(c->state, r->state, candidate.grid);
}

std::size_t UphillMask::count() const {
  return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), true));
}

UphillMask uphill_mask(const TimeSeries& series, double threshold) {
  UphillMask mask;
  mask.snapshot_count = series.snapshots.size();
  mask.node_count = series.grid.node_count();
  mask.cells.assign(mask.snapshot_count * mask.node_count, false);
  for (std::size_t s = 0; s < series.snapshots.size(); ++s) {
    const Snapshot& snap = series.snapshots[s];
    mask.times.push_back(snap.t);
    const NodalField grad = diff_backward(snap.state.xi2, series.grid);
    for (std::size_t j = 0; j < mask.node_count; ++j) {
      if (snap.flux.n2[j] * grad[j] > threshold) {
        mask.cells[s * mask.node_count + j] = true;
      }
    }
  }
  return mask;
}

namespace {

double resolve_dt(const RunRequest& req, double dt_cfl) {
  return req.dt_divisor ? dt_cfl / *req.dt_divisor : req.dt;
}

void track_extremes(const TimeSeries& series, ConvergenceRow& row) {
  row.min_fraction = 1.0;
  row.max_fraction = 0.0;
  for (const auto& snap : series.snapshots) {
    for (std::size_t j = 0; j < snap.state.xi1.size(); ++j) {
      const double x1 = snap.state.xi1[j];
      const double x2 = snap.state.xi2[j];
      const double x3 = 1.0 - x1 - x2;
      row.min_fraction = std::min({row.min_fraction, x1, x2, x3});
      row.max_fraction = std::max({row.max_fraction, x1, x2, x3});
    }
  }
}

}  // namespace

ConvergenceReport convergence_study(const Scenario& scenario,
                                    const std::vector<RunRequest>& requests,
                                    const ConvergenceOptions& options) {
  if (options.reference_divisor < 1) {
    throw ValidationError("reference divisor must be >= 1");
  }
  const Grid1D grid = build_grid(options.j_max);
  const Discretization disc(scenario.spec, grid, options.boundary);
  const MixtureState initial = initial_state(scenario.profile, grid);

  ConvergenceReport report;
  report.scenario = scenario.name;
  report.j_max = options.j_max;
  report.t_compare = scenario.t_end;
  report.dt_cfl = cfl_aligned_time_step(grid, scenario.spec, scenario.t_end);
  report.reference_dt = report.dt_cfl / options.reference_divisor;

  SchemeConfig ref_cfg;
  ref_cfg.kind = SchemeKind::global;
  ref_cfg.dt = report.reference_dt;
  ref_cfg.t_end = scenario.t_end;
  ref_cfg.snapshot_stride =
      static_cast<int>(step_count(ref_cfg.dt, ref_cfg.t_end));
  const TimeSeries reference = run_simulation(initial, ref_cfg, disc);

  report.rows.resize(requests.size());
  const auto count = static_cast<std::int64_t>(requests.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel_rows)
  for (std::int64_t i = 0; i < count; ++i) {
    const RunRequest& req = requests[static_cast<std::size_t>(i)];
    ConvergenceRow& row = report.rows[static_cast<std::size_t>(i)];
    row.kind = req.kind;
    row.dt = resolve_dt(req, report.dt_cfl);
    row.k_iters = req.kind == SchemeKind::richardson ? req.k_iters : 1;
    const auto start = std::chrono::steady_clock::now();
    try {
      SchemeConfig cfg;
      cfg.kind = req.kind;
      cfg.dt = row.dt;
      cfg.k_iters = row.k_iters;
      cfg.t_end = scenario.t_end;
      cfg.snapshot_stride = default_snapshot_stride(step_count(cfg.dt, cfg.t_end));
      const TimeSeries series = run_simulation(initial, cfg, disc);
      track_extremes(series, row);
      row.l1_error = l1_error(series, reference, scenario.t_end);
    } catch (const std::exception& e) {
      row.failure = e.what();
    }
    row.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  }
  return report;
}

}  // namespace msdiff
