// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msdiff/diagnostics.hpp"
#include "msdiff/error.hpp"
#include "msdiff/format.hpp"
#include "msdiff/io.hpp"
#include "msdiff/scenarios.hpp"
#include "msdiff/schemes.hpp"
#include "test_support.hpp"

using namespace msdiff;
using msdiff::test::kDuncanToor;
using msdiff::test::kSemiDegenerate;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) { return format_double(v); }

Outcome inverse_identity() {
  std::mt19937_64 rng(20240611);
  double worst = 0.0;
  int samples = 0;
  for (const MixtureSpec& spec : {kSemiDegenerate, kDuncanToor}) {
    const MixtureCoefficients c = derive_coefficients(spec);
    for (int i = 0; i < 1000; ++i, ++samples) {
      const NodeComposition x = test::random_simplex(rng);
      const FluxMatrix2 m = flux_system_matrix(c, x, spec);
      const FluxMatrix2 inv = flux_system_inverse(c, x, spec);
      worst = std::max(worst, (m * inv).max_abs_deviation_from_identity());
    }
  }
  return {worst < 1e-12, "max |M*inv - I| = " + fmt(worst) + " over " +
                             std::to_string(samples) + " compositions"};
}

Outcome conservation() {
  const Grid1D grid = build_grid(140);
  double worst = 0.0;
  std::string where;
  for (const char* name : {"uphill-semidegenerate", "duncan-toor-asymptotic"}) {
    const Scenario sc = scenario_catalog(name);
    const Discretization disc(sc.spec, grid);
    const double dt = cfl_aligned_time_step(grid, sc.spec, sc.t_end);
    const long steps = step_count(dt, sc.t_end);
    for (SchemeKind kind : {SchemeKind::global, SchemeKind::richardson}) {
      MixtureState state = initial_state(sc.profile, grid);
      FluxField flux = compute_fluxes(state, disc);
      const MoleTotals m0 = total_moles(state, grid);
      for (long n = 1; n <= steps; ++n) {
        StepResult r = kind == SchemeKind::global
                           ? step_global(state, flux, dt, disc)
                           : step_richardson(state, dt, 1, disc);
        state = std::move(r.state);
        flux = std::move(r.flux);
        const MoleTotals m = total_moles(state, grid);
        const double drift = std::max({std::abs(m.m1 - m0.m1) / m0.m1,
                                       std::abs(m.m2 - m0.m2) / m0.m2,
                                       std::abs(m.m3 - m0.m3) / m0.m3});
        if (!(drift <= worst)) {
          worst = drift;
          where = std::string(name) + "/" + std::string(to_string(kind)) + " step " +
                  std::to_string(n);
        }
      }
    }
  }
  return {worst < 1e-12,
          "max relative species drift = " + fmt(worst) + " (" + where + ")"};
}

Outcome scheme_equivalence() {
  const Scenario sc = scenario_catalog("uphill-semidegenerate");
  const Grid1D grid = build_grid(140);
  const Discretization disc(sc.spec, grid);
  const double dt = cfl_aligned_time_step(grid, sc.spec, sc.t_end);
  MixtureState g = initial_state(sc.profile, grid);
  MixtureState r = g;
  FluxField flux = compute_fluxes(g, disc);
  for (int n = 0; n < 100; ++n) {
    StepResult gs = step_global(g, flux, dt, disc);
    g = std::move(gs.state);
    flux = std::move(gs.flux);
    r = step_richardson(r, dt, 1, disc).state;
  }
  const double diff = std::max(test::max_abs_diff(g.xi1.values, r.xi1.values),
                               test::max_abs_diff(g.xi2.values, r.xi2.values));
  return {diff <= 1e-15, "max |global - richardson(K=1)| after 100 steps = " + fmt(diff)};
}

Outcome uphill_reproduction() {
  const Scenario sc = scenario_catalog("uphill-semidegenerate");
  const Grid1D grid = build_grid(140);
  const Discretization disc(sc.spec, grid);
  const double t_end = 0.3;
  SchemeConfig cfg;
  cfg.dt = cfl_aligned_time_step(grid, sc.spec, t_end);
  cfg.t_end = t_end;
  cfg.snapshot_stride = default_snapshot_stride(step_count(cfg.dt, t_end));
  const TimeSeries series = run_simulation(initial_state(sc.profile, grid), cfg, disc);
  double deviation = 0.0;
  for (const Snapshot& s : series.snapshots)
    for (double v : s.state.xi2.values) deviation = std::max(deviation, std::abs(v - 0.2));
  const std::size_t samples = uphill_mask(series).count();
  return {deviation > 0.01 && samples > 10,
          "max |xi2 - 0.2| = " + fmt(deviation) + ", uphill samples = " +
              std::to_string(samples) + " of " +
              std::to_string(series.snapshots.size() * grid.node_count())};
}

Outcome asymptotic_behavior() {
  const Scenario sc = scenario_catalog("duncan-toor-asymptotic");
  const Grid1D grid = build_grid(140);
  const Discretization disc(sc.spec, grid);
  SchemeConfig cfg;
  cfg.dt = cfl_aligned_time_step(grid, sc.spec, sc.t_end);
  cfg.t_end = sc.t_end;
  cfg.snapshot_stride = default_snapshot_stride(step_count(cfg.dt, sc.t_end));
  const MixtureState init = initial_state(sc.profile, grid);
  const TimeSeries series = run_simulation(init, cfg, disc);
  const auto& xi1 = series.snapshots.back().state.xi1.values;
  const auto [lo, hi] = std::minmax_element(xi1.begin(), xi1.end());
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const double range = *hi - *lo;
  const double shift = std::abs(mean(xi1) - mean(init.xi1.values));
  return {range < 0.25 * 0.8 && shift < 2e-3,
          "xi1 range at t=1 = " + fmt(range) + " (limit 0.2), mean shift = " + fmt(shift)};
}

Outcome self_convergence(const std::vector<ConvergenceReport>& reports) {
  bool pass = true;
  std::string detail;
  for (const ConvergenceReport& rep : reports) {
    std::vector<double> e;
    for (int i = 0; i < 3; ++i) {
      const auto& row = rep.rows[static_cast<std::size_t>(i)];
      e.push_back(row.l1_error.value_or(std::nan("")));
    }
    const double r1 = e[0] / e[1], r2 = e[1] / e[2];
    pass = pass && e[0] > e[1] && e[1] > e[2] && r1 >= 1.5 && r2 >= 1.5;
    detail += rep.scenario + ": " + fmt(e[0]) + " > " + fmt(e[1]) + " > " + fmt(e[2]) +
              " ratios " + fmt(r1) + ", " + fmt(r2);
    if (&rep != &reports.back()) detail += "; ";
  }
  return {pass, detail};
}

Outcome large_step_richardson(const ConvergenceReport& uphill) {
  const ConvergenceRow& global = uphill.rows[0];
  const ConvergenceRow& rich = uphill.rows[3];
  const double threshold = 3.0 * global.l1_error.value_or(std::nan(""));
  if (!rich.l1_error)
    return {false, "dt=0.01 K=800 run failed: " + rich.failure +
                       " (threshold was " + fmt(threshold) + ")"};
  const bool bounded = rich.min_fraction >= -1e-6 && rich.max_fraction <= 1.0 + 1e-6;
  return {bounded && *rich.l1_error <= threshold,
          "L1 = " + fmt(*rich.l1_error) + " vs threshold " + fmt(threshold) +
              ", fractions in [" + fmt(rich.min_fraction) + ", " +
              fmt(rich.max_fraction) + "]"};
}

Outcome metric_and_round_trip() {
  std::mt19937_64 rng(7);
  const Grid1D grid = build_grid(64);
  auto as_series = [&](const MixtureState& s) {
    TimeSeries ts{grid};
    ts.snapshots.push_back({0.0, s, {}});
    return ts;
  };
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const TimeSeries a = as_series(test::random_state(grid, rng));
    const TimeSeries b = as_series(test::random_state(grid, rng));
    const TimeSeries c = as_series(test::random_state(grid, rng));
    const double ab = l1_error(a, b, 0.0), ba = l1_error(b, a, 0.0);
    const double bc = l1_error(b, c, 0.0), ac = l1_error(a, c, 0.0);
    if (l1_error(a, a, 0.0) != 0.0) ++violations;
    if (!(ab > 0.0) || ab != ba) ++violations;
    if (ac > (ab + bc) * (1.0 + 1e-14)) ++violations;
  }

  const Scenario sc = scenario_catalog("uphill-semidegenerate");
  const Discretization disc(sc.spec, build_grid(40));
  SchemeConfig cfg;
  cfg.dt = cfl_aligned_time_step(disc.grid, sc.spec, 0.01);
  cfg.t_end = 0.01;
  cfg.snapshot_stride = 7;
  const TimeSeries series = run_simulation(initial_state(sc.profile, disc.grid), cfg, disc);
  std::ostringstream first;
  write_snapshot_csv(series, first);
  std::istringstream in(first.str());
  const TimeSeries back = read_snapshot_csv(in);
  bool exact = back.grid == series.grid && back.snapshots.size() == series.snapshots.size();
  for (std::size_t s = 0; exact && s < series.snapshots.size(); ++s) {
    const Snapshot& x = series.snapshots[s];
    const Snapshot& y = back.snapshots[s];
    exact = x.t == y.t && x.state.xi1.values == y.state.xi1.values &&
            x.state.xi2.values == y.state.xi2.values &&
            x.flux.n1.values == y.flux.n1.values && x.flux.n2.values == y.flux.n2.values;
  }
  std::ostringstream second;
  write_snapshot_csv(back, second);
  exact = exact && first.str() == second.str();
  return {violations == 0 && exact,
          std::to_string(violations) + " metric violations on 200 triples, round-trip " +
              (exact ? "bit-exact" : "MISMATCH")};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, double limit_seconds,
                    const std::function<Outcome()>& check) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    if (limit_seconds > 0.0 && secs >= limit_seconds) {
      o.pass = false;
      o.detail += " [over time limit " + fmt(limit_seconds) + " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  report(1, "inverse-identity", 1.0, inverse_identity);
  report(2, "conservation", 0.0, conservation);
  report(3, "scheme-equivalence", 1.0, scheme_equivalence);
  report(4, "uphill-reproduction", 0.0, uphill_reproduction);
  report(5, "asymptotic-behavior", 0.0, asymptotic_behavior);

  // Criteria 6 and 7 share the reference runs. The uphill study carries the
  // large-step Richardson row after the three global rows.
  std::vector<RunRequest> global_rows{{SchemeKind::global, 1, 0.0, 1},
                                      {SchemeKind::global, 2, 0.0, 1},
                                      {SchemeKind::global, 4, 0.0, 1}};
  std::vector<RunRequest> uphill_rows = global_rows;
  uphill_rows.push_back({SchemeKind::richardson, std::nullopt, 0.01, 800});
  std::vector<ConvergenceReport> studies;
  double study_seconds = 0.0;
  try {
    const auto t0 = Clock::now();
    studies.push_back(convergence_study(scenario_catalog("uphill-semidegenerate"), uphill_rows));
    studies.push_back(convergence_study(scenario_catalog("duncan-toor-asymptotic"), global_rows));
    study_seconds = seconds_since(t0);
  } catch (const std::exception& e) {
    std::printf("convergence study aborted: %s\n", e.what());
  }
  auto needs_studies = [&](auto fn) {
    return [&, fn]() -> Outcome {
      if (studies.size() != 2) return {false, "convergence study unavailable"};
      Outcome o = fn();
      if (study_seconds >= 60.0) {
        o.pass = false;
        o.detail += " [shared studies over time limit]";
      }
      return o;
    };
  };
  std::printf("(convergence studies took %.2f s)\n", study_seconds);
  report(6, "temporal-self-convergence", 60.0,
         needs_studies([&] { return self_convergence(studies); }));
  report(7, "large-step-richardson", 60.0,
         needs_studies([&] { return large_step_richardson(studies[0]); }));
  report(8, "metric-and-round-trip", 1.0, metric_and_round_trip);

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
