#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msdiff/grid.hpp"
#include "msdiff/kernels.hpp"
#include "msdiff/scenarios.hpp"
#include "msdiff/time_series.hpp"

namespace msdiff {

struct ThirdSpecies {
  NodalField xi3;
  NodalField n3;
};

/// xi3 = 1 - xi1 - xi2, N3 = -N1 - N2 pointwise.
ThirdSpecies reconstruct_third(const MixtureState& state, const FluxField& flux);

struct MoleTotals {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

/// dx * sum_j xi_i,j for the three species.
MoleTotals total_moles(const MixtureState& state, const Grid1D& grid);

/// dx * sum_j (|xi1_a - xi1_b| + |xi2_a - xi2_b|).
double l1_distance(const MixtureState& a, const MixtureState& b,
                   const Grid1D& grid);

/// L1 distance between the snapshots of two series at time t. Throws
/// ValidationError when either series lacks a snapshot at exactly t or the
/// grids differ.
double l1_error(const TimeSeries& candidate, const TimeSeries& reference,
                double t);

inline constexpr double kUphillThreshold = 1e-12;

/// Space-time samples where species 2 is transported up its own gradient:
/// N2_j * (D- xi2)_j > threshold.
struct UphillMask {
  std::size_t snapshot_count = 0;
  std::size_t node_count = 0;
  std::vector<double> times;
  std::vector<bool> cells;  // snapshot-major

  bool at(std::size_t snapshot, std::size_t node) const {
    return cells[snapshot * node_count + node];
  }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
};

UphillMask uphill_mask(const TimeSeries& series,
                       double threshold = kUphillThreshold);

/// One convergence-study row. The step is dt_cfl / dt_divisor when
/// dt_divisor is set, else the absolute `dt`.
struct RunRequest {
  SchemeKind kind = SchemeKind::global;
  std::optional<int> dt_divisor = 1;
  double dt = 0.0;
  int k_iters = 1;
};

struct ConvergenceRow {
  SchemeKind kind = SchemeKind::global;
  double dt = 0.0;
  int k_iters = 1;
  std::optional<double> l1_error;  // empty when the run failed
  double seconds = 0.0;
  std::string failure;
  // Extremes over every node of xi1, xi2, xi3 at every snapshot.
  double min_fraction = 0.0;
  double max_fraction = 0.0;
};

struct ConvergenceReport {
  std::string scenario;
  int j_max = 0;
  double t_compare = 0.0;
  double dt_cfl = 0.0;
  double reference_dt = 0.0;
  std::vector<ConvergenceRow> rows;
};

struct ConvergenceOptions {
  int j_max = 140;
  int reference_divisor = 8;
  FluxBoundary boundary = FluxBoundary::outer_faces;
  bool parallel_rows = true;
};

/// Reference: global scheme at dt_cfl / reference_divisor, where dt_cfl is
/// the CFL step aligned to the scenario's end time. Errors are L1 at t_end.
/// A failing row records its message and leaves l1_error empty; the other
/// rows still run. Row order in the report matches `requests`.
ConvergenceReport convergence_study(const Scenario& scenario,
                                    const std::vector<RunRequest>& requests,
                                    const ConvergenceOptions& options = {});

}  // namespace msdiff
