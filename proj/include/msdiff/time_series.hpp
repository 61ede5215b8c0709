#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "msdiff/grid.hpp"
#include "msdiff/mixture.hpp"

namespace msdiff {

enum class SchemeKind { global, richardson };

std::string_view to_string(SchemeKind kind);
/// Throws ValidationError for anything other than "global" or "richardson".
SchemeKind parse_scheme_kind(std::string_view text);

struct MixtureState {
  NodalField xi1;
  NodalField xi2;
  double t = 0.0;

  NodeComposition at(std::size_t j) const { return {xi1[j], xi2[j]}; }
};

struct FluxField {
  NodalField n1;
  NodalField n2;
};

struct Snapshot {
  double t = 0.0;
  MixtureState state;
  FluxField flux;
};

struct TimeSeries {
  Grid1D grid;
  // Unknown when the series was read back from a snapshot file.
  std::optional<MixtureSpec> spec;
  SchemeKind kind = SchemeKind::global;
  double dt = 0.0;
  int k_iters = 1;
  std::vector<Snapshot> snapshots;

  /// Exact time match; nullptr when there is no snapshot at t.
  const Snapshot* find(double t) const;
};

}  // namespace msdiff
