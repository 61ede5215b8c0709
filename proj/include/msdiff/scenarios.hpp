#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msdiff/grid.hpp"
#include "msdiff/mixture.hpp"
#include "msdiff/time_series.hpp"

namespace msdiff {

enum class InitialProfile { uphill, step };

std::string_view to_string(InitialProfile profile);
InitialProfile parse_initial_profile(std::string_view text);

struct Scenario {
  std::string name;
  MixtureSpec spec;
  InitialProfile profile = InitialProfile::uphill;
  double t_end = 1.0;
};

/// xi1 = 0.8 on [0, 0.25), 1.6 (0.75 - x) on [0.25, 0.75), 0 on [0.75, 1].
double uphill_profile(double x);
/// xi1 = 0.8 for x < 0.5, 0 otherwise.
double step_profile(double x);

inline constexpr double kInitialXi2 = 0.2;

MixtureState initial_uphill(const Grid1D& grid);
MixtureState initial_step(const Grid1D& grid);
MixtureState initial_state(InitialProfile profile, const Grid1D& grid);

std::vector<std::string> scenario_names();

/// "uphill-semidegenerate" or "duncan-toor-asymptotic"; anything else throws
/// ValidationError listing the valid names.
Scenario scenario_catalog(std::string_view name);

}  // namespace msdiff
