#include "msdiff/scenarios.hpp"

#include <string>

#include "msdiff/error.hpp"

namespace msdiff {

std::string_view to_string(InitialProfile profile) {
  return profile == InitialProfile::uphill ? "uphill" : "step";
}

InitialProfile parse_initial_profile(std::string_view text) {
  if (text == "uphill") return InitialProfile::uphill;
  if (text == "step") return InitialProfile::step;
  throw ValidationError("unknown initial profile '" + std::string(text) +
                        "' (valid: uphill, step)");
}

double uphill_profile(double x) {
  if (x < 0.25) return 0.8;
  if (x < 0.75) return 1.6 * (0.75 - x);
  return 0.0;
}

double step_profile(double x) { return x < 0.5 ? 0.8 : 0.0; }

namespace {

template <typename Profile>
MixtureState sample(const Grid1D& grid, Profile profile) {
  const std::size_t n = grid.node_count();
  MixtureState state{NodalField(n, 0.0), NodalField(n, kInitialXi2), 0.0};
  for (std::size_t j = 0; j < n; ++j) state.xi1[j] = profile(grid.x(j));
  return state;
}

}  // namespace

MixtureState initial_uphill(const Grid1D& grid) {
  return sample(grid, uphill_profile);
}

MixtureState initial_step(const Grid1D& grid) {
  return sample(grid, step_profile);
}

MixtureState initial_state(InitialProfile profile, const Grid1D& grid) {
  return profile == InitialProfile::uphill ? initial_uphill(grid)
                                           : initial_step(grid);
}

std::vector<std::string> scenario_names() {
  return {"uphill-semidegenerate", "duncan-toor-asymptotic"};
}

Scenario scenario_catalog(std::string_view name) {
  if (name == "uphill-semidegenerate") {
    return {std::string(name), {0.833, 0.833, 0.168}, InitialProfile::uphill,
            1.0};
  }
  if (name == "duncan-toor-asymptotic") {
    return {std::string(name), {0.0833, 0.680, 0.168}, InitialProfile::step,
            1.0};
  }
  std::string valid;
  for (const auto& n : scenario_names()) {
    valid += valid.empty() ? n : ", " + n;
  }
  throw ValidationError("unknown scenario '" + std::string(name) +
                        "' (valid: " + valid + ")");
}

}  // namespace msdiff
