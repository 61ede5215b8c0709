#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "msdiff/diagnostics.hpp"
#include "msdiff/format.hpp"
#include "msdiff/kernels.hpp"
#include "msdiff/scenarios.hpp"
#include "msdiff/schemes.hpp"
#include "msdiff/time_series.hpp"

namespace msdiff {

/// "cfl", "cfl/<n>" or an absolute positive step such as "0.01".
struct DtPolicy {
  enum class Kind { cfl, absolute };
  Kind kind = Kind::cfl;
  int divisor = 1;
  double value = 0.0;

  /// The CFL variant aligns dt_cfl to t_end before dividing.
  double resolve(const Grid1D& grid, const MixtureSpec& spec,
                 double t_end) const;
  std::string to_string() const;
};

DtPolicy parse_dt_policy(std::string_view text);

inline constexpr int kDefaultJMax = 140;

struct RunConfig {
  std::string scenario = "uphill-semidegenerate";
  // Set together with `init` for scenario "custom"; when set for a named
  // scenario they override its diffusivities.
  std::optional<double> d12, d13, d23;
  std::optional<InitialProfile> init;
  int j_max = kDefaultJMax;
  SchemeKind scheme = SchemeKind::global;
  DtPolicy dt;
  int k_iters = 1;
  std::optional<double> t_end;
  std::optional<int> snapshot_stride;
  std::string output = "-";
  std::optional<unsigned long> seed;  // reserved; runs are deterministic
  FluxBoundary boundary = FluxBoundary::outer_faces;
  Backend backend = Backend::serial;
};

/// Applies one `key = value` pair. Throws ValidationError naming the key.
void set_config_value(RunConfig& cfg, std::string_view key,
                      std::string_view value);

/// Flat key-value document: one `key = value` per line, `#` comments, blank
/// lines ignored. Keys: scenario, d12, d13, d23, init, j_max, scheme, dt,
/// k_iters, t_end, snapshot_stride, output, seed, boundary, backend.
/// The result is validated (see validate(RunConfig)).
RunConfig parse_config(std::string_view text);

/// Checks cross-field constraints. Throws ValidationError.
void validate(const RunConfig& cfg);

/// A validated config turned into the objects the solver consumes.
struct ResolvedRun {
  Scenario scenario;
  Grid1D grid;
  SchemeConfig scheme;
  MixtureState initial;
};

ResolvedRun resolve(const RunConfig& cfg);

/// Header `t,x,xi1,xi2,xi3,n1,n2,n3`, then one row per (snapshot, node),
/// time-major. Numbers use 17 significant digits. Returns bytes written.
std::size_t write_snapshot_csv(const TimeSeries& series, std::ostream& out);

/// Inverse of write_snapshot_csv; the mixture parameters and scheme metadata are not
/// recoverable from the file and are left unset.
TimeSeries read_snapshot_csv(std::istream& in);

/// Header `scheme,dt,k_iters,l1_error,seconds`; failed rows write `nan`.
std::size_t write_convergence_csv(const ConvergenceReport& report,
                                  std::ostream& out);

}  // namespace msdiff
