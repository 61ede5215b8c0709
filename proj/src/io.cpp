#include "msdiff/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "msdiff/error.hpp"

namespace msdiff {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

long parse_integer(std::string_view text) {
  long value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      text.empty()) {
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text) {
  const long v = parse_integer(text);
  if (v < -2147483647L || v > 2147483647L) {
    throw ValidationError("integer out of range: '" + std::string(text) + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

DtPolicy parse_dt_policy(std::string_view text) {
  text = trim(text);
  DtPolicy policy;
  if (text == "cfl") return policy;
  if (text.starts_with("cfl/")) {
    const int divisor = parse_int(text.substr(4));
    if (divisor < 1) {
      throw ValidationError("dt divisor must be >= 1 in '" +
                            std::string(text) + "'");
    }
    policy.divisor = divisor;
    return policy;
  }
  const double value = parse_double(text);
  if (!(std::isfinite(value) && value > 0.0)) {
    throw ValidationError("dt must be positive, got '" + std::string(text) +
                          "'");
  }
  policy.kind = DtPolicy::Kind::absolute;
  policy.value = value;
  return policy;
}

double DtPolicy::resolve(const Grid1D& grid, const MixtureSpec& spec,
                         double t_end) const {
  if (kind == Kind::absolute) return value;
  return cfl_aligned_time_step(grid, spec, t_end) / divisor;
}

std::string DtPolicy::to_string() const {
  if (kind == Kind::absolute) return format_double(value);
  return divisor == 1 ? "cfl" : "cfl/" + std::to_string(divisor);
}

void set_config_value(RunConfig& cfg, std::string_view key,
                      std::string_view value) {
  key = trim(key);
  value = trim(value);
  try {
    if (key == "scenario") {
      cfg.scenario = std::string(value);
    } else if (key == "d12") {
      cfg.d12 = parse_double(value);
    } else if (key == "d13") {
      cfg.d13 = parse_double(value);
    } else if (key == "d23") {
      cfg.d23 = parse_double(value);
    } else if (key == "init") {
      cfg.init = parse_initial_profile(value);
    } else if (key == "j_max") {
      cfg.j_max = parse_int(value);
    } else if (key == "scheme") {
      cfg.scheme = parse_scheme_kind(value);
    } else if (key == "dt") {
      cfg.dt = parse_dt_policy(value);
    } else if (key == "k_iters") {
      cfg.k_iters = parse_int(value);
    } else if (key == "t_end") {
      cfg.t_end = parse_double(value);
    } else if (key == "snapshot_stride") {
      cfg.snapshot_stride = parse_int(value);
    } else if (key == "output") {
      if (value.empty()) throw ValidationError("output path is empty");
      cfg.output = std::string(value);
    } else if (key == "seed") {
      const long seed = parse_integer(value);
      if (seed < 0) throw ValidationError("seed must be non-negative");
      cfg.seed = static_cast<unsigned long>(seed);
    } else if (key == "boundary") {
      cfg.boundary = parse_flux_boundary(value);
    } else if (key == "backend") {
      cfg.backend = parse_backend(value);
    } else {
      throw ValidationError("unknown key");
    }
  } catch (const ValidationError& e) {
    throw ValidationError("field '" + std::string(key) + "': " + e.what());
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'key = value', got '" +
                            std::string(line) + "'");
    }
    try {
      set_config_value(cfg, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " +
                            e.what());
    }
  }
  validate(cfg);
  return cfg;
}

void validate(const RunConfig& cfg) {
  if (cfg.scenario == "custom") {
    if (!cfg.d12 || !cfg.d13 || !cfg.d23 || !cfg.init) {
      throw ValidationError(
          "field 'scenario': custom scenario needs d12, d13, d23 and init");
    }
  } else {
    scenario_catalog(cfg.scenario);
  }
  const MixtureSpec probe{cfg.d12.value_or(1.0), cfg.d13.value_or(1.0),
                          cfg.d23.value_or(1.0)};
  validate(probe);
  if (cfg.j_max < 2) {
    throw ValidationError("field 'j_max': must be >= 2, got " +
                          std::to_string(cfg.j_max));
  }
  if (cfg.k_iters < 1) {
    throw ValidationError("field 'k_iters': must be >= 1, got " +
                          std::to_string(cfg.k_iters));
  }
  if (cfg.t_end && !(std::isfinite(*cfg.t_end) && *cfg.t_end > 0.0)) {
    throw ValidationError("field 't_end': must be positive, got " +
                          format_double(*cfg.t_end));
  }
  if (cfg.snapshot_stride && *cfg.snapshot_stride < 1) {
    throw ValidationError("field 'snapshot_stride': must be >= 1, got " +
                          std::to_string(*cfg.snapshot_stride));
  }
}

ResolvedRun resolve(const RunConfig& cfg) {
  validate(cfg);
  ResolvedRun run;
  if (cfg.scenario == "custom") {
    run.scenario = {"custom", {*cfg.d12, *cfg.d13, *cfg.d23}, *cfg.init, 1.0};
  } else {
    run.scenario = scenario_catalog(cfg.scenario);
    if (cfg.d12) run.scenario.spec.d12 = *cfg.d12;
    if (cfg.d13) run.scenario.spec.d13 = *cfg.d13;
    if (cfg.d23) run.scenario.spec.d23 = *cfg.d23;
    if (cfg.init) run.scenario.profile = *cfg.init;
  }
  if (cfg.t_end) run.scenario.t_end = *cfg.t_end;

  run.grid = build_grid(cfg.j_max);
  run.scheme.kind = cfg.scheme;
  run.scheme.k_iters = cfg.k_iters;
  run.scheme.t_end = run.scenario.t_end;
  run.scheme.dt = cfg.dt.resolve(run.grid, run.scenario.spec, run.scheme.t_end);
  try {
    const long steps = step_count(run.scheme.dt, run.scheme.t_end);
    run.scheme.snapshot_stride =
        cfg.snapshot_stride.value_or(default_snapshot_stride(steps));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("field 'dt': ") + e.what());
  }
  validate(run.scheme);
  run.initial = initial_state(run.scenario.profile, run.grid);
  return run;
}

namespace {

class CountingWriter {
 public:
  explicit CountingWriter(std::ostream& out) : out_(out) {}

  void write(std::string_view s) {
    out_ << s;
    bytes_ += s.size();
  }
  std::size_t finish() {
    out_.flush();
    if (!out_) throw std::runtime_error("write to output sink failed");
    return bytes_;
  }

 private:
  std::ostream& out_;
  std::size_t bytes_ = 0;
};

constexpr std::string_view kSnapshotHeader = "t,x,xi1,xi2,xi3,n1,n2,n3";
constexpr std::string_view kConvergenceHeader = "scheme,dt,k_iters,l1_error,seconds";

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::size_t write_snapshot_csv(const TimeSeries& series, std::ostream& out) {
  if (series.snapshots.empty()) {
    throw ValidationError("cannot write an empty time series");
  }
  CountingWriter w(out);
  w.write(kSnapshotHeader);
  w.write("\n");
  std::string row;
  for (const auto& snap : series.snapshots) {
    const ThirdSpecies third = reconstruct_third(snap.state, snap.flux);
    const std::string t = format_double(snap.t);
    for (std::size_t j = 0; j < series.grid.node_count(); ++j) {
      row = t;
      for (double v : {series.grid.x(j), snap.state.xi1[j], snap.state.xi2[j],
                       third.xi3[j], snap.flux.n1[j], snap.flux.n2[j],
                       third.n3[j]}) {
        row += ',';
        row += format_double(v);
      }
      row += '\n';
      w.write(row);
    }
  }
  return w.finish();
}

TimeSeries read_snapshot_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kSnapshotHeader) {
    throw ValidationError("snapshot csv: missing header '" +
                          std::string(kSnapshotHeader) + "'");
  }
  struct Row {
    double t, x, xi1, xi2, n1, n2;
  };
  std::vector<Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    const auto cells = split_commas(view);
    if (cells.size() != 8) {
      throw ValidationError("snapshot csv line " + std::to_string(line_no) +
                            ": expected 8 columns, got " +
                            std::to_string(cells.size()));
    }
    try {
      rows.push_back({parse_double(cells[0]), parse_double(cells[1]),
                      parse_double(cells[2]), parse_double(cells[3]),
                      parse_double(cells[5]), parse_double(cells[6])});
    } catch (const ValidationError& e) {
      throw ValidationError("snapshot csv line " + std::to_string(line_no) +
                            ": " + e.what());
    }
  }
  if (rows.empty()) throw ValidationError("snapshot csv has no data rows");

  std::size_t nodes = 1;
  while (nodes < rows.size() && rows[nodes].t == rows[0].t) ++nodes;
  if (nodes < 3 || rows.size() % nodes != 0) {
    throw ValidationError("snapshot csv: inconsistent node count per snapshot");
  }
  TimeSeries series;
  series.grid = build_grid(static_cast<int>(nodes - 1));
  for (std::size_t s = 0; s < rows.size() / nodes; ++s) {
    Snapshot snap;
    snap.t = rows[s * nodes].t;
    snap.state.t = snap.t;
    snap.state.xi1 = NodalField(nodes, 0.0, Quantity::mole_fraction);
    snap.state.xi2 = NodalField(nodes, 0.0, Quantity::mole_fraction);
    snap.flux.n1 = NodalField(nodes, 0.0, Quantity::flux);
    snap.flux.n2 = NodalField(nodes, 0.0, Quantity::flux);
    for (std::size_t j = 0; j < nodes; ++j) {
      const Row& r = rows[s * nodes + j];
      if (r.t != snap.t || r.x != series.grid.x(j)) {
        throw ValidationError("snapshot csv: row " + std::to_string(s * nodes + j + 2) +
                              " breaks the time-major/node-index ordering");
      }
      snap.state.xi1[j] = r.xi1;
      snap.state.xi2[j] = r.xi2;
      snap.flux.n1[j] = r.n1;
      snap.flux.n2[j] = r.n2;
    }
    if (!series.snapshots.empty() && !(snap.t > series.snapshots.back().t)) {
      throw ValidationError("snapshot csv: times are not strictly increasing");
    }
    series.snapshots.push_back(std::move(snap));
  }
  return series;
}

std::size_t write_convergence_csv(const ConvergenceReport& report,
                                  std::ostream& out) {
  CountingWriter w(out);
  w.write(kConvergenceHeader);
  w.write("\n");
  for (const auto& row : report.rows) {
    std::string line(to_string(row.kind));
    line += ',' + format_double(row.dt);
    line += ',' + std::to_string(row.k_iters);
    line += ',' + (row.l1_error ? format_double(*row.l1_error) : "nan");
    line += ',' + format_double(row.seconds);
    line += '\n';
    w.write(line);
  }
  return w.finish();
}

}  // namespace msdiff
