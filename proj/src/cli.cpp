#include "msdiff/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "msdiff/diagnostics.hpp"
#include "msdiff/error.hpp"
#include "msdiff/io.hpp"
#include "msdiff/schemes.hpp"

namespace msdiff {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw ValidationError("empty list '" + text + "'");
  return items;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Sends data to `path`, or to `out` when path is "-".
template <typename Writer>
std::size_t emit(const std::string& path, std::ostream& out, Writer&& write) {
  if (path == "-") return write(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return write(file);
}

// Flags that map one-to-one onto config keys; flag values override the file.
const std::vector<std::pair<std::string, std::string>> kRunFlags = {
    {"--scenario", "scenario"},   {"--d12", "d12"},
    {"--d13", "d13"},             {"--d23", "d23"},
    {"--init", "init"},           {"--j-max", "j_max"},
    {"--scheme", "scheme"},       {"--dt", "dt"},
    {"--k-iters", "k_iters"},     {"--t-end", "t_end"},
    {"--snapshot-stride", "snapshot_stride"},
    {"--output,-o", "output"},    {"--seed", "seed"},
    {"--boundary", "boundary"},   {"--backend", "backend"},
};

struct RunArgs {
  std::string config_path;
  std::map<std::string, std::string> values;
};

int do_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = parse_config(read_file(args.config_path));
  for (const auto& [key, value] : args.values) set_config_value(cfg, key, value);
  const ResolvedRun run = resolve(cfg);

  const Discretization disc(run.scenario.spec, run.grid, cfg.boundary,
                            cfg.backend);
  err << "run: scenario=" << run.scenario.name
      << " scheme=" << to_string(run.scheme.kind)
      << " J=" << run.grid.j_max() << " dt=" << format_double(run.scheme.dt)
      << " steps=" << step_count(run.scheme.dt, run.scheme.t_end)
      << " K=" << run.scheme.k_iters << '\n';
  const TimeSeries series = run_simulation(run.initial, run.scheme, disc);
  const std::size_t bytes = emit(cfg.output, out, [&](std::ostream& sink) {
    return write_snapshot_csv(series, sink);
  });
  err << "run: wrote " << series.snapshots.size() << " snapshots (" << bytes
      << " bytes) to " << cfg.output << '\n';
  return kExitOk;
}

struct ConvergeArgs {
  std::string scenario = "uphill-semidegenerate";
  std::string schemes = "global";
  std::string dts = "cfl,cfl/2,cfl/4";
  std::string k_iters = "1";
  std::string reference = "cfl/8";
  std::string boundary = "outer-faces";
  std::string output = "-";
  int j_max = kDefaultJMax;
  bool serial_rows = false;
};

int do_converge(const ConvergeArgs& args, std::ostream& out,
                std::ostream& err) {
  const Scenario scenario = scenario_catalog(args.scenario);
  const DtPolicy reference = parse_dt_policy(args.reference);
  if (reference.kind != DtPolicy::Kind::cfl) {
    throw ValidationError("--reference must be of the form cfl/<n>");
  }
  ConvergenceOptions options;
  options.j_max = args.j_max;
  options.reference_divisor = reference.divisor;
  options.boundary = parse_flux_boundary(args.boundary);
  options.parallel_rows = !args.serial_rows;
  if (options.j_max < 2) throw ValidationError("--j-max must be >= 2");

  std::vector<int> ks;
  for (const auto& k : split_list(args.k_iters)) {
    const double value = parse_double(k);
    if (!(value >= 1.0 && value <= 1e9) || value != static_cast<int>(value)) {
      throw ValidationError("--k-iters entries must be integers >= 1, got '" +
                            k + "'");
    }
    ks.push_back(static_cast<int>(value));
  }
  std::vector<RunRequest> requests;
  for (const auto& scheme_text : split_list(args.schemes)) {
    const SchemeKind kind = parse_scheme_kind(scheme_text);
    for (const auto& dt_text : split_list(args.dts)) {
      const DtPolicy dt = parse_dt_policy(dt_text);
      RunRequest base;
      base.kind = kind;
      if (dt.kind == DtPolicy::Kind::cfl) {
        base.dt_divisor = dt.divisor;
      } else {
        base.dt_divisor.reset();
        base.dt = dt.value;
      }
      if (kind == SchemeKind::global) {
        requests.push_back(base);
        continue;
      }
      for (int k : ks) {
        base.k_iters = k;
        requests.push_back(base);
      }
    }
  }

  const ConvergenceReport report =
      convergence_study(scenario, requests, options);
  emit(args.output, out, [&](std::ostream& sink) {
    return write_convergence_csv(report, sink);
  });
  bool failed = false;
  for (const auto& row : report.rows) {
    if (!row.failure.empty()) {
      failed = true;
      err << "converge: " << to_string(row.kind)
          << " dt=" << format_double(row.dt) << " K=" << row.k_iters
          << " failed: " << row.failure << '\n';
    }
  }
  return failed ? kExitSolver : kExitOk;
}

int do_compare(const std::string& a_path, const std::string& b_path,
               const std::string& output, std::ostream& out) {
  TimeSeries a, b;
  {
    std::ifstream in(a_path);
    if (!in) throw ValidationError("cannot open '" + a_path + "'");
    a = read_snapshot_csv(in);
  }
  {
    std::ifstream in(b_path);
    if (!in) throw ValidationError("cannot open '" + b_path + "'");
    b = read_snapshot_csv(in);
  }
  std::vector<std::pair<double, double>> table;
  for (const auto& snap : a.snapshots) {
    if (b.find(snap.t) != nullptr) {
      table.emplace_back(snap.t, l1_error(a, b, snap.t));
    }
  }
  if (table.empty()) {
    throw ValidationError("the two files share no snapshot times");
  }
  emit(output, out, [&](std::ostream& sink) {
    std::size_t bytes = 0;
    const std::string header = "t,l1_error\n";
    sink << header;
    bytes += header.size();
    for (const auto& [t, e] : table) {
      const std::string line = format_double(t) + "," + format_double(e) + "\n";
      sink << line;
      bytes += line.size();
    }
    return bytes;
  });
  return kExitOk;
}

int do_scenarios(std::ostream& out) {
  out << "name,d12,d13,d23,init,t_end\n";
  for (const auto& name : scenario_names()) {
    const Scenario s = scenario_catalog(name);
    out << s.name << ',' << format_double(s.spec.d12) << ','
        << format_double(s.spec.d13) << ',' << format_double(s.spec.d23)
        << ',' << to_string(s.profile) << ',' << format_double(s.t_end)
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Ternary Maxwell-Stefan diffusion solver", "msdiff"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run one simulation and write a snapshot CSV");
  run->add_option("--config,-c", run_args.config_path,
                  "Flat key = value config file; flags override it");
  std::vector<std::string> run_values(kRunFlags.size());
  for (std::size_t i = 0; i < kRunFlags.size(); ++i) {
    run->add_option(kRunFlags[i].first, run_values[i],
                    "config key '" + kRunFlags[i].second + "'");
  }

  ConvergeArgs conv;
  auto* converge = app.add_subcommand(
      "converge", "L1 errors at t_end against a fine global-scheme reference");
  converge->add_option("--scenario", conv.scenario);
  converge->add_option("--schemes", conv.schemes, "global,richardson");
  converge->add_option("--dt", conv.dts, "Comma list of cfl/<n> or absolute steps");
  converge->add_option("--k-iters", conv.k_iters, "Comma list of Richardson K");
  converge->add_option("--reference", conv.reference, "Reference step, cfl/<n>");
  converge->add_option("--j-max", conv.j_max);
  converge->add_option("--boundary", conv.boundary, "outer-faces or end-nodes");
  converge->add_option("--output,-o", conv.output);
  converge->add_flag("--serial-rows", conv.serial_rows,
                     "Run the rows one after another");

  std::string cmp_a, cmp_b, cmp_out = "-";
  auto* compare = app.add_subcommand("compare", "L1 distance between two snapshot CSVs");
  compare->add_option("candidate", cmp_a)->required();
  compare->add_option("reference", cmp_b)->required();
  compare->add_option("--output,-o", cmp_out);

  auto* scenarios = app.add_subcommand("scenarios", "List the scenario catalog");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (run->parsed()) {
      for (std::size_t i = 0; i < kRunFlags.size(); ++i) {
        const auto flag = kRunFlags[i].first.substr(0, kRunFlags[i].first.find(','));
        if (run->count(flag) > 0) {
          run_args.values[kRunFlags[i].second] = run_values[i];
        }
      }
      return do_run(run_args, out, err);
    }
    if (converge->parsed()) return do_converge(conv, out, err);
    if (compare->parsed()) return do_compare(cmp_a, cmp_b, cmp_out, out);
    if (scenarios->parsed()) return do_scenarios(out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolver;
  }
  return kExitValidation;
}

}  // namespace msdiff
