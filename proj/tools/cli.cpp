#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "dislab/config.hpp"
#include "dislab/csv.hpp"
#include "dislab/dynamics.hpp"
#include "dislab/errors.hpp"
#include "dislab/experiments.hpp"
#include "dislab/moments.hpp"
#include "dislab/welfare.hpp"

namespace dislab::cli {
namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::string> output;
  std::optional<std::uint64_t> seed;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

struct WelfareFlags {
  double v_min = 0.0;
  double v_max = 4.0;
  std::size_t points = 101;
};

// Resolves --output over [output].path; empty means the caller's stream.
class Sink {
 public:
  Sink(const RunConfig& config, const CommonFlags& flags, std::ostream& fallback)
      : stream_(&fallback) {
    const std::string path = flags.output.value_or(config.output.path);
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("output.path", "cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

RunConfig load(const CommonFlags& flags) {
  RunConfig config = load_run_config(flags.config_path);
  if (flags.seed) config.master_seed = *flags.seed;
  return config;
}

int cmd_steady_state(const CommonFlags& flags, std::ostream& out) {
  const RunConfig config = load(flags);
  Sink sink(config, flags, out);
  csv::write_steady_state(sink.stream(), stationary_joint_moments(config.model));
  return kExitOk;
}

int cmd_simulate(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const RunConfig config = load(flags);
  RunSpec run;
  run.n_agents = config.simulation.n_agents;
  run.horizon = config.simulation.horizon;
  run.burn_in = config.simulation.burn_in;
  run.workers = flags.workers;
  if (run.horizon <= run.burn_in) {
    throw ConfigError("simulation.horizon", "'simulation.horizon' must exceed 'simulation.burn_in'");
  }
  if (run.n_agents < 2) throw ConfigError("simulation.n_agents", "'simulation.n_agents' must be >= 2");
  err << "master_seed=" << config.master_seed << '\n';

  Sink sink(config, flags, out);
  std::ostream& os = sink.stream();
  os << csv::kSnapshotHeader << '\n';
  double var_sum = 0.0;
  std::uint64_t periods = 0;
  run_panel(config.model, run, PanelSeeds::from({config.master_seed, 0}),
            [&](const PanelSnapshot& s) {
              csv::write_snapshot_row(os, s);
              var_sum += s.var_belief;
              ++periods;
            });

  const double mean_var = var_sum / static_cast<double>(periods);
  const double v_star = steady_state_variance(config.model);
  const double deviation = v_star > 0.0 ? (mean_var - v_star) / v_star : mean_var - v_star;
  err << "summary: periods=" << periods << " mean_var_belief=" << csv::format_number(mean_var)
      << " v_star=" << csv::format_number(v_star)
      << " rel_deviation=" << csv::format_number(deviation) << '\n';
  return kExitOk;
}

int cmd_welfare(const CommonFlags& flags, const WelfareFlags& range, std::ostream& out,
                std::ostream& err) {
  const RunConfig config = load(flags);
  if (!(range.v_min >= 0.0 && range.v_min < range.v_max) || !std::isfinite(range.v_max)) {
    throw ConfigError("v-min", "welfare range requires 0 <= v-min < v-max");
  }
  if (range.points < 2) throw ConfigError("points", "--points must be >= 2");

  const std::vector<double> grid = uniform_grid(range.v_min, range.v_max, range.points);
  const auto rows = welfare_curve(config.omega, config.model, grid);
  std::optional<Optimum> optimum;
  try {
    optimum = optimal_dispersion(config.omega, config.model.gamma);
  } catch (const NoInteriorOptimum& e) {
    err << "warning: no interior optimum (" << e.what() << ")\n";
  } catch (const NonConcave& e) {
    err << "warning: no interior optimum (" << e.what() << ")\n";
  }

  Sink sink(config, flags, out);
  csv::write_welfare(sink.stream(), rows);
  if (optimum) {
    sink.stream() << "# v_opt=" << csv::format_number(optimum->v_opt)
                  << ",W_opt=" << csv::format_number(optimum->W_opt) << '\n';
  }
  return kExitOk;
}

int cmd_optimize(const CommonFlags& flags, std::ostream& out) {
  const RunConfig config = load(flags);
  const Optimum optimum = optimal_dispersion(config.omega, config.model.gamma);
  const double sigma_eta_star = implied_noise(optimum.v_opt, config.model);
  Sink sink(config, flags, out);
  sink.stream() << csv::kOptimumHeader << '\n'
                << csv::format_number(optimum.v_opt) << ',' << csv::format_number(optimum.W_opt)
                << ',' << csv::format_number(sigma_eta_star) << '\n';
  return kExitOk;
}

int cmd_compare(const CommonFlags& flags, const std::string& grid_text, std::ostream& out,
                std::ostream& err) {
  const RunConfig config = load(flags);
  const std::vector<double> grid = parse_grid(grid_text);
  const Proposition2Table table = test_proposition2(config.omega, config.model, grid);
  Sink sink(config, flags, out);
  csv::write_proposition2(sink.stream(), table);
  err << "any_dominates=" << csv::format_bool(table.any_dominates) << '\n';
  return kExitOk;
}

int cmd_sweep(const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const RunConfig config = load(flags);
  if (!config.sweep) throw ConfigError("sweep", "missing required section [sweep]");
  const SweepSpec spec = make_sweep_spec(config);
  validate_sweep(spec);
  err << "master_seed=" << spec.master_seed << '\n';
  const auto rows = run_sweep(spec, flags.workers, [&err](std::size_t done, std::size_t total) {
    err << "sweep: " << done << '/' << total << '\n';
  });
  Sink sink(config, flags, out);
  csv::write_sweep(sink.stream(), rows);
  return kExitOk;
}

void add_common(CLI::App& sub, CommonFlags& flags, bool randomized) {
  sub.add_option("--config", flags.config_path, "TOML run configuration")->required();
  sub.add_option("--output", flags.output, "Write CSV here instead of stdout");
  if (randomized) {
    sub.add_option("--seed", flags.seed, "Override [seed].master_seed");
    sub.add_option("--workers", flags.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string token = text.substr(start, comma - start);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(value)) {
      throw ConfigError("sigma-eta-grid", "malformed --sigma-eta-grid entry '" + token + "'");
    }
    grid.push_back(value);
    start = comma + 1;
  }
  return grid;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dislab: dispersion dynamics and welfare toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  WelfareFlags welfare_flags;
  std::string grid_text;

  auto* steady = app.add_subcommand("steady-state", "Stationary dispersion and joint moments");
  add_common(*steady, flags, false);

  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo panel trajectories (post burn-in snapshots) plus a summary line");
  add_common(*simulate, flags, true);

  auto* welfare_cmd = app.add_subcommand("welfare", "Welfare curve on a uniform dispersion grid");
  add_common(*welfare_cmd, flags, false);
  welfare_cmd->add_option("--v-min", welfare_flags.v_min, "Lower end of the grid");
  welfare_cmd->add_option("--v-max", welfare_flags.v_max, "Upper end of the grid");
  welfare_cmd->add_option("--points", welfare_flags.points, "Number of grid points");

  auto* optimize = app.add_subcommand("optimize", "Welfare-maximising dispersion and noise level");
  add_common(*optimize, flags, false);

  auto* compare = app.add_subcommand("compare", "Dispersed vs coordinated welfare over a noise grid");
  add_common(*compare, flags, false);
  compare->add_option("--sigma-eta-grid", grid_text, "Comma-separated sigma_eta values")
      ->required();

  auto* sweep = app.add_subcommand("sweep", "Analytical vs Monte Carlo parameter sweep");
  add_common(*sweep, flags, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*steady) return cmd_steady_state(flags, out);
    if (*simulate) return cmd_simulate(flags, out, err);
    if (*welfare_cmd) return cmd_welfare(flags, welfare_flags, out, err);
    if (*optimize) return cmd_optimize(flags, out);
    if (*compare) return cmd_compare(flags, grid_text, out, err);
    if (*sweep) return cmd_sweep(flags, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "invalid value for '" << e.field() << "': " << e.what() << '\n';
    return kExitConfig;
  } catch (const Infeasible& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NoInteriorOptimum& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NonConcave& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitConfig;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dislab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dislab::cli
