#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dislab/dynamics.hpp"
#include "dislab/errors.hpp"
#include "dislab/omega.hpp"
#include "dislab/params.hpp"
#include "dislab/welfare.hpp"

namespace dislab {

// ---------------------------------------------------------------------------
// Ergodicity

struct ErgodicityOptions {
  std::size_t n_agents = 100000;
  std::uint64_t horizon = 5000;
  double tol = 1e-2;
  /// Trailing window (periods) for the time-averaged moments compared
  /// between the two runs.
  std::uint64_t window = 20;
  SeedSpec seed{};
  unsigned workers = 1;
  /// Explicit starting points; when unset the runs start with every belief at
  /// +10 sqrt(v*) and -10 sqrt(v*) respectively (zero initial dispersion).
  /// When v* = 0 the offsets use 10 instead and both runs start with unit
  /// dispersion so the variance channel has something to contract.
  std::optional<InitSpec> init_a;
  std::optional<InitSpec> init_b;
};

struct ErgodicityReport {
  std::string init_a;
  std::string init_b;
  /// max(|mean_a - mean_b|, |var_a - var_b|) of trailing-window averages at
  /// the end of the horizon.
  double distance = 0.0;
  bool converged = false;
  /// First period from which the windowed distance stays below tol through
  /// the end of the horizon; equals the horizon when never reached.
  std::uint64_t periods_to_tolerance = 0;
  /// Long-run time averages of var_belief for each run (second half of the
  /// horizon).
  double long_run_var_a = 0.0;
  double long_run_var_b = 0.0;
  /// exp of the least-squares slope of log var_belief for run A while the
  /// dispersion is still decaying; NaN when it cannot be fitted.
  double fitted_variance_decay = 0.0;
  /// Per-period var_belief of run A (diagnostics and rate fits).
  std::vector<double> var_path_a;
};

class NotConverged : public Error {
 public:
  NotConverged(const std::string& what, ErgodicityReport report)
      : Error(what), report_(std::move(report)) {}
  const ErgodicityReport& report() const noexcept { return report_; }

 private:
  ErgodicityReport report_;
};

/// Runs two panels from distant initial conditions on a shared fundamental
/// path with independent idiosyncratic shocks and measures how fast their
/// moments merge. Throws NotConverged (carrying the report) if the windowed
/// distance is not below tol at the end of the horizon.
ErgodicityReport test_ergodicity(const ModelParams& p, const ErgodicityOptions& options);

/// Least-squares slope of log(values[k]) against k over the prefix where
/// values stay above `floor`, returned as the per-period factor exp(slope).
double fitted_decay_factor(const std::vector<double>& values, double floor);

// ---------------------------------------------------------------------------
// Welfare dominance over a noise grid

struct Proposition2Row {
  double sigma_eta = 0.0;
  double v_star = 0.0;
  double v_eq = 0.0;
  double W_star = 0.0;
  double W_eq = 0.0;
  double difference = 0.0;
  bool dominates = false;
};

struct Proposition2Table {
  std::vector<Proposition2Row> rows;
  bool any_dominates = false;
};

Proposition2Table test_proposition2(const OmegaSpec& spec, const ModelParams& base,
                                    const std::vector<double>& sigma_eta_grid);

// ---------------------------------------------------------------------------
// Sweeps

/// Cartesian product of per-parameter grids. An empty grid means "use the
/// base value".
struct SweepSpec {
  ModelParams base{};
  std::vector<double> rho;
  std::vector<double> sigma_eps;
  std::vector<double> alpha;
  std::vector<double> sigma_nu;
  std::vector<double> sigma_eta;
  std::vector<double> gamma;
  OmegaSpec omega{};
  std::size_t n_agents = 10000;
  std::uint64_t horizon = 5000;
  std::uint64_t burn_in = 1000;
  std::size_t replications = 1;
  std::uint64_t master_seed = 42;
};

struct SweepRow {
  ModelParams params{};
  std::size_t cell = 0;
  std::size_t replication = 0;
  std::uint64_t stream_id = 0;
  double v_star = 0.0;
  double v_eq = 0.0;
  double W_star = 0.0;
  double W_eq = 0.0;
  bool dominates = false;
  double mc_var_belief = 0.0;
  double mc_rel_err = 0.0;
  std::string error;  // empty when the cell ran

  bool ok() const noexcept { return error.empty(); }
};

/// Expands the grids into cells in a fixed order (rho outermost, gamma
/// innermost). Values are not validated here.
std::vector<ModelParams> sweep_cells(const SweepSpec& spec);

/// Throws ConfigError for structural problems (replications == 0, horizon
/// <= burn_in, n_agents < 2). Per-cell parameter problems are not errors.
void validate_sweep(const SweepSpec& spec);

/// Called after each finished task with (done, total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Every (cell, replication) pair is an independent task on stream
/// cell * replications + replication. Rows come back ordered by
/// (cell, replication) whatever `workers` is. Invalid cells yield a row with
/// `error` set instead of aborting the sweep.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 1,
                                const ProgressFn& progress = {});

/// 5 * sqrt(2 / (N * T_eff)) with T_eff = T (1 - phi) / (1 + phi),
/// phi = (1 - alpha)^2: the Monte Carlo budget for the relative error of a
/// time-averaged var_belief.
double mc_error_budget(double alpha, std::size_t n_agents, std::uint64_t periods);

}  // namespace dislab
