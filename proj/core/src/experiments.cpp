#include "dislab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "dislab/errors.hpp"
#include "dislab/moments.hpp"

namespace dislab {
namespace {

std::string describe(const InitSpec& init) {
  std::ostringstream out;
  out.precision(6);
  out << "beliefs~N(" << init.belief_mean << ", " << init.belief_var << "), theta0=" << init.theta0;
  return out.str();
}

// Running mean over the last `window` values pushed.
class TrailingMean {
 public:
  explicit TrailingMean(std::size_t window) : window_(std::max<std::size_t>(1, window)) {}

  void push(double x) {
    values_.push_back(x);
    sum_ += x;
    if (values_.size() > window_) {
      sum_ -= values_.front();
      values_.pop_front();
    }
  }
  bool full() const { return values_.size() == window_; }
  double mean() const { return sum_ / static_cast<double>(values_.size()); }

 private:
  std::size_t window_;
  std::deque<double> values_;
  double sum_ = 0.0;
};

}  // namespace

double fitted_decay_factor(const std::vector<double>& values, double floor) {
  // Use the strictly decreasing prefix above `floor`.
  std::size_t n = 0;
  while (n < values.size() && values[n] > floor && (n == 0 || values[n] < values[n - 1])) ++n;
  if (n < 3) return std::numeric_limits<double>::quiet_NaN();

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(k);
    const double y = std::log(values[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  return std::exp(slope);
}

ErgodicityReport test_ergodicity(const ModelParams& p, const ErgodicityOptions& options) {
  validate_params(p);
  if (options.n_agents < 2) throw ConfigError("n_agents", "n_agents must be >= 2");
  if (options.horizon == 0) throw ConfigError("horizon", "horizon must be > 0");
  if (!(options.tol > 0.0)) throw ConfigError("tol", "tolerance must be > 0");

  const double v_star = steady_state_variance(p);
  InitSpec a;
  InitSpec b;
  if (v_star > 0.0) {
    a.belief_mean = 10.0 * std::sqrt(v_star);
    b.belief_mean = -a.belief_mean;
  } else {
    a.belief_mean = 10.0;
    b.belief_mean = -10.0;
    a.belief_var = b.belief_var = 1.0;
  }
  if (options.init_a) a = *options.init_a;
  if (options.init_b) b = *options.init_b;

  const PanelSeeds seeds_a = PanelSeeds::from(options.seed);
  PanelSeeds seeds_b = seeds_a;
  seeds_b.idiosyncratic.stream_id ^= std::uint64_t{1} << 63;

  PanelState run_a = make_panel(options.n_agents, a, seeds_a);
  PanelState run_b = make_panel(options.n_agents, b, seeds_b);

  ErgodicityReport report;
  report.init_a = describe(a);
  report.init_b = describe(b);
  report.var_path_a.reserve(options.horizon);

  TrailingMean mean_a(options.window), mean_b(options.window);
  TrailingMean var_a(options.window), var_b(options.window);
  std::vector<double> distance(options.horizon, std::numeric_limits<double>::infinity());
  const std::uint64_t half = options.horizon / 2;
  double tail_var_a = 0.0;
  double tail_var_b = 0.0;

  for (std::uint64_t t = 0; t < options.horizon; ++t) {
    const PanelSnapshot sa = snapshot(run_a);
    const PanelSnapshot sb = snapshot(run_b);
    report.var_path_a.push_back(sa.var_belief);
    mean_a.push(sa.mean_belief);
    mean_b.push(sb.mean_belief);
    var_a.push(sa.var_belief);
    var_b.push(sb.var_belief);
    if (mean_a.full()) {
      distance[t] = std::max(std::abs(mean_a.mean() - mean_b.mean()),
                             std::abs(var_a.mean() - var_b.mean()));
    }
    if (t >= half) {
      tail_var_a += sa.var_belief;
      tail_var_b += sb.var_belief;
    }
    advance_panel(run_a, p, options.workers);
    advance_panel(run_b, p, options.workers);
  }

  const auto tail_periods = static_cast<double>(options.horizon - half);
  report.long_run_var_a = tail_var_a / tail_periods;
  report.long_run_var_b = tail_var_b / tail_periods;
  report.distance = distance.back();
  report.converged = report.distance < options.tol;

  std::uint64_t first_ok = options.horizon;
  while (first_ok > 0 && distance[first_ok - 1] < options.tol) --first_ok;
  report.periods_to_tolerance = first_ok;

  const double floor = report.var_path_a.empty() ? 0.0 : 1e-12 * report.var_path_a.front();
  report.fitted_variance_decay = fitted_decay_factor(report.var_path_a, floor);

  if (!report.converged) {
    std::ostringstream msg;
    msg << "moment distance " << report.distance << " still above tolerance " << options.tol
        << " after " << options.horizon << " periods";
    throw NotConverged(msg.str(), std::move(report));
  }
  return report;
}

Proposition2Table test_proposition2(const OmegaSpec& spec, const ModelParams& base,
                                    const std::vector<double>& sigma_eta_grid) {
  validate_params(base);
  Proposition2Table table;
  table.rows.reserve(sigma_eta_grid.size());
  for (double sigma_eta : sigma_eta_grid) {
    ModelParams p = base;
    p.sigma_eta = sigma_eta;
    const RegimeComparison c = compare_regimes(spec, p);
    table.rows.push_back(
        {sigma_eta, c.v_star, c.v_eq, c.W_diseq, c.W_eq, c.difference, c.dominates});
    table.any_dominates = table.any_dominates || c.dominates;
  }
  return table;
}

std::vector<ModelParams> sweep_cells(const SweepSpec& spec) {
  auto axis = [](const std::vector<double>& grid, double base) {
    return grid.empty() ? std::vector<double>{base} : grid;
  };
  const auto rho = axis(spec.rho, spec.base.rho);
  const auto sigma_eps = axis(spec.sigma_eps, spec.base.sigma_eps);
  const auto alpha = axis(spec.alpha, spec.base.alpha);
  const auto sigma_nu = axis(spec.sigma_nu, spec.base.sigma_nu);
  const auto sigma_eta = axis(spec.sigma_eta, spec.base.sigma_eta);
  const auto gamma = axis(spec.gamma, spec.base.gamma);

  std::vector<ModelParams> cells;
  cells.reserve(rho.size() * sigma_eps.size() * alpha.size() * sigma_nu.size() *
                sigma_eta.size() * gamma.size());
  for (double r : rho)
    for (double se : sigma_eps)
      for (double a : alpha)
        for (double sn : sigma_nu)
          for (double sh : sigma_eta)
            for (double g : gamma) cells.push_back({r, se, a, sn, sh, g});
  return cells;
}

void validate_sweep(const SweepSpec& spec) {
  if (spec.replications < 1) throw ConfigError("replications", "replications must be >= 1");
  if (spec.n_agents < 2) throw ConfigError("n_agents", "n_agents must be >= 2");
  if (spec.horizon <= spec.burn_in) {
    throw ConfigError("horizon", "horizon must exceed burn_in");
  }
  validate_omega(spec.omega);
}

namespace {

SweepRow run_task(const SweepSpec& spec, const ModelParams& p, std::size_t cell,
                  std::size_t replication) {
  SweepRow row;
  row.params = p;
  row.cell = cell;
  row.replication = replication;
  row.stream_id = static_cast<std::uint64_t>(cell) * spec.replications + replication;
  try {
    const RegimeComparison c = compare_regimes(spec.omega, p);
    row.v_star = c.v_star;
    row.v_eq = c.v_eq;
    row.W_star = c.W_diseq;
    row.W_eq = c.W_eq;
    row.dominates = c.dominates;

    RunSpec run;
    run.n_agents = spec.n_agents;
    run.horizon = spec.horizon;
    run.burn_in = spec.burn_in;
    double sum = 0.0;
    std::uint64_t count = 0;
    run_panel(p, run, PanelSeeds::from({spec.master_seed, row.stream_id}),
              [&](const PanelSnapshot& s) {
                sum += s.var_belief;
                ++count;
              });
    row.mc_var_belief = sum / static_cast<double>(count);
    const double abs_err = std::abs(row.mc_var_belief - row.v_star);
    row.mc_rel_err = row.v_star > 0.0 ? abs_err / row.v_star : abs_err;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers,
                                const ProgressFn& progress) {
  validate_sweep(spec);
  const std::vector<ModelParams> cells = sweep_cells(spec);
  const std::size_t total = cells.size() * spec.replications;
  std::vector<SweepRow> rows(total);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      const std::size_t cell = task / spec.replications;
      rows[task] = run_task(spec, cells[cell], cell, task % spec.replications);
      const std::size_t finished = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, total);
      }
    }
  };

  const unsigned used = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));
  if (used == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) pool.emplace_back(worker);
  }
  return rows;
}

double mc_error_budget(double alpha, std::size_t n_agents, std::uint64_t periods) {
  const double phi = (1.0 - alpha) * (1.0 - alpha);
  const double t_eff = static_cast<double>(periods) * (1.0 - phi) / (1.0 + phi);
  return 5.0 * std::sqrt(2.0 / (static_cast<double>(n_agents) * t_eff));
}

}  // namespace dislab
