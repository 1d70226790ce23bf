#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dislab/params.hpp"
#include "dislab/rng.hpp"

namespace dislab {

/// Random streams driving a panel. The fundamental and the idiosyncratic
/// shocks have separate seeds so two panels can share one fundamental path
/// while drawing independent agent noise.
struct PanelSeeds {
  SeedSpec fundamental;
  SeedSpec idiosyncratic;

  static PanelSeeds from(const SeedSpec& seed) { return {seed, seed}; }

  friend bool operator==(const PanelSeeds&, const PanelSeeds&) = default;
};

/// Finite population of agents. Actions equal beliefs, so only beliefs are
/// stored.
struct PanelState {
  std::vector<double> beliefs;
  double theta = 0.0;
  std::uint64_t time = 0;
  rng::Key fundamental_key = 0;
  rng::Key idiosyncratic_key = 0;

  std::size_t n_agents() const noexcept { return beliefs.size(); }
};

/// Cross-sectional summary of a panel at one period.
struct PanelSnapshot {
  std::uint64_t time = 0;
  double theta = 0.0;
  double mean_belief = 0.0;
  double var_belief = 0.0;   // population variance (divide by N)
  double mean_payoff = 0.0;  // -(1/N) sum (belief - theta)^2

  friend bool operator==(const PanelSnapshot&, const PanelSnapshot&) = default;
};

/// Initial beliefs ~ N(belief_mean, belief_var) iid across agents; the
/// fundamental starts at theta0.
struct InitSpec {
  double belief_mean = 0.0;
  double belief_var = 0.0;
  double theta0 = 0.0;
};

/// rho * theta + eps.
inline double advance_fundamental(double theta, double rho, double eps) noexcept {
  return rho * theta + eps;
}

/// One step of the fundamental using the innovation addressed by `period` on
/// `key`. Does not validate `p`, so degenerate test settings such as
/// sigma_eps = 0 are accepted.
double step_fundamental(double theta, const ModelParams& p, rng::Key key, std::uint64_t period);

/// Builds the period-0 panel: beliefs drawn per `init`, theta = init.theta0.
PanelState make_panel(std::size_t n_agents, const InitSpec& init, const PanelSeeds& seeds);

/// Advances the panel one period in place. Within period t every agent
/// observes s = theta_t + nu and sets
///   belief <- (1 - alpha) * belief + alpha * s + eta,
/// then the fundamental moves to rho * theta_t + eps. `workers` > 1 splits
/// agents into contiguous chunks; the result does not depend on it.
/// Does not validate `p`.
void advance_panel(PanelState& state, const ModelParams& p, unsigned workers = 1);

/// Value-semantics wrapper around advance_panel.
PanelState step_panel(PanelState state, const ModelParams& p);

PanelSnapshot snapshot(const PanelState& state);

/// Called once per recorded period.
using SnapshotSink = std::function<void(const PanelSnapshot&)>;

struct RunSpec {
  std::size_t n_agents = 10000;
  std::uint64_t horizon = 5000;
  std::uint64_t burn_in = 1000;
  InitSpec init{};
  unsigned workers = 1;
};

/// Simulates periods 0 .. horizon-1 and reports snapshots for
/// t >= burn_in (taken before that period's update). Validates `p`; throws
/// ConfigError unless horizon > burn_in and n_agents >= 2.
void run_panel(const ModelParams& p, const RunSpec& spec, const PanelSeeds& seeds,
               const SnapshotSink& sink);

/// Collecting overload.
std::vector<PanelSnapshot> run_panel(const ModelParams& p, const RunSpec& spec,
                                     const SeedSpec& seed);

/// Time averages over a snapshot sequence.
struct PanelAverages {
  std::size_t periods = 0;
  double var_belief = 0.0;
  double mean_sq_deviation = 0.0;  // average of -mean_payoff
};

PanelAverages time_average(std::span<const PanelSnapshot> snapshots);

}  // namespace dislab
