#include "dislab/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "dislab/errors.hpp"

namespace dislab {
namespace {

constexpr std::size_t kChunk = 4096;

// Updates agents [first, last) for the current period. Scratch buffers are
// local so chunks can run on any thread.
void update_agents(PanelState& state, const ModelParams& p, std::size_t first,
                   std::size_t last) {
  const bool draw_nu = p.sigma_nu != 0.0;
  const bool draw_eta = p.sigma_eta != 0.0;
  const double keep = 1.0 - p.alpha;
  const double pull = p.alpha * state.theta;
  const double signal_scale = p.alpha * p.sigma_nu;

  if (!draw_nu && !draw_eta) {
    for (std::size_t i = first; i < last; ++i) state.beliefs[i] = keep * state.beliefs[i] + pull;
    return;
  }

  std::array<double, kChunk> nu{};
  std::array<double, kChunk> eta{};
  for (std::size_t begin = first; begin < last; begin += kChunk) {
    const std::size_t count = std::min(kChunk, last - begin);
    std::span<double> nu_out = draw_nu ? std::span<double>(nu.data(), count) : std::span<double>{};
    std::span<double> eta_out =
        draw_eta ? std::span<double>(eta.data(), count) : std::span<double>{};
    rng::standard_normals(state.idiosyncratic_key, rng::Domain::agent, begin, state.time, nu_out,
                          eta_out);
    double* b = state.beliefs.data() + begin;
    for (std::size_t k = 0; k < count; ++k) {
      double next = keep * b[k] + pull;
      if (draw_nu) next += signal_scale * nu[k];
      if (draw_eta) next += p.sigma_eta * eta[k];
      b[k] = next;
    }
  }
}

}  // namespace

double step_fundamental(double theta, const ModelParams& p, rng::Key key, std::uint64_t period) {
  const double eps =
      p.sigma_eps == 0.0
          ? 0.0
          : p.sigma_eps * rng::standard_normal(key, rng::Domain::fundamental, 0, period);
  return advance_fundamental(theta, p.rho, eps);
}

PanelState make_panel(std::size_t n_agents, const InitSpec& init, const PanelSeeds& seeds) {
  if (!(init.belief_var >= 0.0)) throw DomainError("belief_var", "initial belief variance must be >= 0");
  PanelState state;
  state.fundamental_key = rng::derive_key(seeds.fundamental);
  state.idiosyncratic_key = rng::derive_key(seeds.idiosyncratic);
  state.theta = init.theta0;
  state.time = 0;
  state.beliefs.assign(n_agents, init.belief_mean);
  if (init.belief_var > 0.0) {
    std::vector<double> z(n_agents);
    rng::standard_normals(state.idiosyncratic_key, rng::Domain::initial, 0, 0, z, {});
    const double sd = std::sqrt(init.belief_var);
    for (std::size_t i = 0; i < n_agents; ++i) state.beliefs[i] += sd * z[i];
  }
  return state;
}

void advance_panel(PanelState& state, const ModelParams& p, unsigned workers) {
  const std::size_t n = state.beliefs.size();
  workers = std::max(1u, workers);
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  if (workers == 1 || chunks < 2) {
    update_agents(state, p, 0, n);
  } else {
    // Contiguous whole-chunk ranges; draws are addressed per agent so the
    // split only affects scheduling.
    const std::size_t used = std::min<std::size_t>(workers, chunks);
    const std::size_t per = (chunks + used - 1) / used;
    std::vector<std::jthread> pool;
    pool.reserve(used);
    for (std::size_t w = 0; w < used; ++w) {
      const std::size_t first = std::min(n, w * per * kChunk);
      const std::size_t last = std::min(n, (w + 1) * per * kChunk);
      if (first >= last) break;
      pool.emplace_back([&state, &p, first, last] { update_agents(state, p, first, last); });
    }
  }
  state.theta = step_fundamental(state.theta, p, state.fundamental_key, state.time);
  ++state.time;
}

PanelState step_panel(PanelState state, const ModelParams& p) {
  advance_panel(state, p, 1);
  return state;
}

PanelSnapshot snapshot(const PanelState& state) {
  PanelSnapshot snap;
  snap.time = state.time;
  snap.theta = state.theta;
  const std::size_t n = state.beliefs.size();
  if (n == 0) return snap;

  double sum = 0.0;
  for (double b : state.beliefs) sum += b;
  const double mean = sum / static_cast<double>(n);

  double sq_mean = 0.0;
  double sq_theta = 0.0;
  for (double b : state.beliefs) {
    const double dm = b - mean;
    const double dt = b - state.theta;
    sq_mean += dm * dm;
    sq_theta += dt * dt;
  }
  snap.mean_belief = mean;
  snap.var_belief = sq_mean / static_cast<double>(n);
  snap.mean_payoff = -sq_theta / static_cast<double>(n);
  return snap;
}

void run_panel(const ModelParams& p, const RunSpec& spec, const PanelSeeds& seeds,
               const SnapshotSink& sink) {
  validate_params(p);
  if (spec.n_agents < 2) throw ConfigError("n_agents", "n_agents must be >= 2");
  if (spec.horizon <= spec.burn_in) {
    throw ConfigError("horizon", "horizon must exceed burn_in so that output is non-empty");
  }
  if (spec.horizon > rng::kMaxPeriod) throw ConfigError("horizon", "horizon too large");

  PanelState state = make_panel(spec.n_agents, spec.init, seeds);
  for (std::uint64_t t = 0; t < spec.horizon; ++t) {
    if (t >= spec.burn_in) sink(snapshot(state));
    advance_panel(state, p, spec.workers);
  }
}

std::vector<PanelSnapshot> run_panel(const ModelParams& p, const RunSpec& spec,
                                     const SeedSpec& seed) {
  std::vector<PanelSnapshot> out;
  if (spec.horizon > spec.burn_in) out.reserve(spec.horizon - spec.burn_in);
  run_panel(p, spec, PanelSeeds::from(seed), [&out](const PanelSnapshot& s) { out.push_back(s); });
  return out;
}

PanelAverages time_average(std::span<const PanelSnapshot> snapshots) {
  PanelAverages avg;
  avg.periods = snapshots.size();
  if (snapshots.empty()) return avg;
  for (const auto& s : snapshots) {
    avg.var_belief += s.var_belief;
    avg.mean_sq_deviation -= s.mean_payoff;
  }
  avg.var_belief /= static_cast<double>(snapshots.size());
  avg.mean_sq_deviation /= static_cast<double>(snapshots.size());
  return avg;
}

}  // namespace dislab
