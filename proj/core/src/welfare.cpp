#include "dislab/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dislab/errors.hpp"
#include "dislab/moments.hpp"

namespace dislab {
namespace {

constexpr double kGridLow = 1e-12;
constexpr double kGridHigh = 1e6;
constexpr int kGridPoints = 200;
constexpr double kConfirmStep = 1e-4;

double foc(const OmegaSpec& spec, double gamma, double v) {
  return gamma * omega_derivative(spec, v) - 1.0;
}

}  // namespace

double welfare_value(const OmegaSpec& spec, double gamma, double v) {
  return -v + gamma * omega_value(spec, v);
}

WelfareReport welfare(const OmegaSpec& spec, const ModelParams& p, double v) {
  if (!(v >= 0.0)) throw DomainError("v", "dispersion must be >= 0");
  validate_omega(spec);
  WelfareReport r;
  r.v = v;
  r.misallocation_gap = stationary_joint_moments(p).var_gap;
  r.dispersion_cost = v;
  r.exploration_benefit = p.gamma * omega_value(spec, v);
  r.W = -r.dispersion_cost + r.exploration_benefit;
  r.Y_expected = -r.misallocation_gap - r.dispersion_cost + r.exploration_benefit;
  return r;
}

std::vector<WelfareReport> welfare_curve(const OmegaSpec& spec, const ModelParams& p,
                                         std::span<const double> grid) {
  std::vector<WelfareReport> out;
  out.reserve(grid.size());
  for (double v : grid) out.push_back(welfare(spec, p, v));
  return out;
}

RegimeComparison compare_regimes(const OmegaSpec& spec, const ModelParams& p) {
  validate_omega(spec);
  RegimeComparison c;
  c.v_star = steady_state_variance(p);
  c.v_eq = equilibrium_variance(p);
  c.W_diseq = welfare_value(spec, p.gamma, c.v_star);
  c.W_eq = welfare_value(spec, p.gamma, c.v_eq);
  c.difference = c.W_diseq - c.W_eq;
  c.dominates = c.W_diseq > c.W_eq;
  return c;
}

Optimum optimal_dispersion(const OmegaSpec& spec, double gamma) {
  validate_omega(spec);
  if (!(gamma > 0.0)) throw DomainError("gamma", "gamma must be > 0");

  // Interiority needs W'(0) > 0. Where Omega'(0) is infinite the check is
  // taken at the bottom of the grid instead.
  const double origin_slope = omega_derivative(spec, 0.0);
  const double probe = std::isfinite(origin_slope) ? 0.0 : kGridLow;
  if (!(foc(spec, gamma, probe) > 0.0)) {
    throw NoInteriorOptimum("no interior optimum: gamma * Omega'(0) <= 1, welfare peaks at v = 0");
  }

  const double ratio = std::pow(kGridHigh / kGridLow, 1.0 / (kGridPoints - 1));
  double prev_v = kGridLow;
  double prev_g = foc(spec, gamma, prev_v);
  double lo = 0.0;
  double hi = 0.0;
  int sign_changes = 0;
  for (int k = 1; k < kGridPoints; ++k) {
    const double v = k == kGridPoints - 1 ? kGridHigh : kGridLow * std::pow(ratio, k);
    const double g = foc(spec, gamma, v);
    if ((prev_g > 0.0) != (g > 0.0)) {
      ++sign_changes;
      if (sign_changes == 1) {
        lo = prev_v;
        hi = v;
      }
    }
    prev_v = v;
    prev_g = g;
  }
  if (sign_changes == 0) {
    throw NoInteriorOptimum("no interior optimum: welfare is still increasing at v = 1e6");
  }
  if (sign_changes > 1) {
    throw NonConcave("first-order condition changes sign " + std::to_string(sign_changes) +
                     " times on the search grid");
  }

  // foc(lo) > 0 >= foc(hi).
  for (int it = 0; it < 400 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (foc(spec, gamma, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  Optimum opt;
  opt.v_opt = 0.5 * (lo + hi);
  opt.W_opt = welfare_value(spec, gamma, opt.v_opt);

  const double left = std::max(0.0, opt.v_opt - kConfirmStep);
  if (welfare_value(spec, gamma, left) > opt.W_opt ||
      welfare_value(spec, gamma, opt.v_opt + kConfirmStep) > opt.W_opt) {
    throw NonConcave("stationary point of W is not a local maximum");
  }
  return opt;
}

double implied_noise(double v_target, const ModelParams& p) {
  validate_params(p);
  const double floor = equilibrium_variance(p);
  if (!(v_target >= floor)) {
    throw Infeasible("infeasible: optimal dispersion below signal-noise floor (target " +
                     std::to_string(v_target) + " < v_eq " + std::to_string(floor) + ")");
  }
  const double a = p.alpha;
  const double radicand = v_target * (2.0 * a - a * a) - a * a * p.sigma_nu * p.sigma_nu;
  return std::sqrt(std::max(0.0, radicand));
}

FigureTwoCurve figure_two_curve(const FigureTwoSpec& spec, std::span<const double> grid) {
  if (!(spec.cost_coefficient > 0.0)) {
    throw DomainError("cost_coefficient", "cost coefficient must be > 0");
  }
  FigureTwoCurve curve;
  curve.rows.reserve(grid.size());
  for (double x : grid) {
    if (!(x >= 0.0 && x <= 2.0)) throw DomainError("x", "trade-off grid must lie in [0, 2]");
    FigureTwoRow row;
    row.x = x;
    row.benefit = spec.benefit_slope * x;
    row.cost = -spec.cost_coefficient * x * x;
    row.net = row.benefit + row.cost;
    curve.rows.push_back(row);
  }
  curve.argmax = spec.benefit_slope / (2.0 * spec.cost_coefficient);
  curve.max_net = spec.benefit_slope * curve.argmax -
                  spec.cost_coefficient * curve.argmax * curve.argmax;
  return curve;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw ConfigError("points", "grid needs at least 2 points");
  if (!(lo < hi)) throw ConfigError("range", "grid requires lo < hi");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) grid[k] = lo + step * static_cast<double>(k);
  grid.back() = hi;
  return grid;
}

}  // namespace dislab
