#pragma once

#include <span>
#include <vector>

#include "dislab/omega.hpp"
#include "dislab/params.hpp"

namespace dislab {

/// Expected output at dispersion v, split into its components.
struct WelfareReport {
  double v = 0.0;
  double misallocation_gap = 0.0;    // E[(mean action - theta)^2], stationary
  double dispersion_cost = 0.0;      // v
  double exploration_benefit = 0.0;  // gamma * Omega(v)
  double W = 0.0;                    // -v + gamma * Omega(v)
  double Y_expected = 0.0;           // -gap - v + gamma * Omega(v)
};

/// W(v) = -v + gamma * Omega(v).
double welfare_value(const OmegaSpec& spec, double gamma, double v);

/// Full decomposition at dispersion v; the gap is the stationary Var(m - theta)
/// implied by `p` and does not depend on v.
WelfareReport welfare(const OmegaSpec& spec, const ModelParams& p, double v);

/// welfare() evaluated on every point of `grid`.
std::vector<WelfareReport> welfare_curve(const OmegaSpec& spec, const ModelParams& p,
                                         std::span<const double> grid);

/// Welfare at the dispersed steady state versus the sigma_eta = 0 benchmark.
struct RegimeComparison {
  double v_star = 0.0;
  double v_eq = 0.0;
  double W_diseq = 0.0;
  double W_eq = 0.0;
  double difference = 0.0;  // W_diseq - W_eq
  bool dominates = false;   // W_diseq > W_eq
};

RegimeComparison compare_regimes(const OmegaSpec& spec, const ModelParams& p);

struct Optimum {
  double v_opt = 0.0;
  double W_opt = 0.0;
};

/// Maximises W(v) through its first-order condition gamma * Omega'(v) = 1:
/// the condition is scanned on a geometric grid over [1e-12, 1e6], the single
/// sign change is bracketed and bisected.
///
/// Throws NoInteriorOptimum when gamma * Omega'(0) <= 1 or W is still
/// increasing at the top of the grid, and NonConcave when the condition
/// changes sign more than once or the root is not a local maximum.
Optimum optimal_dispersion(const OmegaSpec& spec, double gamma);

/// sigma_eta that makes steady_state_variance equal v_target:
///   sqrt(v_target * (2 alpha - alpha^2) - alpha^2 sigma_nu^2).
/// Throws Infeasible when v_target is below equilibrium_variance(p).
double implied_noise(double v_target, const ModelParams& p);

/// Stylised quadratic trade-off: benefit(x) = slope * x,
/// cost(x) = -coefficient * x^2, net = benefit + cost.
struct FigureTwoSpec {
  double benefit_slope = 0.6;
  double cost_coefficient = 0.5;
};

struct FigureTwoRow {
  double x = 0.0;
  double benefit = 0.0;
  double cost = 0.0;
  double net = 0.0;
};

struct FigureTwoCurve {
  std::vector<FigureTwoRow> rows;
  double argmax = 0.0;   // slope / (2 * coefficient)
  double max_net = 0.0;  // net(argmax)
};

/// Evaluates the trade-off on `grid` (values must lie in [0, 2]) and the
/// continuous maximiser of net.
FigureTwoCurve figure_two_curve(const FigureTwoSpec& spec, std::span<const double> grid);

/// `points` evenly spaced values from lo to hi inclusive (points >= 2).
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

}  // namespace dislab
