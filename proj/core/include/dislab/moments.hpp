#pragma once

#include <cstddef>

#include "dislab/params.hpp"

namespace dislab {

/// Continuum-limit state tracked by the analytical layer.
struct MomentState {
  double theta = 0.0;
  double m = 0.0;  // cross-sectional mean belief
  double v = 0.0;  // cross-sectional belief variance, >= 0
};

/// Stationary moments of the economy.
struct SteadyState {
  double v_star = 0.0;       // belief dispersion
  double v_eq = 0.0;         // dispersion with sigma_eta = 0
  double var_theta = 0.0;    // Var(theta)
  double var_m = 0.0;        // Var(m)
  double cov_m_theta = 0.0;  // Cov(m, theta)
  double var_gap = 0.0;      // Var(m - theta) = E[(m - theta)^2]
};

/// (1 - alpha) * m + alpha * theta.
double recurse_mean(double m, double theta, const ModelParams& p);

/// (1 - alpha)^2 * v + alpha^2 * sigma_nu^2 + sigma_eta^2. Throws DomainError
/// for v < 0.
double recurse_variance(double v, const ModelParams& p);

/// Advances (theta, m, v) one period given the fundamental innovation.
MomentState recurse_moments(const MomentState& s, const ModelParams& p, double eps);

/// (alpha^2 sigma_nu^2 + sigma_eta^2) / (2 alpha - alpha^2).
double steady_state_variance(const ModelParams& p);

/// steady_state_variance with sigma_eta = 0.
double equilibrium_variance(const ModelParams& p);

/// sigma_eps^2 / (1 - rho^2).
double stationary_theta_variance(const ModelParams& p);

/// Stationary covariance of (theta, m) under
///   theta' = rho theta + eps,  m' = alpha theta + (1 - alpha) m,
/// solved in closed form, together with v_star and v_eq.
SteadyState stationary_joint_moments(const ModelParams& p);

struct FixedPointResult {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Iterates recurse_variance from v0 until successive iterates differ by at
/// most `tol` or `max_iterations` is reached.
FixedPointResult iterate_variance(const ModelParams& p, double v0, double tol = 1e-12,
                                  std::size_t max_iterations = 1'000'000);

}  // namespace dislab
