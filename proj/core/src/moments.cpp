#include "dislab/moments.hpp"

#include <cmath>

#include "dislab/errors.hpp"

namespace dislab {

double recurse_mean(double m, double theta, const ModelParams& p) {
  return (1.0 - p.alpha) * m + p.alpha * theta;
}

double recurse_variance(double v, const ModelParams& p) {
  if (!(v >= 0.0)) throw DomainError("v", "belief variance must be >= 0");
  const double keep = 1.0 - p.alpha;
  return keep * keep * v + p.alpha * p.alpha * p.sigma_nu * p.sigma_nu +
         p.sigma_eta * p.sigma_eta;
}

MomentState recurse_moments(const MomentState& s, const ModelParams& p, double eps) {
  return {p.rho * s.theta + eps, recurse_mean(s.m, s.theta, p), recurse_variance(s.v, p)};
}

double steady_state_variance(const ModelParams& p) {
  validate_params(p);
  const double a = p.alpha;
  return (a * a * p.sigma_nu * p.sigma_nu + p.sigma_eta * p.sigma_eta) / (2.0 * a - a * a);
}

double equilibrium_variance(const ModelParams& p) {
  return steady_state_variance(without_behavioral_noise(p));
}

double stationary_theta_variance(const ModelParams& p) {
  validate_params(p);
  return p.sigma_eps * p.sigma_eps / (1.0 - p.rho * p.rho);
}

SteadyState stationary_joint_moments(const ModelParams& p) {
  // Sigma = A Sigma A^T + diag(sigma_eps^2, 0), A = [[rho, 0], [alpha, 1 - alpha]]:
  //   S_tt = rho^2 S_tt + sigma_eps^2
  //   S_tm = rho alpha S_tt + rho (1 - alpha) S_tm
  //   S_mm = alpha^2 S_tt + 2 alpha (1 - alpha) S_tm + (1 - alpha)^2 S_mm
  validate_params(p);
  const double a = p.alpha;
  const double keep = 1.0 - a;

  SteadyState s;
  s.v_star = steady_state_variance(p);
  s.v_eq = equilibrium_variance(p);
  s.var_theta = stationary_theta_variance(p);
  s.cov_m_theta = p.rho * a * s.var_theta / (1.0 - p.rho * keep);
  s.var_m = (a * a * s.var_theta + 2.0 * a * keep * s.cov_m_theta) / (1.0 - keep * keep);
  // The gap g = m - theta obeys g' = (1 - alpha) g + (1 - rho) theta - eps,
  // whose stationary variance has the cancellation-free form below. It
  // equals var_m + var_theta - 2 cov_m_theta.
  s.var_gap = 2.0 * p.sigma_eps * p.sigma_eps /
              ((1.0 + p.rho) * (1.0 + keep) * (1.0 - p.rho * keep));
  return s;
}

FixedPointResult iterate_variance(const ModelParams& p, double v0, double tol,
                                  std::size_t max_iterations) {
  FixedPointResult r{v0, 0, false};
  while (r.iterations < max_iterations) {
    const double next = recurse_variance(r.value, p);
    ++r.iterations;
    const double step = std::abs(next - r.value);
    r.value = next;
    if (step <= tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace dislab
