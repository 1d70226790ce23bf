#include <doctest.h>

#include <cmath>
#include <random>

#include "dislab/errors.hpp"
#include "dislab/moments.hpp"
#include "oracles.hpp"

using namespace dislab;
using dislab::testing::iterate_dispersion;
using dislab::testing::simulate_joint;

namespace {

ModelParams random_params(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> rho(-0.98, 0.98);
  std::uniform_real_distribution<double> alpha(0.05, 1.95);
  std::uniform_real_distribution<double> sigma(0.0, 3.0);
  return {rho(gen), 0.1 + sigma(gen), alpha(gen), sigma(gen), sigma(gen), 1.0};
}

}  // namespace

TEST_CASE("recurse_mean") {
  const ModelParams p{0.9, 1.0, 0.3, 1.0, 0.5, 1.0};
  for (double c : {-4.0, 0.0, 2.5}) CHECK(recurse_mean(c, c, p) == doctest::Approx(c));
  ModelParams half = p;
  half.alpha = 0.5;
  CHECK(recurse_mean(0.0, 2.0, half) == 1.0);

  double m = 0.0;
  for (int k = 0; k < 100; ++k) m = recurse_mean(m, 3.0, p);
  CHECK(std::abs(m - 3.0) < 1e-10);
}

TEST_CASE("recurse_variance") {
  const ModelParams p{0.9, 1.0, 0.5, 1.0, 0.5, 1.0};
  CHECK(recurse_variance(0.0, p) == 0.5);
  CHECK(recurse_variance(steady_state_variance(p), p) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  const ModelParams quiet{0.9, 1.0, 0.5, 0.0, 0.0, 1.0};
  CHECK(recurse_variance(1.0, quiet) == 0.25);
  CHECK_THROWS_AS(recurse_variance(-1e-9, p), DomainError);
}

TEST_CASE("steady_state_variance against fixed-point iteration") {
  CHECK(steady_state_variance({0.9, 1.0, 1.0, 1.0, 0.0, 1.0}) == 1.0);

  const ModelParams p{0.9, 1.0, 0.5, 1.0, 0.5, 1.0};
  CHECK(std::abs(steady_state_variance(p) - iterate_dispersion(0.5, 1.0, 0.5, 0.0)) < 1e-12);
  CHECK(std::abs(steady_state_variance(p) - 2.0 / 3.0) < 1e-15);

  const ModelParams benchmark{0.9, 1.0, 0.5, 1.0, 0.0, 1.0};
  CHECK(std::abs(steady_state_variance(benchmark) - iterate_dispersion(0.5, 1.0, 0.0, 0.0)) < 1e-12);
  CHECK(std::abs(steady_state_variance(benchmark) - 1.0 / 3.0) < 1e-15);

  ModelParams bad = p;
  bad.alpha = 2.0;
  CHECK_THROWS_AS(steady_state_variance(bad), DomainError);
}

TEST_CASE("equilibrium_variance") {
  for (double alpha : {0.1, 0.5, 1.0, 1.9}) {
    CHECK(equilibrium_variance({0.5, 1.0, alpha, 0.0, 0.7, 1.0}) == 0.0);
  }
  const ModelParams p{0.9, 1.0, 0.5, 1.0, 0.8, 1.0};
  CHECK(std::abs(equilibrium_variance(p) - iterate_dispersion(0.5, 1.0, 0.0, 0.0)) < 1e-12);
  ModelParams quiet = p;
  quiet.sigma_eta = 0.0;
  CHECK(std::abs(equilibrium_variance(p) - steady_state_variance(quiet)) <= 1e-15);
}

TEST_CASE("stationary_joint_moments") {
  SUBCASE("alpha = 1, rho = 0 makes the gap theta_t - theta_{t+1}") {
    const SteadyState s = stationary_joint_moments({0.0, 1.0, 1.0, 1.0, 0.0, 1.0});
    CHECK(s.var_theta == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.var_gap == doctest::Approx(2.0).epsilon(1e-14));
    const auto mc = simulate_joint(0.0, 1.0, 1.0, 2'000'000, 11);
    CHECK(std::abs(mc.var_gap - 2.0) < 0.01 * 2.0);
  }

  SUBCASE("values frozen from scipy.linalg.solve_discrete_lyapunov") {
    struct Case {
      double rho, sigma_eps, alpha, var_theta, cov, var_m, gap;
    };
    const Case cases[] = {
        {0.9, 1.0, 0.5, 5.263157894736843, 4.306220095693781, 4.625199362041468,
         1.2759170653907503},
        {0.5, 2.0, 1.5, 5.333333333333333, 3.2, 9.6, 8.533333333333333},
        {-0.7, 0.3, 0.2, 0.1764705882352941, -0.015837104072398186, 0.005530417295123183,
         0.21367521367521367},
    };
    for (const auto& c : cases) {
      const SteadyState s = stationary_joint_moments({c.rho, c.sigma_eps, c.alpha, 1.0, 0.5, 1.0});
      CHECK(s.var_theta == doctest::Approx(c.var_theta).epsilon(1e-12));
      CHECK(s.cov_m_theta == doctest::Approx(c.cov).epsilon(1e-12));
      CHECK(s.var_m == doctest::Approx(c.var_m).epsilon(1e-12));
      CHECK(s.var_gap == doctest::Approx(c.gap).epsilon(1e-12));
    }
  }

  SUBCASE("matches a 10^7-step simulation within 1%") {
    const SteadyState s = stationary_joint_moments({0.9, 1.0, 0.5, 1.0, 0.5, 1.0});
    const auto mc = simulate_joint(0.9, 1.0, 0.5, 10'000'000, 2024);
    CHECK(std::abs(mc.var_theta - s.var_theta) < 0.01 * s.var_theta);
    CHECK(std::abs(mc.cov_m_theta - s.cov_m_theta) < 0.01 * s.cov_m_theta);
    CHECK(std::abs(mc.var_gap - s.var_gap) < 0.01 * s.var_gap);
  }

  SUBCASE("v_star and v_eq are carried along") {
    const SteadyState s = stationary_joint_moments({0.9, 1.0, 0.5, 1.0, 0.5, 1.0});
    CHECK(s.v_star == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(s.v_eq == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("properties over randomized parameters") {
  std::mt19937_64 gen(12345);
  for (int trial = 0; trial < 500; ++trial) {
    const ModelParams p = random_params(gen);
    CAPTURE(p.rho);
    CAPTURE(p.alpha);
    CAPTURE(p.sigma_nu);
    CAPTURE(p.sigma_eta);
    const double v_star = steady_state_variance(p);
    const double v_eq = equilibrium_variance(p);

    // Fixed point.
    REQUIRE(std::abs(recurse_variance(v_star, p) - v_star) <= 1e-12 * std::max(1.0, v_star));

    // Ordering of the two regimes.
    REQUIRE(v_star >= v_eq);
    REQUIRE(v_eq >= 0.0);
    if (p.sigma_eta > 0.0) REQUIRE(v_star > v_eq);

    // Affine contraction.
    const double v1 = 10.0 * std::uniform_real_distribution<double>(0, 1)(gen);
    const double v2 = 10.0 * std::uniform_real_distribution<double>(0, 1)(gen);
    const double keep2 = (1 - p.alpha) * (1 - p.alpha);
    REQUIRE(std::abs(std::abs(recurse_variance(v1, p) - recurse_variance(v2, p)) -
                     keep2 * std::abs(v1 - v2)) <= 1e-12 * std::max(1.0, v1 + v2 + v_star));

    // Stationarity equation Sigma = A Sigma A^T + Q.
    const SteadyState s = stationary_joint_moments(p);
    const double a = p.alpha, b = 1 - p.alpha;
    const double r_tt = p.rho * p.rho * s.var_theta + p.sigma_eps * p.sigma_eps - s.var_theta;
    const double r_tm = p.rho * (a * s.var_theta + b * s.cov_m_theta) - s.cov_m_theta;
    const double r_mm = a * a * s.var_theta + 2 * a * b * s.cov_m_theta + b * b * s.var_m - s.var_m;
    const double scale = std::max({1.0, s.var_theta, s.var_m});
    REQUIRE(std::abs(r_tt) <= 1e-12 * scale);
    REQUIRE(std::abs(r_tm) <= 1e-12 * scale);
    REQUIRE(std::abs(r_mm) <= 1e-12 * scale);
    REQUIRE(s.var_theta == doctest::Approx(p.sigma_eps * p.sigma_eps / (1 - p.rho * p.rho)).epsilon(1e-12));
    REQUIRE(s.var_gap >= 0.0);
    REQUIRE(std::abs(s.var_gap - (s.var_m + s.var_theta - 2 * s.cov_m_theta)) <= 1e-12 * scale);
  }
}

TEST_CASE("dispersion increases strictly in both noise variances") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    ModelParams p = random_params(gen);
    p.sigma_nu = std::max(p.sigma_nu, 0.1);
    p.sigma_eta = std::max(p.sigma_eta, 0.1);
    const double h = 1e-4;
    ModelParams up_eta = p, up_nu = p;
    up_eta.sigma_eta = std::sqrt(p.sigma_eta * p.sigma_eta + h);
    up_nu.sigma_nu = std::sqrt(p.sigma_nu * p.sigma_nu + h);
    const double base = steady_state_variance(p);
    REQUIRE((steady_state_variance(up_eta) - base) / h > 0.0);
    REQUIRE((steady_state_variance(up_nu) - base) / h > 0.0);
    // Closed-form slopes: 1 / (2a - a^2) and a^2 / (2a - a^2).
    const double denom = 2 * p.alpha - p.alpha * p.alpha;
    REQUIRE((steady_state_variance(up_eta) - base) / h == doctest::Approx(1 / denom).epsilon(1e-6));
  }
}

TEST_CASE("iteration from any start converges within the contraction bound") {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> start(0.0, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    ModelParams p = random_params(gen);
    const double v0 = start(gen);
    const double keep2 = (1 - p.alpha) * (1 - p.alpha);
    const auto bound = static_cast<std::size_t>(std::ceil(std::log(1e-10 / 1e6) / std::log(keep2)));
    const FixedPointResult r = iterate_variance(p, v0, 1e-12);
    REQUIRE(r.converged);
    const double v_star = steady_state_variance(p);
    REQUIRE(std::abs(r.value - v_star) <= 1e-10 * std::max(1.0, v_star));

    // After `bound` steps the distance has shrunk below 1e-10.
    double v = v0;
    for (std::size_t k = 0; k < bound; ++k) v = recurse_variance(v, p);
    REQUIRE(std::abs(v - v_star) <= 1e-10 * std::max(1.0, v_star));
  }
}
