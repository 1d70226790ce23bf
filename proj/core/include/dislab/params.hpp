#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dislab {

/// Structural parameters of the economy.
///
/// The fundamental follows theta' = rho * theta + eps with eps ~ N(0, sigma_eps^2).
/// Agents see theta + nu (nu ~ N(0, sigma_nu^2)), move their belief a fraction
/// alpha of the way toward the signal and add behavioural noise
/// eta ~ N(0, sigma_eta^2). gamma weights the exploration benefit in output.
struct ModelParams {
  double rho = 0.9;
  double sigma_eps = 1.0;
  double alpha = 0.5;
  double sigma_nu = 1.0;
  double sigma_eta = 0.5;
  double gamma = 1.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Returns `p` unchanged when every invariant holds, otherwise throws
/// DomainError naming the first violated field:
///   |rho| < 1, 0 < alpha < 2, sigma_eps > 0, sigma_nu >= 0,
///   sigma_eta >= 0, gamma > 0, all finite.
ModelParams validate_params(const ModelParams& p);

/// Copy of `p` with sigma_eta set to zero (the coordinated benchmark).
inline ModelParams without_behavioral_noise(ModelParams p) {
  p.sigma_eta = 0.0;
  return p;
}

/// Parses a flat TOML table holding exactly the keys rho, sigma_eps, alpha,
/// sigma_nu, sigma_eta, gamma. Unknown or missing keys raise ConfigError.
/// The result is validated.
ModelParams params_from_toml(std::string_view text);

/// Flat TOML table with the same six keys, round-trippable through
/// params_from_toml.
std::string params_to_toml(const ModelParams& p);

/// Identifies one independent random stream inside a study.
struct SeedSpec {
  std::uint64_t master_seed = 42;
  std::uint64_t stream_id = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

}  // namespace dislab
