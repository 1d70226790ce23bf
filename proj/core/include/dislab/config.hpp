#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dislab/experiments.hpp"
#include "dislab/omega.hpp"
#include "dislab/params.hpp"

namespace dislab {

struct SimulationSection {
  std::size_t n_agents = 10000;
  std::uint64_t horizon = 5000;
  std::uint64_t burn_in = 1000;
};

struct OutputSection {
  std::string path;  // empty: stdout
  std::string format = "csv";
};

struct SweepSection {
  std::vector<double> rho;
  std::vector<double> sigma_eps;
  std::vector<double> alpha;
  std::vector<double> sigma_nu;
  std::vector<double> sigma_eta;
  std::vector<double> gamma;
  std::size_t replications = 1;
};

/// Contents of a run configuration file:
///
///   [model]       rho, sigma_eps, alpha, sigma_nu, sigma_eta, gamma (required)
///   [omega]       family = "sqrt", scale = 1.0, exponent = 0.5
///   [simulation]  n_agents = 10000, horizon = 5000, burn_in = 1000
///   [seed]        master_seed = 42
///   [output]      path = "", format = "csv"
///   [sweep]       per-parameter arrays, replications = 1
///
/// Unknown sections or keys are rejected.
struct RunConfig {
  ModelParams model{};
  OmegaSpec omega{};
  SimulationSection simulation{};
  std::uint64_t master_seed = 42;
  OutputSection output{};
  std::optional<SweepSection> sweep;
};

/// Parses and validates a configuration. ConfigError names the offending key
/// as "section.key"; invalid model values surface as DomainError.
RunConfig parse_run_config(std::string_view text);

RunConfig load_run_config(const std::filesystem::path& path);

/// Combines the model, simulation and sweep sections into a SweepSpec.
SweepSpec make_sweep_spec(const RunConfig& config);

}  // namespace dislab
