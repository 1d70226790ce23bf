#include "dislab/params.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <toml.hpp>

#include "dislab/errors.hpp"

namespace dislab {
namespace {

constexpr std::array<std::string_view, 6> kParamKeys = {"rho",       "sigma_eps", "alpha",
                                                        "sigma_nu",  "sigma_eta", "gamma"};

void require_finite(std::string_view name, double value) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name), std::string(name) + " must be finite");
  }
}

}  // namespace

ModelParams validate_params(const ModelParams& p) {
  require_finite("rho", p.rho);
  require_finite("sigma_eps", p.sigma_eps);
  require_finite("alpha", p.alpha);
  require_finite("sigma_nu", p.sigma_nu);
  require_finite("sigma_eta", p.sigma_eta);
  require_finite("gamma", p.gamma);

  if (!(std::abs(p.rho) < 1.0)) {
    throw DomainError("rho", "rho must satisfy |rho| < 1 for a stationary fundamental");
  }
  if (!(p.alpha > 0.0 && p.alpha < 2.0)) {
    throw DomainError("alpha",
                      "alpha must lie in the open interval (0, 2); 2*alpha - alpha^2 "
                      "vanishes at the endpoints");
  }
  if (!(p.sigma_eps > 0.0)) throw DomainError("sigma_eps", "sigma_eps must be > 0");
  if (!(p.sigma_nu >= 0.0)) throw DomainError("sigma_nu", "sigma_nu must be >= 0");
  if (!(p.sigma_eta >= 0.0)) throw DomainError("sigma_eta", "sigma_eta must be >= 0");
  if (!(p.gamma > 0.0)) throw DomainError("gamma", "gamma must be > 0");
  return p;
}

ModelParams params_from_toml(std::string_view text) {
  toml::table table;
  try {
    table = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw ConfigError("", std::string("TOML parse error: ") + std::string(e.description()));
  }

  for (const auto& [key, node] : table) {
    bool known = false;
    for (auto k : kParamKeys) known = known || key.str() == k;
    if (!known) throw ConfigError(std::string(key.str()), "unknown key '" + std::string(key.str()) + "'");
  }

  auto read = [&](std::string_view key) {
    const toml::node* node = table.get(key);
    if (node == nullptr) throw ConfigError(std::string(key), "missing key '" + std::string(key) + "'");
    if (auto v = node->value<double>(); v && (node->is_floating_point() || node->is_integer())) {
      return *v;
    }
    throw ConfigError(std::string(key), "key '" + std::string(key) + "' must be a number");
  };

  ModelParams p;
  p.rho = read("rho");
  p.sigma_eps = read("sigma_eps");
  p.alpha = read("alpha");
  p.sigma_nu = read("sigma_nu");
  p.sigma_eta = read("sigma_eta");
  p.gamma = read("gamma");
  return validate_params(p);
}

std::string params_to_toml(const ModelParams& p) {
  toml::table table{{"rho", p.rho},           {"sigma_eps", p.sigma_eps},
                    {"alpha", p.alpha},       {"sigma_nu", p.sigma_nu},
                    {"sigma_eta", p.sigma_eta}, {"gamma", p.gamma}};
  std::ostringstream out;
  out << toml::toml_formatter(table, toml::format_flags::none);
  return out.str();
}

}  // namespace dislab
