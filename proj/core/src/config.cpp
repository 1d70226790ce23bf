#include "dislab/config.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <toml.hpp>

#include "dislab/errors.hpp"

namespace dislab {
namespace {

std::string qualified(std::string_view section, std::string_view key) {
  return std::string(section) + "." + std::string(key);
}

void reject_unknown(const toml::table& table, std::string_view section,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, node] : table) {
    bool known = false;
    for (auto k : allowed) known = known || key.str() == k;
    if (!known) {
      const std::string name = section.empty() ? std::string(key.str()) : qualified(section, key.str());
      throw ConfigError(name, "unknown key '" + name + "'");
    }
  }
}

const toml::table* section_table(const toml::table& root, std::string_view name) {
  const toml::node* node = root.get(name);
  if (node == nullptr) return nullptr;
  if (const toml::table* t = node->as_table()) return t;
  throw ConfigError(std::string(name), "'" + std::string(name) + "' must be a table");
}

double read_number(const toml::table& t, std::string_view section, std::string_view key,
                   double fallback, bool required = false) {
  const toml::node* node = t.get(key);
  if (node == nullptr) {
    if (required) {
      throw ConfigError(qualified(section, key), "missing key '" + qualified(section, key) + "'");
    }
    return fallback;
  }
  if (node->is_floating_point() || node->is_integer()) return *node->value<double>();
  throw ConfigError(qualified(section, key), "'" + qualified(section, key) + "' must be a number");
}

std::uint64_t read_count(const toml::table& t, std::string_view section, std::string_view key,
                         std::uint64_t fallback) {
  const toml::node* node = t.get(key);
  if (node == nullptr) return fallback;
  const auto* value = node->as_integer();
  if (value == nullptr || value->get() < 0) {
    throw ConfigError(qualified(section, key),
                      "'" + qualified(section, key) + "' must be a nonnegative integer");
  }
  return static_cast<std::uint64_t>(value->get());
}

std::string read_string(const toml::table& t, std::string_view section, std::string_view key,
                        std::string fallback) {
  const toml::node* node = t.get(key);
  if (node == nullptr) return fallback;
  if (const auto* s = node->as_string()) return s->get();
  throw ConfigError(qualified(section, key), "'" + qualified(section, key) + "' must be a string");
}

std::vector<double> read_grid(const toml::table& t, std::string_view key) {
  const toml::node* node = t.get(key);
  if (node == nullptr) return {};
  const auto* array = node->as_array();
  if (array == nullptr || array->empty()) {
    throw ConfigError(qualified("sweep", key),
                      "'" + qualified("sweep", key) + "' must be a non-empty array of numbers");
  }
  std::vector<double> grid;
  for (const auto& element : *array) {
    if (!(element.is_floating_point() || element.is_integer())) {
      throw ConfigError(qualified("sweep", key),
                        "'" + qualified("sweep", key) + "' must contain numbers only");
    }
    grid.push_back(*element.value<double>());
  }
  return grid;
}

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  toml::table root;
  try {
    root = toml::parse(text);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "TOML parse error: " << e.description() << " at line " << e.source().begin.line;
    throw ConfigError("", msg.str());
  }
  reject_unknown(root, "", {"model", "omega", "simulation", "seed", "output", "sweep"});

  RunConfig config;

  const toml::table* model = section_table(root, "model");
  if (model == nullptr) throw ConfigError("model", "missing required section [model]");
  reject_unknown(*model, "model", {"rho", "sigma_eps", "alpha", "sigma_nu", "sigma_eta", "gamma"});
  config.model.rho = read_number(*model, "model", "rho", 0.0, true);
  config.model.sigma_eps = read_number(*model, "model", "sigma_eps", 0.0, true);
  config.model.alpha = read_number(*model, "model", "alpha", 0.0, true);
  config.model.sigma_nu = read_number(*model, "model", "sigma_nu", 0.0, true);
  config.model.sigma_eta = read_number(*model, "model", "sigma_eta", 0.0, true);
  config.model.gamma = read_number(*model, "model", "gamma", 0.0, true);

  if (const toml::table* omega = section_table(root, "omega")) {
    reject_unknown(*omega, "omega", {"family", "scale", "exponent"});
    const std::string family = read_string(*omega, "omega", "family", "sqrt");
    try {
      config.omega.family = parse_omega_family(family);
    } catch (const ConfigError& e) {
      throw ConfigError("omega.family", e.what());
    }
    config.omega.scale = read_number(*omega, "omega", "scale", 1.0);
    config.omega.exponent = read_number(*omega, "omega", "exponent", 0.5);
  }

  if (const toml::table* sim = section_table(root, "simulation")) {
    reject_unknown(*sim, "simulation", {"n_agents", "horizon", "burn_in"});
    config.simulation.n_agents = read_count(*sim, "simulation", "n_agents", 10000);
    config.simulation.horizon = read_count(*sim, "simulation", "horizon", 5000);
    config.simulation.burn_in = read_count(*sim, "simulation", "burn_in", 1000);
  }

  if (const toml::table* seed = section_table(root, "seed")) {
    reject_unknown(*seed, "seed", {"master_seed"});
    config.master_seed = read_count(*seed, "seed", "master_seed", 42);
  }

  if (const toml::table* output = section_table(root, "output")) {
    reject_unknown(*output, "output", {"path", "format"});
    config.output.path = read_string(*output, "output", "path", "");
    config.output.format = read_string(*output, "output", "format", "csv");
    if (config.output.format != "csv") {
      throw ConfigError("output.format", "'output.format' must be \"csv\"");
    }
  }

  if (const toml::table* sweep = section_table(root, "sweep")) {
    reject_unknown(*sweep, "sweep",
                   {"rho", "sigma_eps", "alpha", "sigma_nu", "sigma_eta", "gamma", "replications"});
    SweepSection s;
    s.rho = read_grid(*sweep, "rho");
    s.sigma_eps = read_grid(*sweep, "sigma_eps");
    s.alpha = read_grid(*sweep, "alpha");
    s.sigma_nu = read_grid(*sweep, "sigma_nu");
    s.sigma_eta = read_grid(*sweep, "sigma_eta");
    s.gamma = read_grid(*sweep, "gamma");
    s.replications = read_count(*sweep, "sweep", "replications", 1);
    if (s.replications < 1) {
      throw ConfigError("sweep.replications", "'sweep.replications' must be >= 1");
    }
    config.sweep = std::move(s);
  }

  validate_params(config.model);
  validate_omega(config.omega);
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

SweepSpec make_sweep_spec(const RunConfig& config) {
  SweepSpec spec;
  spec.base = config.model;
  spec.omega = config.omega;
  spec.n_agents = config.simulation.n_agents;
  spec.horizon = config.simulation.horizon;
  spec.burn_in = config.simulation.burn_in;
  spec.master_seed = config.master_seed;
  if (config.sweep) {
    spec.rho = config.sweep->rho;
    spec.sigma_eps = config.sweep->sigma_eps;
    spec.alpha = config.sweep->alpha;
    spec.sigma_nu = config.sweep->sigma_nu;
    spec.sigma_eta = config.sweep->sigma_eta;
    spec.gamma = config.sweep->gamma;
    spec.replications = config.sweep->replications;
  }
  return spec;
}

}  // namespace dislab
