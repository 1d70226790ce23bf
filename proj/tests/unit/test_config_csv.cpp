#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "dislab/config.hpp"
#include "dislab/csv.hpp"
#include "dislab/errors.hpp"

using namespace dislab;

namespace {

constexpr const char* kModel = R"(
[model]
rho = 0.9
sigma_eps = 1.0
alpha = 0.5
sigma_nu = 1.0
sigma_eta = 0.5
gamma = 2
)";

std::string config_error_key(const std::string& text) {
  try {
    parse_run_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<none>";
}

}  // namespace

TEST_CASE("missing optional sections fall back to defaults") {
  const RunConfig c = parse_run_config(kModel);
  CHECK(c.model == ModelParams{0.9, 1.0, 0.5, 1.0, 0.5, 2.0});
  CHECK(c.simulation.n_agents == 10000);
  CHECK(c.simulation.horizon == 5000);
  CHECK(c.simulation.burn_in == 1000);
  CHECK(c.master_seed == 42);
  CHECK(c.output.path.empty());
  CHECK(c.output.format == "csv");
  CHECK(c.omega.family == OmegaFamily::sqrt);
  CHECK_FALSE(c.sweep.has_value());
}

TEST_CASE("all sections are read") {
  const RunConfig c = parse_run_config(std::string(kModel) + R"(
[omega]
family = "power"
scale = 2.5
exponent = 0.25
[simulation]
n_agents = 300
horizon = 40
burn_in = 10
[seed]
master_seed = 7
[output]
path = "out.csv"
[sweep]
alpha = [0.2, 0.5]
sigma_eta = [0.1, 0.2, 0.3]
replications = 2
)");
  CHECK(c.omega.family == OmegaFamily::power);
  CHECK(c.omega.scale == 2.5);
  CHECK(c.omega.exponent == 0.25);
  CHECK(c.simulation.n_agents == 300);
  CHECK(c.master_seed == 7);
  CHECK(c.output.path == "out.csv");
  REQUIRE(c.sweep.has_value());
  CHECK(c.sweep->alpha.size() == 2);
  CHECK(c.sweep->replications == 2);

  const SweepSpec spec = make_sweep_spec(c);
  CHECK(spec.n_agents == 300);
  CHECK(spec.horizon == 40);
  CHECK(spec.burn_in == 10);
  CHECK(spec.master_seed == 7);
  CHECK(spec.replications == 2);
  CHECK(sweep_cells(spec).size() == 6);
}

TEST_CASE("strict parsing names the offending key") {
  CHECK(config_error_key(std::string(kModel) + "alpah = 0.3\n") == "model.alpah");
  CHECK(config_error_key(std::string(kModel) + "[simulation]\nhorizn = 3\n") == "simulation.horizn");
  CHECK(config_error_key(std::string(kModel) + "[extra]\nx = 1\n") == "extra");
  CHECK(config_error_key("[model]\nrho = 0.9\n") == "model.sigma_eps");
  CHECK(config_error_key("[seed]\nmaster_seed = 1\n") == "model");
  CHECK(config_error_key(std::string(kModel) + "[omega]\nfamily = \"cubic\"\n") == "omega.family");
  CHECK(config_error_key(std::string(kModel) + "[simulation]\nn_agents = -4\n") ==
        "simulation.n_agents");
  CHECK(config_error_key(std::string(kModel) + "[sweep]\nalpha = []\n") == "sweep.alpha");
  CHECK(config_error_key("[model\n") == "");
}

TEST_CASE("invalid model values are domain errors naming the field") {
  std::string text = kModel;
  text.replace(text.find("alpha = 0.5"), 11, "alpha = 2.0");
  try {
    parse_run_config(text);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.field() == "alpha");
  }
}

TEST_CASE("numbers are written with 17 significant digits") {
  CHECK(csv::format_number(2.0 / 3.0) == "0.66666666666666663");
  CHECK(csv::format_number(1.0) == "1");
  CHECK(csv::format_number(0.0) == "0");
  CHECK(csv::format_number(-0.25) == "-0.25");
  CHECK(csv::format_number(1e-20) == "9.9999999999999995e-21");
  CHECK(csv::format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
  for (double x : {0.1, 1.0 / 3.0, 123456.789, -7.5e-9}) {
    CHECK(std::stod(csv::format_number(x)) == x);
  }
  CHECK(csv::format_bool(true) == "true");
  CHECK(csv::format_bool(false) == "false");
}

TEST_CASE("escape quotes only when needed") {
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv::escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("table writers emit their headers") {
  std::ostringstream ss;
  csv::write_steady_state(ss, stationary_joint_moments({0.9, 1.0, 0.5, 1.0, 0.5, 2.0}));
  CHECK(ss.str().rfind(std::string(csv::kSteadyStateHeader) + "\n0.66666666666666663,", 0) == 0);

  std::ostringstream sw;
  csv::write_sweep(sw, std::vector<SweepRow>{});
  CHECK(sw.str() == std::string(csv::kSweepHeader) + "\n");

  std::ostringstream ft;
  const std::vector<double> grid{0.0, 0.6, 1.2};
  csv::write_figure_two(ft, figure_two_curve({}, grid));
  CHECK(ft.str().rfind(std::string(csv::kFigureTwoHeader) + "\n", 0) == 0);
}
