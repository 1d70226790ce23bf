#include "dislab/omega.hpp"

#include <cmath>
#include <limits>

#include "dislab/errors.hpp"

namespace dislab {
namespace {

void require_nonnegative(double v) {
  if (!(v >= 0.0)) throw DomainError("v", "Omega is defined for v >= 0 only");
}

}  // namespace

OmegaSpec validate_omega(const OmegaSpec& spec) {
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw DomainError("scale", "omega scale must be finite and > 0");
  }
  if (spec.family == OmegaFamily::power &&
      !(spec.exponent > 0.0 && spec.exponent <= 1.0)) {
    throw DomainError("exponent", "power omega exponent must lie in (0, 1]");
  }
  return spec;
}

double omega_value(const OmegaSpec& spec, double v) {
  require_nonnegative(v);
  switch (spec.family) {
    case OmegaFamily::linear:
      return spec.scale * v;
    case OmegaFamily::sqrt:
      return spec.scale * std::sqrt(v);
    case OmegaFamily::log1p:
      return spec.scale * std::log1p(v);
    case OmegaFamily::power:
      return v == 0.0 ? 0.0 : spec.scale * std::pow(v, spec.exponent);
  }
  return 0.0;
}

double omega_derivative(const OmegaSpec& spec, double v) {
  require_nonnegative(v);
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (spec.family) {
    case OmegaFamily::linear:
      return spec.scale;
    case OmegaFamily::sqrt:
      return v == 0.0 ? inf : spec.scale / (2.0 * std::sqrt(v));
    case OmegaFamily::log1p:
      return spec.scale / (1.0 + v);
    case OmegaFamily::power:
      if (spec.exponent == 1.0) return spec.scale;
      return v == 0.0 ? inf : spec.scale * spec.exponent * std::pow(v, spec.exponent - 1.0);
  }
  return 0.0;
}

std::string_view to_string(OmegaFamily family) {
  switch (family) {
    case OmegaFamily::linear: return "linear";
    case OmegaFamily::sqrt: return "sqrt";
    case OmegaFamily::log1p: return "log1p";
    case OmegaFamily::power: return "power";
  }
  return "unknown";
}

OmegaFamily parse_omega_family(std::string_view name) {
  if (name == "linear") return OmegaFamily::linear;
  if (name == "sqrt") return OmegaFamily::sqrt;
  if (name == "log1p") return OmegaFamily::log1p;
  if (name == "power") return OmegaFamily::power;
  throw ConfigError("family", "unknown omega family '" + std::string(name) +
                                  "' (expected linear, sqrt, log1p or power)");
}

}  // namespace dislab
