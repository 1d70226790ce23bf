#pragma once

#include <string>
#include <string_view>

namespace dislab {

enum class OmegaFamily { linear, sqrt, log1p, power };

/// Exploration-benefit function Omega(v), normalised so Omega(0) = 0 and
/// nondecreasing on v >= 0.
///   linear: scale * v
///   sqrt:   scale * sqrt(v)
///   log1p:  scale * ln(1 + v)
///   power:  scale * v^exponent, exponent in (0, 1]
struct OmegaSpec {
  OmegaFamily family = OmegaFamily::sqrt;
  double scale = 1.0;
  double exponent = 0.5;  // power family only

  friend bool operator==(const OmegaSpec&, const OmegaSpec&) = default;
};

/// Throws DomainError unless scale > 0 (and exponent in (0, 1] for power).
OmegaSpec validate_omega(const OmegaSpec& spec);

double omega_value(const OmegaSpec& spec, double v);

/// Analytic Omega'(v). Returns +infinity at v = 0 for sqrt and for power
/// with exponent < 1.
double omega_derivative(const OmegaSpec& spec, double v);

std::string_view to_string(OmegaFamily family);

/// Accepts "linear", "sqrt", "log1p", "power"; throws ConfigError otherwise.
OmegaFamily parse_omega_family(std::string_view name);

}  // namespace dislab
