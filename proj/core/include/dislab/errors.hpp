#pragma once

#include <stdexcept>
#include <string>

namespace dislab {

/// Root of every error the library throws on bad input or infeasible math.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}

  /// Name of the offending parameter, e.g. "alpha".
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Run or file configuration is malformed (bad key, bad horizon, ...).
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error(what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Welfare has no interior maximiser (it peaks at v = 0 or never turns down).
class NoInteriorOptimum : public Error {
 public:
  using Error::Error;
};

/// The first-order condition changes sign more than once on the search grid.
class NonConcave : public Error {
 public:
  using Error::Error;
};

/// A target dispersion cannot be implemented with a nonnegative noise level.
class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace dislab
