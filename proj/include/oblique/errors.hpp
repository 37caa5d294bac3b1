#pragma once

#include <stdexcept>
#include <string>

namespace oblique {

/// Base class for every error raised by the solver. `exit_code()` is the
/// process exit status the command-line tool reports for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
  virtual const char* kind() const noexcept { return "error"; }
};

/// Invalid or inconsistent configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
  const char* kind() const noexcept override { return "config"; }
};

/// Degenerate or wrongly oriented boundary curve.
class GeometryError : public ConfigError {
 public:
  using ConfigError::ConfigError;
  const char* kind() const noexcept override { return "geometry"; }
};

/// Source points of a manufactured problem on or on the wrong side of the boundary.
class PlacementError : public ConfigError {
 public:
  using ConfigError::ConfigError;
  const char* kind() const noexcept override { return "placement"; }
};

/// Material/incidence parameters outside the admissible set (exit code 3).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
  const char* kind() const noexcept override { return "admissibility"; }
};

/// A boundary operator or the full system is numerically singular (exit code 4).
class ResonanceError : public Error {
 public:
  ResonanceError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  int exit_code() const noexcept override { return 4; }
  const char* kind() const noexcept override { return "resonance"; }
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// File system failure while writing results (exit code 5).
class IoError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
  const char* kind() const noexcept override { return "io"; }
};

/// Argument outside the domain of a special function.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// Violated API precondition (size mismatch, missing derivative order, ...).
class ContractError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "contract"; }
};

}  // namespace oblique
