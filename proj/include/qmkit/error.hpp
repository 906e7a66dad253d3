#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qmkit {

/// Base of every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a formula (negative mass, n < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a grid (or a matrix dimension) do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ZeroNormError : public Error {
 public:
  using Error::Error;
};

class QuantumNumberError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Grid too coarse for the requested feature.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Internal numerical consistency check failed (e.g. a variance that is
/// negative beyond round-off).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Photon energy does not exceed the work function.
class BelowThresholdError : public Error {
 public:
  BelowThresholdError(const std::string& what, double threshold_frequency)
      : Error(what), threshold_frequency_(threshold_frequency) {}
  double threshold_frequency() const noexcept { return threshold_frequency_; }

 private:
  double threshold_frequency_;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Transfer-matrix scattering needs propagating waves at both ends.
class NoChannelError : public Error {
 public:
  using Error::Error;
};

/// Energy inside a Kronig-Penney gap has no real Bloch wavenumber.
class GapEnergyError : public Error {
 public:
  GapEnergyError(const std::string& what, double dispersion_value)
      : Error(what), dispersion_value_(dispersion_value) {}
  double dispersion_value() const noexcept { return dispersion_value_; }

 private:
  double dispersion_value_;
};

/// Particle number that no chemical potential can produce.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Matrices handed to the ladder construction are not an angular momentum.
class NotAngularMomentumError : public Error {
 public:
  NotAngularMomentumError(const std::string& what, std::vector<double> residuals)
      : Error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmkit
