#pragma once

#include <stdexcept>
#include <string>

namespace cmm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (non-positive frequency, bad mode label, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Dense solve failed or was too ill-conditioned to trust.
struct NumericalError : Error {
  NumericalError(const std::string& what, double condition_estimate = 0.0)
      : Error(what), condition_estimate(condition_estimate) {}
  double condition_estimate;
};

/// The drift matrix has an eigenvalue with non-negative real part, so no
/// stationary covariance exists.
struct UnstableError : Error {
  UnstableError(const std::string& what, double max_real_eig)
      : Error(what), max_real_eig(max_real_eig) {}
  double max_real_eig;
};

/// Covariance matrix violates the uncertainty principle (beyond tolerance).
struct PhysicalityError : Error {
  using Error::Error;
};

/// A closed-form expression hit an exact pole.
struct SingularityError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace cmm
