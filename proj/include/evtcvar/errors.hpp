#pragma once

#include <stdexcept>
#include <string>

namespace evtcvar {

// Each error category maps to one CLI exit code (see exit_code()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept = 0;
  virtual const char* kind() const noexcept = 0;
};

class ConfigError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
  const char* kind() const noexcept override { return "config"; }
};

class DataError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
  const char* kind() const noexcept override { return "data"; }
};

/// A parameter outside the mathematical domain of an operation
/// (e.g. gamma >= 1/2 where the limit variance diverges).
class DomainError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 4; }
  const char* kind() const noexcept override { return "domain"; }
};

/// Zero or sign-changing spacings in an estimator. Kept distinct from
/// DomainError so the Monte Carlo harness can count these replications;
/// the CLI reports it with the numeric exit code.
class DegenerateSampleError : public DomainError {
 public:
  using DomainError::DomainError;
  int exit_code() const noexcept override { return 5; }
  const char* kind() const noexcept override { return "degenerate"; }
};

class NumericError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 5; }
  const char* kind() const noexcept override { return "numeric"; }
};

namespace detail {
template <class E>
[[noreturn]] inline void raise(const std::string& where, const std::string& what) {
  throw E(where + ": " + what);
}
}  // namespace detail

}  // namespace evtcvar
