// Copyright 2026 The threelines Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace threelines {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument on a branch cut of a multivalued special function.
class CutError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonFiniteError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation too close to a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Integrand envelope does not certify integrability.
class EnvelopeError : public Error {
 public:
  using Error::Error;
};

/// Adaptive refinement exhausted its budget. Carries the best estimate.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_value, double err_estimate)
      : Error(what), best_value_(best_value), err_estimate_(err_estimate) {}

  double best_value() const noexcept { return best_value_; }
  double err_estimate() const noexcept { return err_estimate_; }

 private:
  double best_value_;
  double err_estimate_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace threelines
