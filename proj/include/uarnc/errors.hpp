#pragma once

#include <stdexcept>
#include <string>

namespace uarnc {

/// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// UAV altitude or a coordinate is unusable (non-positive altitude, NaN).
class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

/// Argument outside a function's mathematical domain (negative SNR, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent integer parameters, e.g. l > L or L > T.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Exact enumeration requested for too many erasure patterns.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// No position satisfying the fairness constraint could be found.
class InfeasibleProblem : public Error {
 public:
  using Error::Error;
};

/// Received payloads contradict the received coefficient vectors.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// Configuration or scenario failed validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A sweep value produces an (L, T) pair with T < L.
class SweepDomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace uarnc
