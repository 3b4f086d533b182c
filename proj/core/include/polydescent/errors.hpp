#pragma once

#include <stdexcept>
#include <string>

namespace polydescent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input data (bad JSON, s < 2, clustered roots, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at a point where the map is undefined (a root for the
/// logarithmic derivative, a pole for a Blaschke factor).
class DomainError : public Error {
 public:
  using Error::Error;
};

class CriticalPointError : public Error {
 public:
  using Error::Error;
};

class BranchModelError : public Error {
 public:
  using Error::Error;
};

/// Newton correction failed even at the minimum parameter step.
class StalledCorrection : public Error {
 public:
  using Error::Error;
};

/// A traced path left the target's admissible region.
class LeftDomain : public Error {
 public:
  using Error::Error;
};

class UnresolvedEdge : public Error {
 public:
  using Error::Error;
};

/// The requested level is too close to a critical value for the grid to be trusted.
class NearCriticalValue : public Error {
 public:
  using Error::Error;
};

class RouteError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydescent
