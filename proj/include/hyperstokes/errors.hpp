#pragma once

#include <stdexcept>
#include <string>

namespace hyperstokes {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

// Catastrophic cancellation left fewer significant digits than required.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

// An iteration (quadrature refinement, continued fraction, extrapolation)
// failed to reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(what) {}
};

// Arguments outside the domain of validity of the requested operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A continuation step jumped branches (tracked root moved implausibly far).
class BranchError : public Error {
 public:
  explicit BranchError(const std::string& what) : Error(what) {}
};

// Invalid run configuration (CLI arguments, config file, environment).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace hyperstokes
