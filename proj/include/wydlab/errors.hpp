#pragma once

#include <stdexcept>
#include <string>

namespace wydlab {

/// Argument outside the mathematical domain of an operation (x <= 0, NaN, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter value the operation deliberately does not define
/// (e.g. operator W_p at p = 0 or p = 1).
class UnsupportedParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical breakdown: non-convergence, singular factor, failed certification.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (grid, search budget, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A verification grid that has no point inside the case region.
class VacuousGridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wydlab
