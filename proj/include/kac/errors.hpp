#pragma once

#include <stdexcept>
#include <string>

namespace kac {

// Each class maps to its own CLI exit status.

/// Bad root-system or group input (rank out of range, weight not in P, ...).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A labeling that is malformed or violates the weighted-sum condition.
class LabelingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The brute-force torus oracle refused a job larger than its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kac
