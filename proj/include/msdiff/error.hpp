#pragma once

#include <stdexcept>
#include <string>

namespace msdiff {

/// Bad user input: configuration, scenario names, grid sizes, file contents.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The per-node flux system has a (near) vanishing determinant.
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what, long node = -1)
      : std::runtime_error(what), node_(node) {}

  long node() const noexcept { return node_; }

 private:
  long node_;
};

/// Failure while time stepping; carries the step index where it happened.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}

  long step() const noexcept { return step_; }

 private:
  long step_;
};

}  // namespace msdiff
