#pragma once

#include <stdexcept>
#include <string>

namespace qc {

// Bogoliubov coefficients are 0/0 at the gap-closing mode (lambda=1, k=pi).
class DegenerateModeError : public std::domain_error {
 public:
  explicit DegenerateModeError(const std::string& msg) : std::domain_error(msg) {}
};

// Quadrature failed to converge; carries the last two estimates for diagnosis.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double last, double previous)
      : std::runtime_error(msg), last_estimate(last), previous_estimate(previous) {}
  double last_estimate;
  double previous_estimate;
};

// A density matrix violated a positivity condition beyond tolerance.
class PositivityError : public std::runtime_error {
 public:
  explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qc
