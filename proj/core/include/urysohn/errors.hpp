#pragma once

#include <stdexcept>
#include <string>

namespace urysohn {

/// Newton's method ran out of iterations (or stalled above the residual bound).
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, int iterations, double last_step_norm)
      : std::runtime_error(what), iterations_(iterations), last_step_norm_(last_step_norm) {}

  int iterations() const noexcept { return iterations_; }
  double last_step_norm() const noexcept { return last_step_norm_; }

 private:
  int iterations_;
  double last_step_norm_;
};

/// The Newton matrix has a pivot below the relative singularity threshold.
class SingularLinearSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The quadrature partition does not refine the collocation partition (m != p*n).
class MNotMultipleOfN : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An order estimate was requested from an error that is not strictly positive.
class NonPositiveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace urysohn
