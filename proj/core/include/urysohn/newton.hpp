#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace urysohn {

/// Nystrom: start the modified projection iteration from the Nystrom solution
/// sampled at its nodes (the Nystrom solve itself then starts from the rhs
/// samples). For solve_nystrom, Nystrom behaves like RhsSamples.
enum class InitialGuess { Nystrom, RhsSamples, Zero, Given };

struct NewtonSettings {
  /// Stop once the sup norm of the Newton step is at most tol.
  double tol = 1e-13;
  int max_iters = 50;
  InitialGuess initial_guess = InitialGuess::Nystrom;
  /// Used when initial_guess == Given; length must match the unknown vector.
  std::vector<double> given;

  /// Throws std::invalid_argument unless tol > 0 and max_iters >= 1.
  void validate() const;
};

struct NewtonReport {
  int iterations = 0;
  std::vector<double> step_norms;
  /// Sup norm of the residual at the returned iterate.
  double final_residual = 0.0;
};

struct NewtonResult {
  Eigen::VectorXd x;
  NewtonReport report;
};

using ResidualFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
using JacobianFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

/// Relative pivot threshold below which a dense solve is declared singular.
inline constexpr double kSingularPivot = 1e-14;

/// LU with partial pivoting; throws SingularLinearSystem when the smallest
/// pivot of U falls below kSingularPivot times the largest entry of A.
Eigen::VectorXd solve_dense(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// Exact-Jacobian Newton iteration for residual(x) = 0.
/// Throws NonConvergence after max_iters steps, or when the step criterion is
/// met but the residual still exceeds 10 * tol.
NewtonResult newton_solve(const ResidualFn& residual, const JacobianFn& jacobian, Eigen::VectorXd x0,
                          const NewtonSettings& settings);

}  // namespace urysohn
