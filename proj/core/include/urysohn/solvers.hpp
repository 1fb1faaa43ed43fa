#pragma once

/**
 * Solvers for the Nystrom equation x = f + K_m(x) and the discrete modified
 * projection equation
 *
 *   x = f + Q_n K_m(x) + K_m(Q_n x) - Q_n K_m(Q_n x),
 *
 * plus the iterated solution f + K_m(z) and one step of Richardson
 * extrapolation in h.
 *
 * Q_n of a function needs only its collocation-node values and K_m only its
 * quadrature-node values, so the modified projection equation is closed on the
 * unknown vector (values at zeta) ++ (values at tau).
 */

#include <span>
#include <vector>

#include "urysohn/newton.hpp"
#include "urysohn/operator.hpp"

namespace urysohn {

struct NystromSolution {
  std::vector<double> x_quad;
  /// Natural extension s -> f(s) + K_m(x)(s).
  Evaluable eval;
  NewtonReport report;
};

NystromSolution solve_nystrom(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                              const NewtonSettings& settings = {});

/// Sup norm of x - f - K_m(x) at the quadrature nodes.
double nystrom_residual(const UrysohnProblem& prob, const CompositeQuadrature& quad, std::span<const double> x_quad);

struct SolutionBundle {
  UrysohnProblem problem;
  CompositeQuadrature quad;
  CollocationGrid grid;
  /// z_n^M at the quadrature and collocation nodes.
  GridFunction z_mod;
  /// z_n^M at arbitrary s, through the defining equation.
  Evaluable z_mod_eval;
  /// f + K_m(z_n^M).
  Evaluable z_iter_eval;
  /// Nystrom solution phi_m (natural extension).
  Evaluable nystrom_eval;
  NewtonReport newton_report;
  NewtonReport nystrom_report;
};

/// Throws MNotMultipleOfN, NonConvergence or SingularLinearSystem.
SolutionBundle solve_modified_projection(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                         const CollocationGrid& grid, const NewtonSettings& settings = {});

/// Sup norm of the modified projection residual at all quadrature and
/// collocation nodes for the unknown (values_quad ++ values_coll).
double modified_projection_residual(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                    const CollocationGrid& grid, std::span<const double> values_quad,
                                    std::span<const double> values_coll);

/// Residual vector of the modified projection system at y = (values_quad ++ values_coll).
Eigen::VectorXd modified_projection_residual_vector(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                                    const CollocationGrid& grid, const Eigen::VectorXd& y);

/// Exact Jacobian of modified_projection_residual_vector.
Eigen::MatrixXd modified_projection_jacobian(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                             const CollocationGrid& grid, const Eigen::VectorXd& y);

/// The iterated solution f + K_m(z_n^M).
Evaluable iterate(const SolutionBundle& bundle);

/// (2^{4r} z_2n - z_n) / (2^{4r} - 1), evaluated pointwise as
/// z_2n + (z_2n - z_n) / (2^{4r} - 1) so equal inputs pass through unchanged.
Evaluable richardson(Evaluable z_tilde_n, Evaluable z_tilde_2n, int r);

}  // namespace urysohn
