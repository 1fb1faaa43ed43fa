#pragma once

/**
 * Urysohn problems x - K(x) = f with K(x)(s) = int_0^1 kappa(s, t, x(t)) dt,
 * and the Nystrom operator
 *
 *   K_m(x)(s) = sum_k w_k kappa(s, zeta_k, x(zeta_k))
 *
 * over a composite rule. K_m needs x only at the quadrature nodes, so every
 * function it acts on is passed as its node vector.
 */

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "urysohn/projection.hpp"
#include "urysohn/quadrature.hpp"

namespace urysohn {

using Evaluable = std::function<double(double)>;
using Kernel = std::function<double(double s, double t, double u)>;

struct UrysohnProblem {
  std::string name;
  Kernel kappa;
  Kernel dkappa_du;
  Evaluable rhs;
  std::optional<Evaluable> exact_solution;
};

/// Largest relative mismatch between dkappa_du and a central difference of
/// kappa in u over `samples` random points of [0,1]^2 x [u_min, u_max].
double derivative_mismatch(const UrysohnProblem& prob, int samples, unsigned seed, double u_min = 0.0,
                           double u_max = 1.0);

/// Grid function sampled at the quadrature nodes and at the collocation nodes.
struct GridFunction {
  GridFunction(CompositeQuadrature quad, CollocationGrid grid, std::vector<double> values_quad,
               std::vector<double> values_coll);

  CompositeQuadrature quad;
  CollocationGrid grid;
  std::vector<double> values_quad;
  std::vector<double> values_coll;
};

/// Throws MNotMultipleOfN unless quad.m() == p * grid.n() for integer p >= 1.
void require_refinement(const CompositeQuadrature& quad, const CollocationGrid& grid);

double nystrom_apply(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                     std::span<const double> x_quad, double s);

/// K_m(x) at each of `points`.
std::vector<double> nystrom_apply(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                  std::span<const double> x_quad, std::span<const double> points);

/// Matrix of v -> K_m'(x) v sampled at eval_points: entry (a, k) is
/// w_k * dkappa/du(eval_points[a], zeta_k, x_quad[k]).
Eigen::MatrixXd nystrom_jacobian(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                 std::span<const double> x_quad, std::span<const double> eval_points);

/// s -> f_eval(s) + K_m(x)(s). Copies what it needs.
Evaluable natural_extension(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                            std::vector<double> x_quad, Evaluable f_eval);

}  // namespace urysohn
