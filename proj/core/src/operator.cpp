#include "urysohn/operator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "urysohn/errors.hpp"

namespace urysohn {

namespace {

void check_length(std::span<const double> x_quad, const CompositeQuadrature& quad, const char* where) {
  if (x_quad.size() != static_cast<std::size_t>(quad.size())) {
    throw std::invalid_argument(std::string(where) + ": expected " + std::to_string(quad.size()) +
                                " node values, got " + std::to_string(x_quad.size()));
  }
}

double checked(double value, double s, double t, const char* where) {
  if (!std::isfinite(value)) {
    throw std::domain_error(std::string(where) + ": non-finite kernel value at s=" + std::to_string(s) +
                            ", t=" + std::to_string(t));
  }
  return value;
}

}  // namespace

double derivative_mismatch(const UrysohnProblem& prob, int samples, unsigned seed, double u_min,
                           double u_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> u_dist(u_min, u_max);
  constexpr double step = 1e-6;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = unit(rng);
    const double t = unit(rng);
    const double u = u_dist(rng);
    const double fd = (prob.kappa(s, t, u + step) - prob.kappa(s, t, u - step)) / (2.0 * step);
    const double exact = prob.dkappa_du(s, t, u);
    const double scale = std::max({std::abs(exact), std::abs(fd), 1e-8});
    worst = std::max(worst, std::abs(fd - exact) / scale);
  }
  return worst;
}

void require_refinement(const CompositeQuadrature& quad, const CollocationGrid& grid) {
  if (quad.m() % grid.n() != 0) {
    throw MNotMultipleOfN("quadrature m=" + std::to_string(quad.m()) +
                          " is not a multiple of collocation n=" + std::to_string(grid.n()));
  }
}

GridFunction::GridFunction(CompositeQuadrature quad_in, CollocationGrid grid_in, std::vector<double> vq,
                           std::vector<double> vc)
    : quad(std::move(quad_in)), grid(std::move(grid_in)), values_quad(std::move(vq)), values_coll(std::move(vc)) {
  require_refinement(quad, grid);
  if (values_quad.size() != static_cast<std::size_t>(quad.size()) ||
      values_coll.size() != static_cast<std::size_t>(grid.size())) {
    throw std::invalid_argument("GridFunction: value vectors do not match the grids");
  }
}

double nystrom_apply(const UrysohnProblem& prob, const CompositeQuadrature& quad, std::span<const double> x_quad,
                     double s) {
  check_length(x_quad, quad, "nystrom_apply");
  if (!(s >= 0.0 && s <= 1.0)) throw std::out_of_range("nystrom_apply: s outside [0,1]");
  const auto& nodes = quad.nodes();
  const auto& weights = quad.weights();
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    sum += weights[k] * checked(prob.kappa(s, nodes[k], x_quad[k]), s, nodes[k], "nystrom_apply");
  }
  return sum;
}

std::vector<double> nystrom_apply(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                  std::span<const double> x_quad, std::span<const double> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (double s : points) out.push_back(nystrom_apply(prob, quad, x_quad, s));
  return out;
}

Eigen::MatrixXd nystrom_jacobian(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                 std::span<const double> x_quad, std::span<const double> eval_points) {
  check_length(x_quad, quad, "nystrom_jacobian");
  const auto& nodes = quad.nodes();
  const auto& weights = quad.weights();
  const auto rows = static_cast<Eigen::Index>(eval_points.size());
  const auto cols = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd jac(rows, cols);
  for (Eigen::Index a = 0; a < rows; ++a) {
    const double s = eval_points[a];
    for (Eigen::Index k = 0; k < cols; ++k) {
      jac(a, k) = weights[k] * checked(prob.dkappa_du(s, nodes[k], x_quad[k]), s, nodes[k], "nystrom_jacobian");
    }
  }
  return jac;
}

Evaluable natural_extension(const UrysohnProblem& prob, const CompositeQuadrature& quad, std::vector<double> x_quad,
                            Evaluable f_eval) {
  check_length(x_quad, quad, "natural_extension");
  return [prob, quad, x = std::move(x_quad), f = std::move(f_eval)](double s) {
    return f(s) + nystrom_apply(prob, quad, x, s);
  };
}

}  // namespace urysohn
