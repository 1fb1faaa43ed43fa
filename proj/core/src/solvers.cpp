#include "urysohn/solvers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "urysohn/errors.hpp"

namespace urysohn {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::span<const double> as_span(const VectorXd& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<Index>(v.size()));
}

std::vector<double> to_std(const VectorXd& v) { return {v.data(), v.data() + v.size()}; }

VectorXd sample(const Evaluable& f, std::span<const double> points) {
  VectorXd out(static_cast<Index>(points.size()));
  for (std::size_t a = 0; a < points.size(); ++a) out[static_cast<Index>(a)] = f(points[a]);
  return out;
}

VectorXd initial_guess(const NewtonSettings& settings, const VectorXd& rhs_samples) {
  switch (settings.initial_guess) {
    case InitialGuess::Zero:
      return VectorXd::Zero(rhs_samples.size());
    case InitialGuess::Given:
      if (settings.given.size() != static_cast<std::size_t>(rhs_samples.size())) {
        throw std::invalid_argument("NewtonSettings: given initial guess has length " +
                                    std::to_string(settings.given.size()) + ", expected " +
                                    std::to_string(rhs_samples.size()));
      }
      return as_vector(settings.given);
    case InitialGuess::Nystrom:
    case InitialGuess::RhsSamples:
      break;
  }
  return rhs_samples;
}

class NystromSystem {
 public:
  NystromSystem(const UrysohnProblem& prob, const CompositeQuadrature& quad)
      : prob_(prob), quad_(quad), f_(sample(prob.rhs, quad.nodes())) {}

  const VectorXd& rhs_samples() const { return f_; }

  VectorXd residual(const VectorXd& x) const {
    const auto k = nystrom_apply(prob_, quad_, as_span(x), quad_.nodes());
    return x - f_ - as_vector(k);
  }

  MatrixXd jacobian(const VectorXd& x) const {
    MatrixXd j = -nystrom_jacobian(prob_, quad_, as_span(x), quad_.nodes());
    j.diagonal().array() += 1.0;
    return j;
  }

 private:
  const UrysohnProblem& prob_;
  const CompositeQuadrature& quad_;
  VectorXd f_;
};

// Unknown y = (y_q, y_c) of length M + C, M = m*rho, C = n*r, and evaluation
// points E = zeta ++ tau. With G the interpolation matrix of Q_n at E,
// P its first M rows (Q_n at the quadrature nodes) and w = P y_c:
//
//   R(y) = y - f_E - G K_tau(y_q) - K_E(w) + G K_tau(w)
class ModifiedProjectionSystem {
 public:
  ModifiedProjectionSystem(const UrysohnProblem& prob, const CompositeQuadrature& quad, const CollocationGrid& grid)
      : prob_(prob), quad_(quad), grid_(grid), m_size_(quad.size()), c_size_(grid.size()) {
    points_.reserve(static_cast<std::size_t>(m_size_ + c_size_));
    points_.insert(points_.end(), quad.nodes().begin(), quad.nodes().end());
    points_.insert(points_.end(), grid.nodes().begin(), grid.nodes().end());
    interp_ = grid.interpolation_matrix(points_);
    f_ = sample(prob.rhs, points_);
  }

  Index size() const { return m_size_ + c_size_; }
  const VectorXd& rhs_samples() const { return f_; }
  const std::vector<double>& points() const { return points_; }

  std::span<const double> tau() const {
    return std::span<const double>(points_).subspan(static_cast<std::size_t>(m_size_));
  }
  VectorXd quad_part(const VectorXd& y) const { return y.head(m_size_); }
  VectorXd coll_part(const VectorXd& y) const { return y.tail(c_size_); }
  VectorXd projected_at_quad(const VectorXd& y) const { return interp_.topRows(m_size_) * coll_part(y); }

  VectorXd residual(const VectorXd& y) const {
    const VectorXd yq = quad_part(y);
    const VectorXd w = projected_at_quad(y);
    const VectorXd k_tau_y = as_vector(nystrom_apply(prob_, quad_, as_span(yq), tau()));
    const VectorXd k_e_w = as_vector(nystrom_apply(prob_, quad_, as_span(w), points_));
    const VectorXd k_tau_w = k_e_w.tail(c_size_);
    return y - f_ - interp_ * k_tau_y - k_e_w + interp_ * k_tau_w;
  }

  MatrixXd jacobian(const VectorXd& y) const {
    const VectorXd yq = quad_part(y);
    const VectorXd w = projected_at_quad(y);
    const MatrixXd p = interp_.topRows(m_size_);
    const MatrixXd j_tau_y = nystrom_jacobian(prob_, quad_, as_span(yq), tau());
    const MatrixXd j_e_w = nystrom_jacobian(prob_, quad_, as_span(w), points_);

    MatrixXd jac(size(), size());
    jac.leftCols(m_size_) = -interp_ * j_tau_y;
    jac.rightCols(c_size_) = -(j_e_w * p) + interp_ * (j_e_w.bottomRows(c_size_) * p);
    jac.diagonal().array() += 1.0;
    return jac;
  }

  // Q_n K_m(y_q) - Q_n K_m(w) as one element of X_n.
  PiecewisePolynomial projected_terms(const VectorXd& y) const {
    const VectorXd yq = quad_part(y);
    const VectorXd w = projected_at_quad(y);
    const auto a = nystrom_apply(prob_, quad_, as_span(yq), tau());
    const auto c = nystrom_apply(prob_, quad_, as_span(w), tau());
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - c[i];
    return interpolate(grid_, std::move(diff));
  }

 private:
  const UrysohnProblem& prob_;
  const CompositeQuadrature& quad_;
  const CollocationGrid& grid_;
  Index m_size_;
  Index c_size_;
  std::vector<double> points_;
  MatrixXd interp_;
  VectorXd f_;
};

NewtonSettings nystrom_settings(const NewtonSettings& settings) {
  NewtonSettings out = settings;
  if (out.initial_guess == InitialGuess::Given || out.initial_guess == InitialGuess::Nystrom) {
    out.initial_guess = InitialGuess::RhsSamples;
    out.given.clear();
  }
  return out;
}

}  // namespace

NystromSolution solve_nystrom(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                              const NewtonSettings& settings) {
  settings.validate();
  const NystromSystem system(prob, quad);
  auto result = newton_solve([&](const VectorXd& x) { return system.residual(x); },
                             [&](const VectorXd& x) { return system.jacobian(x); },
                             initial_guess(settings, system.rhs_samples()), settings);
  std::vector<double> x = to_std(result.x);
  Evaluable eval = natural_extension(prob, quad, x, prob.rhs);
  return NystromSolution{std::move(x), std::move(eval), std::move(result.report)};
}

double nystrom_residual(const UrysohnProblem& prob, const CompositeQuadrature& quad, std::span<const double> x_quad) {
  const NystromSystem system(prob, quad);
  return system.residual(Eigen::Map<const VectorXd>(x_quad.data(), static_cast<Index>(x_quad.size())))
      .lpNorm<Eigen::Infinity>();
}

SolutionBundle solve_modified_projection(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                         const CollocationGrid& grid, const NewtonSettings& settings) {
  settings.validate();
  require_refinement(quad, grid);
  NystromSolution nystrom = solve_nystrom(prob, quad, nystrom_settings(settings));

  const ModifiedProjectionSystem system(prob, quad, grid);
  VectorXd y0;
  if (settings.initial_guess == InitialGuess::Nystrom) {
    y0 = sample(nystrom.eval, system.points());
  } else {
    y0 = initial_guess(settings, system.rhs_samples());
  }
  auto result = newton_solve([&](const VectorXd& y) { return system.residual(y); },
                             [&](const VectorXd& y) { return system.jacobian(y); }, std::move(y0), settings);
  const VectorXd& y = result.x;

  GridFunction z_mod(quad, grid, to_std(system.quad_part(y)), to_std(system.coll_part(y)));

  Evaluable projected = [pp = system.projected_terms(y)](double s) { return pp(s); };
  Evaluable k_of_projection = natural_extension(prob, quad, to_std(system.projected_at_quad(y)), projected);
  Evaluable z_mod_eval = [f = prob.rhs, k_of_projection](double s) { return f(s) + k_of_projection(s); };
  Evaluable z_iter_eval = natural_extension(prob, quad, z_mod.values_quad, prob.rhs);

  return SolutionBundle{prob,
                        quad,
                        grid,
                        std::move(z_mod),
                        std::move(z_mod_eval),
                        std::move(z_iter_eval),
                        std::move(nystrom.eval),
                        std::move(result.report),
                        std::move(nystrom.report)};
}

double modified_projection_residual(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                    const CollocationGrid& grid, std::span<const double> values_quad,
                                    std::span<const double> values_coll) {
  require_refinement(quad, grid);
  const ModifiedProjectionSystem system(prob, quad, grid);
  if (values_quad.size() != static_cast<std::size_t>(quad.size()) ||
      values_coll.size() != static_cast<std::size_t>(grid.size())) {
    throw std::invalid_argument("modified_projection_residual: value vectors do not match the grids");
  }
  VectorXd y(system.size());
  y.head(quad.size()) = Eigen::Map<const VectorXd>(values_quad.data(), quad.size());
  y.tail(grid.size()) = Eigen::Map<const VectorXd>(values_coll.data(), grid.size());
  return system.residual(y).lpNorm<Eigen::Infinity>();
}

Eigen::VectorXd modified_projection_residual_vector(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                                    const CollocationGrid& grid, const Eigen::VectorXd& y) {
  require_refinement(quad, grid);
  const ModifiedProjectionSystem system(prob, quad, grid);
  if (y.size() != system.size()) throw std::invalid_argument("modified_projection_residual_vector: bad length");
  return system.residual(y);
}

Eigen::MatrixXd modified_projection_jacobian(const UrysohnProblem& prob, const CompositeQuadrature& quad,
                                             const CollocationGrid& grid, const Eigen::VectorXd& y) {
  require_refinement(quad, grid);
  const ModifiedProjectionSystem system(prob, quad, grid);
  if (y.size() != system.size()) throw std::invalid_argument("modified_projection_jacobian: bad length");
  return system.jacobian(y);
}

Evaluable iterate(const SolutionBundle& bundle) {
  return natural_extension(bundle.problem, bundle.quad, bundle.z_mod.values_quad, bundle.problem.rhs);
}

Evaluable richardson(Evaluable z_tilde_n, Evaluable z_tilde_2n, int r) {
  if (r < 1) throw std::invalid_argument("richardson: r must be >= 1");
  const double denom = std::ldexp(1.0, 4 * r) - 1.0;
  return [zn = std::move(z_tilde_n), z2n = std::move(z_tilde_2n), denom](double s) {
    const double fine = z2n(s);
    return fine + (fine - zn(s)) / denom;
  };
}

}  // namespace urysohn
