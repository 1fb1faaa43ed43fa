#include "urysohn/newton.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "urysohn/errors.hpp"

namespace urysohn {

namespace {

std::string sci(double value) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << value;
  return out.str();
}

}  // namespace

void NewtonSettings::validate() const {
  if (!(tol > 0.0)) throw std::invalid_argument("NewtonSettings: tol must be > 0");
  if (max_iters < 1) throw std::invalid_argument("NewtonSettings: max_iters must be >= 1");
}

Eigen::VectorXd solve_dense(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw std::invalid_argument("solve_dense: dimension mismatch");
  }
  const double scale = a.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) throw SingularLinearSystem("solve_dense: zero matrix");
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot >= kSingularPivot * scale)) {
    throw SingularLinearSystem("solve_dense: relative pivot " + sci(min_pivot / scale) +
                               " below threshold");
  }
  return lu.solve(b);
}

NewtonResult newton_solve(const ResidualFn& residual, const JacobianFn& jacobian, Eigen::VectorXd x0,
                          const NewtonSettings& settings) {
  settings.validate();
  NewtonResult result{std::move(x0), {}};
  auto& x = result.x;
  auto& report = result.report;
  double step_norm = 0.0;
  for (int it = 1; it <= settings.max_iters; ++it) {
    const Eigen::VectorXd r = residual(x);
    const Eigen::VectorXd step = solve_dense(jacobian(x), -r);
    x += step;
    step_norm = step.lpNorm<Eigen::Infinity>();
    report.iterations = it;
    report.step_norms.push_back(step_norm);
    if (step_norm <= settings.tol) {
      report.final_residual = residual(x).lpNorm<Eigen::Infinity>();
      if (!(report.final_residual <= 10.0 * settings.tol)) {
        throw NonConvergence("Newton step converged but residual " + sci(report.final_residual) +
                                 " exceeds 10*tol",
                             it, step_norm);
      }
      return result;
    }
  }
  throw NonConvergence("Newton did not converge in " + std::to_string(settings.max_iters) +
                           " iterations (last step norm " + sci(step_norm) + ")",
                       settings.max_iters, step_norm);
}

}  // namespace urysohn
