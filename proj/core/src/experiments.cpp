#include "urysohn/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "urysohn/errors.hpp"
#include "urysohn/problems.hpp"
#include "urysohn/solvers.hpp"

namespace urysohn {

namespace {

struct Overloaded {
  int n;
  int operator()(const m_rule::Fixed& rule) const { return rule.m; }
  int operator()(const m_rule::Multiple& rule) const { return rule.p * n; }
  int operator()(const m_rule::Square&) const { return n * n; }
};

// Errors within a few ulps of the solution's magnitude carry no order information.
constexpr double kFloorUlps = 16.0;

std::optional<double> order_or_blank(double err_n, double err_2n, double floor) {
  if (err_n <= floor || err_2n <= floor) return std::nullopt;
  try {
    return estimate_order(err_n, err_2n);
  } catch (const NonPositiveError&) {
    return std::nullopt;
  }
}

struct Level {
  SolutionBundle bundle;
  std::vector<double> points;
};

Level solve_level(const UrysohnProblem& prob, const ExperimentConfig& config, int n) {
  const int m = quadrature_intervals(config.m_rule, n);
  const auto quad = composite(gauss_legendre(config.quad_rho), m);
  const CollocationGrid grid(n, config.r);
  const std::string where = " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
  try {
    auto bundle = solve_modified_projection(prob, quad, grid, config.newton);
    auto points = evaluation_points(grid, quad, config.eval_grid_points);
    return Level{std::move(bundle), std::move(points)};
  } catch (const NonConvergence& e) {
    throw NonConvergence(e.what() + where, e.iterations(), e.last_step_norm());
  } catch (const SingularLinearSystem& e) {
    throw SingularLinearSystem(e.what() + where);
  } catch (const MNotMultipleOfN& e) {
    throw MNotMultipleOfN(e.what() + where);
  }
}

}  // namespace

int quadrature_intervals(const MRule& rule, int n) { return std::visit(Overloaded{n}, rule); }

void ExperimentConfig::validate() const {
  const auto ids = problem_ids();
  if (std::find(ids.begin(), ids.end(), problem_id) == ids.end()) {
    throw ConfigError("unknown problem '" + problem_id + "'");
  }
  if (r < 1 || r > 10) throw ConfigError("r must be in [1, 10]");
  if (quad_rho < 1 || quad_rho > 20) throw ConfigError("quad_rho must be in [1, 20]");
  if (n_values.empty()) throw ConfigError("n_values must not be empty");
  if (eval_grid_points < 2) throw ConfigError("eval_grid_points must be >= 2");
  if (const auto* fixed = std::get_if<m_rule::Fixed>(&m_rule); fixed && fixed->m < 1) {
    throw ConfigError("m_rule fixed m must be >= 1");
  }
  if (const auto* multiple = std::get_if<m_rule::Multiple>(&m_rule); multiple && multiple->p < 1) {
    throw ConfigError("m_rule multiple p must be >= 1");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    const int n = n_values[i];
    if (n < 1) throw ConfigError("n_values entries must be >= 1");
    if (i > 0 && n <= n_values[i - 1]) throw ConfigError("n_values must be strictly increasing");
    const int m = quadrature_intervals(m_rule, n);
    if (m % n != 0) {
      throw ConfigError("m=" + std::to_string(m) + " is not a multiple of n=" + std::to_string(n));
    }
  }
  try {
    newton.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

std::vector<double> evaluation_points(const CollocationGrid& grid, const CompositeQuadrature& quad,
                                      int eval_grid_points) {
  if (eval_grid_points < 2) throw std::invalid_argument("evaluation_points: need at least 2 grid points");
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(eval_grid_points) + grid.nodes().size() + quad.nodes().size() + 2);
  for (int i = 0; i < eval_grid_points; ++i) {
    points.push_back(static_cast<double>(i) / (eval_grid_points - 1));
  }
  points.push_back(0.0);
  points.push_back(1.0);
  points.insert(points.end(), grid.nodes().begin(), grid.nodes().end());
  points.insert(points.end(), quad.nodes().begin(), quad.nodes().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

double sup_error(const Evaluable& approx, const Evaluable& reference, std::span<const double> points) {
  double worst = 0.0;
  for (double s : points) {
    const double diff = std::abs(approx(s) - reference(s));
    if (std::isnan(diff)) throw std::domain_error("sup_error: evaluation produced NaN");
    worst = std::max(worst, diff);
  }
  return worst;
}

double sup_error(const Evaluable& approx, const Evaluable& reference, const CollocationGrid& grid,
                 const CompositeQuadrature& quad, int eval_grid_points) {
  const auto points = evaluation_points(grid, quad, eval_grid_points);
  return sup_error(approx, reference, points);
}

double estimate_order(double err_n, double err_2n) {
  if (!(err_n > 0.0) || !(err_2n > 0.0)) {
    throw NonPositiveError("estimate_order: errors must be positive");
  }
  return std::log2(err_n / err_2n);
}

ConvergenceReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  const UrysohnProblem prob = find_problem(config.problem_id);
  if (!prob.exact_solution) throw ConfigError("problem '" + config.problem_id + "' has no exact solution");
  const Evaluable& exact = *prob.exact_solution;
  double exact_scale = 1.0;

  ConvergenceReport report{config, {}};
  std::vector<Level> levels;
  levels.reserve(config.n_values.size());
  for (int n : config.n_values) {
    const auto start = std::chrono::steady_clock::now();
    Level level = solve_level(prob, config, n);
    ConvergenceRow row;
    row.n = n;
    row.m = level.bundle.quad.m();
    row.err_mod = sup_error(level.bundle.z_mod_eval, exact, level.points);
    row.err_iter = sup_error(level.bundle.z_iter_eval, exact, level.points);
    for (double s : level.points) exact_scale = std::max(exact_scale, std::abs(exact(s)));
    row.newton_iterations = level.bundle.newton_report.iterations;
    row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(row);
    levels.push_back(std::move(level));
  }

  const double floor = kFloorUlps * std::numeric_limits<double>::epsilon() * exact_scale;
  auto& rows = report.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int n = rows[i].n;
    if (i > 0 && rows[i - 1].n * 2 == n) {
      rows[i].delta_mod = order_or_blank(rows[i - 1].err_mod, rows[i].err_mod, floor);
      rows[i].delta_iter = order_or_blank(rows[i - 1].err_iter, rows[i].err_iter, floor);
    }
    if (n % 2 == 0) {
      const auto coarse = std::find(config.n_values.begin(), config.n_values.end(), n / 2);
      if (coarse != config.n_values.end()) {
        const auto j = static_cast<std::size_t>(coarse - config.n_values.begin());
        const Evaluable extrap = richardson(levels[j].bundle.z_iter_eval, levels[i].bundle.z_iter_eval, config.r);
        rows[i].err_extrap = std::max(sup_error(extrap, exact, levels[i].points),
                                      sup_error(extrap, exact, levels[j].points));
      }
    }
    if (i > 0 && rows[i - 1].n * 2 == n && rows[i - 1].err_extrap && rows[i].err_extrap) {
      rows[i].delta_extrap = order_or_blank(*rows[i - 1].err_extrap, *rows[i].err_extrap, floor);
    }
  }
  return report;
}

std::vector<Preset> presets() {
  const std::vector<int> ns{2, 4, 8, 16, 32};
  ExperimentConfig midpoints;
  midpoints.r = 1;
  midpoints.n_values = ns;
  midpoints.quad_rho = 2;
  midpoints.m_rule = m_rule::Fixed{256};

  ExperimentConfig linear_fixed = midpoints;
  linear_fixed.r = 2;

  ExperimentConfig linear_square = midpoints;
  linear_square.r = 2;
  linear_square.m_rule = m_rule::Square{};

  return {
      {"table-4.4", "r=1 (midpoints), 2-point Gauss, m=256 fixed, n=2..32", midpoints},
      {"table-4.5-analog", "r=2 (2 Gauss points), 2-point Gauss, m=256 fixed, n=2..32", linear_fixed},
      {"table-4.6", "r=2 (2 Gauss points), 2-point Gauss, m=n^2, n=2..32", linear_square},
  };
}

ExperimentConfig preset_config(const std::string& name) {
  for (const auto& preset : presets()) {
    if (preset.name == name) return preset.config;
  }
  throw std::out_of_range("unknown preset '" + name + "'");
}

}  // namespace urysohn
