#pragma once

/**
 * Convergence studies over a sequence of collocation partitions: for each n
 * the modified projection, iterated and extrapolated solutions are compared
 * with the exact solution in the sup norm over a dense evaluation set.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "urysohn/newton.hpp"
#include "urysohn/operator.hpp"

namespace urysohn {

namespace m_rule {
struct Fixed {
  int m;
};
/// m = p * n.
struct Multiple {
  int p;
};
/// m = n^2.
struct Square {};
}  // namespace m_rule

using MRule = std::variant<m_rule::Fixed, m_rule::Multiple, m_rule::Square>;

int quadrature_intervals(const MRule& rule, int n);

enum class OutputFormat { Csv, Markdown };

struct ExperimentConfig {
  std::string problem_id = "reciprocal-sum";
  int r = 1;
  std::vector<int> n_values;
  int quad_rho = 2;
  MRule m_rule = m_rule::Fixed{256};
  NewtonSettings newton;
  int eval_grid_points = 1001;
  OutputFormat output_format = OutputFormat::Csv;

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

struct ConvergenceRow {
  int n = 0;
  int m = 0;
  double err_mod = 0.0;
  std::optional<double> delta_mod;
  double err_iter = 0.0;
  std::optional<double> delta_iter;
  std::optional<double> err_extrap;
  std::optional<double> delta_extrap;
  double runtime_seconds = 0.0;
  int newton_iterations = 0;
};

struct ConvergenceReport {
  ExperimentConfig config;
  std::vector<ConvergenceRow> rows;
};

/// Sorted, de-duplicated union of `eval_grid_points` uniform points on [0,1],
/// both endpoints, the collocation nodes and the quadrature nodes.
std::vector<double> evaluation_points(const CollocationGrid& grid, const CompositeQuadrature& quad,
                                      int eval_grid_points);

double sup_error(const Evaluable& approx, const Evaluable& reference, const CollocationGrid& grid,
                 const CompositeQuadrature& quad, int eval_grid_points = 1001);

double sup_error(const Evaluable& approx, const Evaluable& reference, std::span<const double> points);

/// log2(err_n / err_2n); throws NonPositiveError if either is <= 0.
double estimate_order(double err_n, double err_2n);

/// Order cells are left blank when either error is at most 16 eps times the
/// largest |exact solution| on the evaluation set.
/// Errors from the solvers are rethrown with the failing n in the message,
/// preserving their type.
ConvergenceReport run_experiment(const ExperimentConfig& config);

struct Preset {
  std::string name;
  std::string description;
  ExperimentConfig config;
};

/// "table-4.4", "table-4.5-analog", "table-4.6".
std::vector<Preset> presets();

/// Throws std::out_of_range for unknown names.
ExperimentConfig preset_config(const std::string& name);

/// Parses the JSON-syntax config; throws ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

enum class Precision { Table, Full };

std::string format_csv(const ConvergenceReport& report, Precision precision = Precision::Table);
std::string format_markdown(const ConvergenceReport& report, Precision precision = Precision::Table);
std::string format_report(const ConvergenceReport& report, Precision precision = Precision::Table);

}  // namespace urysohn
