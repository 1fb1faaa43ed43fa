#include <cmath>

#include <gtest/gtest.h>

#include "urysohn/errors.hpp"
#include "urysohn/experiments.hpp"

namespace urysohn {
namespace {

TEST(SupError, Examples) {
  const CollocationGrid grid(4, 2);
  const auto quad = composite(gauss_legendre(2), 8);
  const Evaluable ref = [](double s) { return std::sin(s); };
  EXPECT_EQ(sup_error(ref, ref, grid, quad), 0.0);
  EXPECT_NEAR(sup_error([&](double s) { return ref(s) + 1e-3; }, ref, grid, quad), 1e-3, 1e-15);
  EXPECT_NEAR(sup_error([](double s) { return s * s; }, [](double s) { return s; }, grid, quad, 1001), 0.25, 1e-6);
}

TEST(SupError, EvaluationSetContainsNodesAndEndpoints) {
  const CollocationGrid grid(3, 2);
  const auto quad = composite(gauss_legendre(3), 6);
  const auto points = evaluation_points(grid, quad, 11);
  auto contains = [&](double s) { return std::find(points.begin(), points.end(), s) != points.end(); };
  EXPECT_TRUE(contains(0.0));
  EXPECT_TRUE(contains(1.0));
  for (double tau : grid.nodes()) EXPECT_TRUE(contains(tau));
  for (double zeta : quad.nodes()) EXPECT_TRUE(contains(zeta));
  EXPECT_TRUE(std::is_sorted(points.begin(), points.end()));
  // Spike placed at a collocation node is seen.
  const double node = grid.nodes()[3];
  const Evaluable spike = [node](double s) { return s == node ? 1.0 : 0.0; };
  EXPECT_EQ(sup_error(spike, [](double) { return 0.0; }, grid, quad, 11), 1.0);
  EXPECT_THROW(evaluation_points(grid, quad, 1), std::invalid_argument);
}

TEST(EstimateOrder, Examples) {
  EXPECT_NEAR(estimate_order(1e-2, 1.25e-3), 3.0, 1e-12);
  EXPECT_EQ(estimate_order(3.7e-5, 3.7e-5), 0.0);
  EXPECT_NEAR(estimate_order(1.34e-6, 8.37e-8), 4.00, 0.005);
  EXPECT_THROW(estimate_order(0.0, 1e-3), NonPositiveError);
  EXPECT_THROW(estimate_order(1e-3, 0.0), NonPositiveError);
  EXPECT_THROW(estimate_order(-1.0, 1e-3), NonPositiveError);
}

TEST(QuadratureIntervals, Rules) {
  EXPECT_EQ(quadrature_intervals(m_rule::Fixed{256}, 8), 256);
  EXPECT_EQ(quadrature_intervals(m_rule::Multiple{3}, 8), 24);
  EXPECT_EQ(quadrature_intervals(m_rule::Square{}, 8), 64);
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig config;
  config.n_values = {2, 4};
  EXPECT_NO_THROW(config.validate());
  auto broken = config;
  broken.n_values = {4, 2};
  EXPECT_THROW(broken.validate(), ConfigError);
  broken = config;
  broken.n_values = {};
  EXPECT_THROW(broken.validate(), ConfigError);
  broken = config;
  broken.m_rule = m_rule::Fixed{6};
  EXPECT_THROW(broken.validate(), ConfigError);
  broken = config;
  broken.problem_id = "nope";
  EXPECT_THROW(broken.validate(), ConfigError);
  broken = config;
  broken.newton.tol = -1.0;
  EXPECT_THROW(broken.validate(), ConfigError);
  broken = config;
  broken.n_values = {0, 2};
  EXPECT_THROW(broken.validate(), ConfigError);
}

TEST(RunExperiment, LinearProblemIsExactAndOrdersBlank) {
  for (int rho : {2, 3}) {
    ExperimentConfig config;
    config.problem_id = "linear-constant";
    config.r = 2;
    config.quad_rho = rho;
    config.n_values = {2, 4, 8};
    config.m_rule = m_rule::Multiple{2};
    const auto report = run_experiment(config);
    ASSERT_EQ(report.rows.size(), 3u);
    for (const auto& row : report.rows) {
      EXPECT_LE(row.err_mod, 1e-12);
      EXPECT_LE(row.err_iter, 1e-12);
      if (row.err_extrap) EXPECT_LE(*row.err_extrap, 1e-12);
      EXPECT_FALSE(row.delta_mod);
      EXPECT_FALSE(row.delta_iter);
      EXPECT_FALSE(row.delta_extrap);
    }
  }
}

TEST(RunExperiment, RowLayoutAndDeltaPlacement) {
  ExperimentConfig config;
  config.problem_id = "reciprocal-sum";
  config.r = 1;
  config.n_values = {2, 4, 8, 12, 24};
  config.m_rule = m_rule::Multiple{4};
  config.eval_grid_points = 201;
  const auto report = run_experiment(config);
  ASSERT_EQ(report.rows.size(), 5u);
  const auto& rows = report.rows;
  EXPECT_EQ(rows[0].m, 8);
  EXPECT_EQ(rows[4].m, 96);
  EXPECT_FALSE(rows[0].delta_mod);
  EXPECT_FALSE(rows[0].err_extrap);
  EXPECT_TRUE(rows[1].err_extrap);
  EXPECT_FALSE(rows[1].delta_extrap);
  EXPECT_TRUE(rows[2].delta_mod);
  EXPECT_TRUE(rows[2].delta_extrap);
  // 12 is not 2*8, and 6 is not in n_values.
  EXPECT_FALSE(rows[3].delta_mod);
  EXPECT_FALSE(rows[3].err_extrap);
  // 24 = 2*12 with 12 present; its extrapolation has no predecessor pair.
  EXPECT_TRUE(rows[4].delta_mod);
  EXPECT_TRUE(rows[4].err_extrap);
  EXPECT_FALSE(rows[4].delta_extrap);
  for (const auto& row : rows) EXPECT_GE(row.newton_iterations, 1);
}

TEST(RunExperiment, DeterministicAcrossRuns) {
  ExperimentConfig config;
  config.r = 2;
  config.n_values = {2, 4, 8};
  config.m_rule = m_rule::Square{};
  const auto a = run_experiment(config);
  const auto b = run_experiment(config);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].err_mod, b.rows[i].err_mod);
    EXPECT_EQ(a.rows[i].err_iter, b.rows[i].err_iter);
    EXPECT_EQ(a.rows[i].err_extrap, b.rows[i].err_extrap);
    EXPECT_EQ(a.rows[i].delta_mod, b.rows[i].delta_mod);
    EXPECT_EQ(a.rows[i].delta_iter, b.rows[i].delta_iter);
    EXPECT_EQ(a.rows[i].delta_extrap, b.rows[i].delta_extrap);
  }
  EXPECT_EQ(format_csv(a, Precision::Full), format_csv(b, Precision::Full));
}

TEST(RunExperiment, MidpointStudyRefinesAndExtrapolationHelps) {
  const auto report = run_experiment(preset_config("table-4.4"));
  const auto& rows = report.rows;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].err_iter > 1e-13) EXPECT_LT(rows[i].err_iter, rows[i - 1].err_iter);
  }
  for (const auto& row : rows) {
    if (row.err_extrap && *row.err_extrap > 1e-12 && row.err_iter > 1e-12) EXPECT_LT(*row.err_extrap, row.err_iter);
  }
}

TEST(RunExperiment, SolverErrorsNameTheFailingN) {
  ExperimentConfig config;
  config.n_values = {2, 4};
  config.m_rule = m_rule::Fixed{16};
  config.newton.max_iters = 1;
  try {
    run_experiment(config);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_NE(std::string(e.what()).find("n=2"), std::string::npos);
  }
}

TEST(Presets, Registry) {
  const auto all = presets();
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].name, "table-4.4");
  EXPECT_EQ(all[1].name, "table-4.5-analog");
  EXPECT_EQ(all[2].name, "table-4.6");
  for (const auto& p : all) EXPECT_NO_THROW(p.config.validate());
  const auto square = preset_config("table-4.6");
  EXPECT_EQ(square.r, 2);
  EXPECT_TRUE(std::holds_alternative<m_rule::Square>(square.m_rule));
  EXPECT_THROW(preset_config("table-1.1"), std::out_of_range);
}

TEST(Report, CsvFormat) {
  ConvergenceReport report;
  ConvergenceRow first;
  first.n = 2;
  first.m = 256;
  first.err_mod = 6.9171e-3;
  first.err_iter = 3.2999e-4;
  ConvergenceRow second;
  second.n = 4;
  second.m = 256;
  second.err_mod = 1.0291e-3;
  second.delta_mod = 2.7488;
  second.err_iter = 2.131e-5;
  second.delta_iter = 3.9528;
  second.err_extrap = 7.3055e-7;
  report.rows = {first, second};
  EXPECT_EQ(format_csv(report),
            "n,m,err_mod,delta_mod,err_iter,delta_iter,err_extrap,delta_extrap\n"
            "2,256,6.92e-03,,3.30e-04,,,\n"
            "4,256,1.03e-03,2.75,2.13e-05,3.95,7.31e-07,\n");
  const auto full = format_csv(report, Precision::Full);
  EXPECT_NE(full.find("0.0069170999999999998"), std::string::npos);
  const auto md = format_markdown(report);
  EXPECT_NE(md.find("| 4 | 256 | 1.03e-03 | 2.75 | 2.13e-05 | 3.95 | 7.31e-07 |  |"), std::string::npos);
  report.config.output_format = OutputFormat::Markdown;
  EXPECT_EQ(format_report(report), md);
}

}  // namespace
}  // namespace urysohn
