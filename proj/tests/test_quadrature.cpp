#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "urysohn/quadrature.hpp"

namespace urysohn {
namespace {

// Root of 6t^2 - 6t + 1 on [a, b] by bisection.
double bisect_shifted_legendre2(double a, double b) {
  auto p = [](double t) { return 6.0 * t * t - 6.0 * t + 1.0; };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (a + b);
    if ((p(a) < 0.0) == (p(mid) < 0.0)) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

TEST(GaussLegendre, MidpointRule) {
  const auto rule = gauss_legendre(1);
  ASSERT_EQ(rule.rho(), 1);
  EXPECT_EQ(rule.nodes()[0], 0.5);
  EXPECT_EQ(rule.weights()[0], 1.0);
  EXPECT_EQ(rule.degree_of_precision(), 1);
}

TEST(GaussLegendre, TwoPointMatchesShiftedLegendreRoots) {
  const auto rule = gauss_legendre(2);
  EXPECT_NEAR(rule.nodes()[0], bisect_shifted_legendre2(0.0, 0.5), 1e-15);
  EXPECT_NEAR(rule.nodes()[1], bisect_shifted_legendre2(0.5, 1.0), 1e-15);
  EXPECT_NEAR(rule.nodes()[0], (3.0 - std::sqrt(3.0)) / 6.0, 1e-15);
  EXPECT_NEAR(rule.weights()[0], 0.5, 1e-15);
  EXPECT_NEAR(rule.weights()[1], 0.5, 1e-15);
  EXPECT_EQ(rule.degree_of_precision(), 3);
}

TEST(GaussLegendre, ThreePointClosedForm) {
  const auto rule = gauss_legendre(3);
  const double offset = std::sqrt(15.0) / 10.0;
  EXPECT_NEAR(rule.nodes()[0], 0.5 - offset, 1e-15);
  EXPECT_NEAR(rule.nodes()[1], 0.5, 1e-15);
  EXPECT_NEAR(rule.nodes()[2], 0.5 + offset, 1e-15);
  EXPECT_NEAR(rule.weights()[0], 5.0 / 18.0, 1e-15);
  EXPECT_NEAR(rule.weights()[1], 8.0 / 18.0, 1e-15);
  EXPECT_NEAR(rule.weights()[2], 5.0 / 18.0, 1e-15);
}

TEST(GaussLegendre, RejectsOutOfRange) {
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
  EXPECT_THROW(gauss_legendre(21), std::invalid_argument);
  EXPECT_NO_THROW(gauss_legendre(20));
}

TEST(GaussLegendre, InvariantsForAllSupportedRho) {
  for (int rho = 1; rho <= 20; ++rho) {
    SCOPED_TRACE(rho);
    const auto rule = gauss_legendre(rho);
    double sum = 0.0;
    for (int i = 0; i < rho; ++i) {
      EXPECT_GT(rule.nodes()[i], 0.0);
      EXPECT_LT(rule.nodes()[i], 1.0);
      if (i > 0) EXPECT_GT(rule.nodes()[i], rule.nodes()[i - 1]);
      sum += rule.weights()[i];
      // Symmetry about 1/2.
      EXPECT_NEAR(rule.nodes()[i] + rule.nodes()[rho - 1 - i], 1.0, 1e-14);
      EXPECT_NEAR(rule.weights()[i], rule.weights()[rho - 1 - i], 1e-14);
    }
    EXPECT_NEAR(sum, 1.0, 1e-14);
    const auto q = composite(rule, 1);
    for (int k = 0; k <= rule.degree_of_precision(); ++k) {
      const double value = integrate(q, [k](double t) { return std::pow(t, k); });
      EXPECT_NEAR(value, 1.0 / (k + 1), 1e-13) << "k=" << k;
    }
  }
}

TEST(Composite, MidpointsOfHalves) {
  const auto q = composite(gauss_legendre(1), 2);
  ASSERT_EQ(q.size(), 2);
  EXPECT_EQ(q.nodes()[0], 0.25);
  EXPECT_EQ(q.nodes()[1], 0.75);
  EXPECT_EQ(q.weights()[0], 0.5);
  EXPECT_EQ(q.weights()[1], 0.5);
  EXPECT_EQ(q.h_tilde(), 0.5);
}

TEST(Composite, TwoPointOnHalves) {
  const auto base = gauss_legendre(2);
  const auto q = composite(base, 2);
  ASSERT_EQ(q.size(), 4);
  const double mu0 = (3.0 - std::sqrt(3.0)) / 6.0;
  const double mu1 = (3.0 + std::sqrt(3.0)) / 6.0;
  EXPECT_NEAR(q.nodes()[0], mu0 / 2.0, 1e-15);
  EXPECT_NEAR(q.nodes()[1], mu1 / 2.0, 1e-15);
  EXPECT_NEAR(q.nodes()[2], 0.5 + mu0 / 2.0, 1e-15);
  EXPECT_NEAR(q.nodes()[3], 0.5 + mu1 / 2.0, 1e-15);
  EXPECT_NEAR(q.nodes()[0], 0.10566243270259355, 1e-15);
  EXPECT_NEAR(q.nodes()[3], 0.89433756729740645, 1e-15);
}

TEST(Composite, SingleIntervalIsBase) {
  const auto base = gauss_legendre(2);
  const auto q = composite(base, 1);
  EXPECT_EQ(q.nodes(), base.nodes());
  EXPECT_EQ(q.weights(), base.weights());
  EXPECT_EQ(q.breakpoints(), (std::vector<double>{0.0, 1.0}));
}

TEST(Composite, LayoutIsSubintervalMajor) {
  for (int rho : {1, 2, 3, 5}) {
    for (int m : {1, 3, 7, 16}) {
      const auto q = composite(gauss_legendre(rho), m);
      ASSERT_EQ(q.size(), m * rho);
      double sum = 0.0;
      for (int j = 0; j < m; ++j) {
        for (int i = 0; i < rho; ++i) {
          const double node = q.nodes()[j * rho + i];
          EXPECT_GT(node, q.breakpoints()[j]);
          EXPECT_LT(node, q.breakpoints()[j + 1]);
          sum += q.weights()[j * rho + i];
        }
      }
      for (int k = 1; k < q.size(); ++k) EXPECT_GT(q.nodes()[k], q.nodes()[k - 1]);
      EXPECT_NEAR(sum, 1.0, 1e-13);
      for (int k = 0; k <= 2 * rho - 1; ++k) {
        EXPECT_NEAR(integrate(q, [k](double t) { return std::pow(t, k); }), 1.0 / (k + 1), 1e-13);
      }
    }
  }
  EXPECT_THROW(composite(gauss_legendre(2), 0), std::invalid_argument);
}

TEST(Integrate, TrivialValues) {
  for (int m : {1, 5, 64}) {
    const auto q = composite(gauss_legendre(3), m);
    EXPECT_NEAR(integrate(q, [](double) { return 1.0; }), 1.0, 1e-14);
  }
  const auto q2 = composite(gauss_legendre(2), 1);
  EXPECT_NEAR(integrate(q2, [](double t) { return t * t * t; }), 0.25, 1e-15);
}

TEST(Integrate, ExponentialErrorRatio) {
  const double exact = std::numbers::e - 1.0;
  auto error = [&](int m) {
    return std::abs(integrate(composite(gauss_legendre(2), m), [](double t) { return std::exp(t); }) - exact);
  };
  const double ratio = error(16) / error(32);
  EXPECT_GT(ratio, 16.0 * 0.9);
  EXPECT_LT(ratio, 16.0 * 1.1);
}

TEST(Integrate, CompositeErrorOrder) {
  const double exact = std::numbers::e - 1.0;
  for (int rho : {1, 2}) {
    auto error = [&](int m) {
      return std::abs(integrate(composite(gauss_legendre(rho), m), [](double t) { return std::exp(t); }) - exact);
    };
    for (int m : {8, 16, 32, 64}) {
      const double order = std::log2(error(m) / error(2 * m));
      EXPECT_NEAR(order, 2.0 * rho, 0.2) << "rho=" << rho << " m=" << m;
    }
  }
}

TEST(Integrate, SamplesMatchFunctionForm) {
  const auto q = composite(gauss_legendre(4), 9);
  std::vector<double> samples;
  for (double t : q.nodes()) samples.push_back(std::sin(3.0 * t));
  EXPECT_EQ(integrate_samples(q, samples), integrate(q, [](double t) { return std::sin(3.0 * t); }));
  samples.pop_back();
  EXPECT_THROW(integrate_samples(q, samples), std::invalid_argument);
}

}  // namespace
}  // namespace urysohn
