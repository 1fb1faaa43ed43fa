#include "urysohn/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace urysohn {

namespace {

constexpr int kMaxRho = 20;
constexpr double kNodeTolerance = 1e-15;
constexpr int kMaxNewtonSteps = 100;

struct LegendreValue {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

LegendreValue legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  if (n == 0) return {1.0, 0.0};
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               int degree_of_precision)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), degree_(degree_of_precision) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw std::invalid_argument("QuadratureRule: nodes and weights must be non-empty and equal length");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > 0.0 && nodes_[i] < 1.0)) {
      throw std::invalid_argument("QuadratureRule: nodes must lie in (0,1)");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw std::invalid_argument("QuadratureRule: nodes must be strictly increasing");
    }
  }
}

QuadratureRule gauss_legendre(int rho) {
  if (rho < 1 || rho > kMaxRho) {
    throw std::invalid_argument("gauss_legendre: rho must be in [1, 20], got " + std::to_string(rho));
  }
  // Roots of P_rho on [-1,1]; the negative half is found and mirrored so the
  // rule is exactly symmetric about 1/2 after mapping.
  std::vector<double> x(rho);
  std::vector<double> w(rho);
  const int half = (rho + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-angle guess for the i-th largest root.
    double root = std::cos(std::numbers::pi * (i + 0.75) / (rho + 0.5));
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
      const auto [p, dp] = legendre(rho, root);
      const double delta = p / dp;
      root -= delta;
      if (std::abs(delta) <= kNodeTolerance) break;
    }
    const double dp = legendre(rho, root).dp;
    const double weight = 2.0 / ((1.0 - root * root) * dp * dp);
    x[i] = -root;
    x[rho - 1 - i] = root;
    w[i] = weight;
    w[rho - 1 - i] = weight;
  }
  if (rho % 2 == 1) x[rho / 2] = 0.0;

  std::vector<double> nodes(rho);
  std::vector<double> weights(rho);
  for (int i = 0; i < rho; ++i) {
    nodes[i] = 0.5 * (1.0 + x[i]);
    weights[i] = 0.5 * w[i];
  }
  // Mirror once more in [0,1] coordinates; 0.5*(1+x) and 0.5*(1-x) need not sum to 1 bitwise.
  for (int i = 0; i < rho / 2; ++i) nodes[rho - 1 - i] = 1.0 - nodes[i];
  return QuadratureRule(std::move(nodes), std::move(weights), 2 * rho - 1);
}

CompositeQuadrature::CompositeQuadrature(QuadratureRule base, int m)
    : base_(std::move(base)), m_(m), h_tilde_(0.0) {
  if (m < 1) throw std::invalid_argument("composite: m must be >= 1, got " + std::to_string(m));
  h_tilde_ = 1.0 / m;
  const int rho = base_.rho();
  nodes_.reserve(static_cast<std::size_t>(m) * rho);
  weights_.reserve(static_cast<std::size_t>(m) * rho);
  breakpoints_.reserve(m + 1);
  for (int j = 0; j <= m; ++j) breakpoints_.push_back(static_cast<double>(j) / m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < rho; ++i) {
      nodes_.push_back(breakpoints_[j] + base_.nodes()[i] * h_tilde_);
      weights_.push_back(h_tilde_ * base_.weights()[i]);
    }
  }
}

CompositeQuadrature composite(const QuadratureRule& base, int m) { return CompositeQuadrature(base, m); }

double integrate(const CompositeQuadrature& q, const std::function<double(double)>& f) {
  double sum = 0.0;
  const auto& nodes = q.nodes();
  const auto& weights = q.weights();
  for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * f(nodes[k]);
  return sum;
}

double integrate_samples(const CompositeQuadrature& q, std::span<const double> values) {
  if (values.size() != q.nodes().size()) {
    throw std::invalid_argument("integrate_samples: expected " + std::to_string(q.size()) + " values");
  }
  double sum = 0.0;
  const auto& weights = q.weights();
  for (std::size_t k = 0; k < values.size(); ++k) sum += weights[k] * values[k];
  return sum;
}

}  // namespace urysohn
