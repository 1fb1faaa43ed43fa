#pragma once

/**
 * Gauss-Legendre rules on [0,1] and their composite form on the uniform
 * partition 0 < 1/m < ... < 1.
 *
 * The composite rule stores its nodes and weights as flat vectors laid out
 * subinterval-major: the node with flat index j*rho + i (0-based) is
 * s_j + mu_i * h~, so the Nystrom operator reduces to one weighted dot
 * product over that vector.
 */

#include <functional>
#include <span>
#include <vector>

namespace urysohn {

class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights, int degree_of_precision);

  int rho() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Largest monomial degree integrated exactly.
  int degree_of_precision() const noexcept { return degree_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  int degree_;
};

/// rho-point Gauss-Legendre rule mapped to [0,1]. Accepts 1 <= rho <= 20.
QuadratureRule gauss_legendre(int rho);

class CompositeQuadrature {
 public:
  CompositeQuadrature(QuadratureRule base, int m);

  const QuadratureRule& base() const noexcept { return base_; }
  int m() const noexcept { return m_; }
  int rho() const noexcept { return base_.rho(); }
  double h_tilde() const noexcept { return h_tilde_; }
  /// Total node count m * rho.
  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

 private:
  QuadratureRule base_;
  int m_;
  double h_tilde_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> breakpoints_;
};

CompositeQuadrature composite(const QuadratureRule& base, int m);

/// Sum of w_k f(zeta_k), accumulated in flat index order.
double integrate(const CompositeQuadrature& q, const std::function<double(double)>& f);

/// Weighted sum of already-sampled values; values.size() must equal q.size().
double integrate_samples(const CompositeQuadrature& q, std::span<const double> values);

}  // namespace urysohn
