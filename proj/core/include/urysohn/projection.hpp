#pragma once

/**
 * Piecewise polynomials of degree <= r-1 on the uniform partition
 * 0 < 1/n < ... < 1, and the interpolatory projection at the r Gauss points
 * of each subinterval.
 *
 * Elements are stored by their values at the collocation nodes
 * tau = t_k + q_i h (flat index k*r + i, 0-based) and evaluated with the
 * barycentric Lagrange formula on the owning subinterval. Subintervals are
 * half-open [t_k, t_{k+1}) except the last, which is closed at 1.
 */

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace urysohn {

class CollocationGrid {
 public:
  CollocationGrid(int n, int r);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  double h() const noexcept { return h_; }
  int size() const noexcept { return n_ * r_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  /// Gauss-Legendre zeros on [0,1].
  const std::vector<double>& gauss_points() const noexcept { return gauss_points_; }
  const std::vector<double>& nodes() const noexcept { return nodes_; }

  /// 0-based index of the subinterval owning s (s in [0,1]).
  int subinterval_of(double s) const;

  /// Fills basis[i] with the i-th Lagrange cardinal function of subinterval
  /// `subinterval_of(s)` evaluated at s, and returns that subinterval.
  int lagrange_basis(double s, std::span<double> basis) const;

  /// Dense matrix mapping node values to values at `points` (points.size() x n*r).
  Eigen::MatrixXd interpolation_matrix(std::span<const double> points) const;

 private:
  int n_;
  int r_;
  double h_;
  std::vector<double> breakpoints_;
  std::vector<double> gauss_points_;
  std::vector<double> barycentric_weights_;
  std::vector<double> nodes_;
};

class PiecewisePolynomial {
 public:
  PiecewisePolynomial(CollocationGrid grid, std::vector<double> values);

  const CollocationGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double operator()(double s) const;

 private:
  CollocationGrid grid_;
  std::vector<double> values_;
};

/// The unique element of X_n taking `values_at_nodes` at the collocation nodes.
PiecewisePolynomial interpolate(const CollocationGrid& grid, std::vector<double> values_at_nodes);

/// Throws std::out_of_range for s outside [0,1].
double evaluate(const PiecewisePolynomial& p, double s);

/// Q_n x: interpolates x at the collocation nodes.
PiecewisePolynomial project(const CollocationGrid& grid, const std::function<double(double)>& x);

}  // namespace urysohn
