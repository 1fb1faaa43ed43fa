#include "urysohn/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "urysohn/quadrature.hpp"

namespace urysohn {

namespace {

void check_unit_interval(double s, const char* where) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::out_of_range(std::string(where) + ": point " + std::to_string(s) + " outside [0,1]");
  }
}

}  // namespace

CollocationGrid::CollocationGrid(int n, int r) : n_(n), r_(r), h_(0.0) {
  if (n < 1) throw std::invalid_argument("CollocationGrid: n must be >= 1");
  if (r < 1 || r > 10) throw std::invalid_argument("CollocationGrid: r must be in [1, 10]");
  h_ = 1.0 / n;
  gauss_points_ = gauss_legendre(r).nodes();

  barycentric_weights_.assign(r, 1.0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (j != i) barycentric_weights_[i] /= (gauss_points_[i] - gauss_points_[j]);
    }
  }

  breakpoints_.reserve(n + 1);
  for (int k = 0; k <= n; ++k) breakpoints_.push_back(static_cast<double>(k) / n);
  nodes_.reserve(static_cast<std::size_t>(n) * r);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < r; ++i) nodes_.push_back(breakpoints_[k] + gauss_points_[i] * h_);
  }
}

int CollocationGrid::subinterval_of(double s) const {
  check_unit_interval(s, "CollocationGrid::subinterval_of");
  int k = static_cast<int>(std::floor(s * n_));
  k = std::clamp(k, 0, n_ - 1);
  // s * n can round across a breakpoint; settle against the stored breakpoints.
  while (k > 0 && s < breakpoints_[k]) --k;
  while (k < n_ - 1 && s >= breakpoints_[k + 1]) ++k;
  return k;
}

int CollocationGrid::lagrange_basis(double s, std::span<double> basis) const {
  if (basis.size() != static_cast<std::size_t>(r_)) {
    throw std::invalid_argument("CollocationGrid::lagrange_basis: basis span must have r entries");
  }
  const int k = subinterval_of(s);
  std::fill(basis.begin(), basis.end(), 0.0);
  if (r_ == 1) {
    basis[0] = 1.0;
    return k;
  }
  for (int i = 0; i < r_; ++i) {
    if (s == nodes_[k * r_ + i]) {
      basis[i] = 1.0;
      return k;
    }
  }
  const double x = (s - breakpoints_[k]) / h_;
  double denom = 0.0;
  for (int i = 0; i < r_; ++i) {
    const double diff = x - gauss_points_[i];
    if (diff == 0.0) {
      std::fill(basis.begin(), basis.end(), 0.0);
      basis[i] = 1.0;
      return k;
    }
    basis[i] = barycentric_weights_[i] / diff;
    denom += basis[i];
  }
  for (int i = 0; i < r_; ++i) basis[i] /= denom;
  return k;
}

Eigen::MatrixXd CollocationGrid::interpolation_matrix(std::span<const double> points) const {
  Eigen::MatrixXd matrix = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(points.size()), size());
  std::vector<double> basis(r_);
  for (std::size_t a = 0; a < points.size(); ++a) {
    const int k = lagrange_basis(points[a], basis);
    for (int i = 0; i < r_; ++i) matrix(static_cast<Eigen::Index>(a), k * r_ + i) = basis[i];
  }
  return matrix;
}

PiecewisePolynomial::PiecewisePolynomial(CollocationGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid_.size())) {
    throw std::invalid_argument("PiecewisePolynomial: expected " + std::to_string(grid_.size()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("PiecewisePolynomial: non-finite node value");
  }
}

double PiecewisePolynomial::operator()(double s) const {
  const int r = grid_.r();
  double basis_storage[10];
  std::span<double> basis(basis_storage, static_cast<std::size_t>(r));
  const int k = grid_.lagrange_basis(s, basis);
  double value = 0.0;
  for (int i = 0; i < r; ++i) value += basis[i] * values_[k * r + i];
  return value;
}

PiecewisePolynomial interpolate(const CollocationGrid& grid, std::vector<double> values_at_nodes) {
  return PiecewisePolynomial(grid, std::move(values_at_nodes));
}

double evaluate(const PiecewisePolynomial& p, double s) { return p(s); }

PiecewisePolynomial project(const CollocationGrid& grid, const std::function<double(double)>& x) {
  std::vector<double> values;
  values.reserve(grid.nodes().size());
  for (double tau : grid.nodes()) values.push_back(x(tau));
  return PiecewisePolynomial(grid, std::move(values));
}

}  // namespace urysohn
