#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace levyball {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm_squared(std::span<const double> x);
double norm(std::span<const double> x);

/// Small dense square matrix, row-major. Dimensions here are the ambient
/// space dimension d (single digits), so nothing is optimized beyond that.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}
  SquareMatrix(std::size_t dim, std::vector<double> entries);

  static SquareMatrix identity(std::size_t dim);
  static SquareMatrix scaled_identity(std::size_t dim, double s);

  std::size_t dim() const { return dim_; }
  double& at(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  std::span<const double> raw() const { return data_; }

  Vec apply(std::span<const double> x) const;
  double trace() const;

  /// y += s * (M x)
  void apply_accumulate(std::span<const double> x, double s, Vec& y) const;

  /// rank-1 update: M += s * z z^T
  void add_outer(std::span<const double> z, double s);

 private:
  std::size_t dim_;
  std::vector<double> data_;
};

/// Lower-triangular factor L with L L^T = M for a symmetric positive
/// semidefinite M. Pivots below tol * max_diag are treated as exact zeros
/// (their column is zeroed), so rank-deficient covariances factor cleanly.
SquareMatrix cholesky_psd(const SquareMatrix& m, double rel_tol = 1e-12);

}  // namespace levyball
