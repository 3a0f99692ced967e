#include "levyball/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace levyball {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm_squared(std::span<const double> x) { return dot(x, x); }

double norm(std::span<const double> x) { return std::sqrt(norm_squared(x)); }

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim * dim) {
    throw std::invalid_argument("SquareMatrix: entry count != dim^2");
  }
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  return scaled_identity(dim, 1.0);
}

SquareMatrix SquareMatrix::scaled_identity(std::size_t dim, double s) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = s;
  return m;
}

Vec SquareMatrix::apply(std::span<const double> x) const {
  Vec y(dim_, 0.0);
  apply_accumulate(x, 1.0, y);
  return y;
}

void SquareMatrix::apply_accumulate(std::span<const double> x, double s,
                                    Vec& y) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += data_[i * dim_ + j] * x[j];
    y[i] += s * acc;
  }
}

double SquareMatrix::trace() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += at(i, i);
  return acc;
}

void SquareMatrix::add_outer(std::span<const double> z, double s) {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      at(i, j) += s * z[i] * z[j];
    }
  }
}

SquareMatrix cholesky_psd(const SquareMatrix& m, double rel_tol) {
  const std::size_t d = m.dim();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < d; ++i) max_diag = std::max(max_diag, m.at(i, i));
  const double tol = rel_tol * std::max(max_diag, 1e-300);

  SquareMatrix l(d);
  for (std::size_t j = 0; j < d; ++j) {
    double pivot = m.at(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l.at(j, k) * l.at(j, k);
    if (pivot < -tol) {
      throw std::domain_error("cholesky_psd: matrix is not PSD");
    }
    if (pivot <= tol) {
      // semidefinite direction: zero column
      continue;
    }
    const double root = std::sqrt(pivot);
    l.at(j, j) = root;
    for (std::size_t i = j + 1; i < d; ++i) {
      double acc = m.at(i, j);
      for (std::size_t k = 0; k < j; ++k) acc -= l.at(i, k) * l.at(j, k);
      l.at(i, j) = acc / root;
    }
  }
  return l;
}

}  // namespace levyball
