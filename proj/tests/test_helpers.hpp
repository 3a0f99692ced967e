#pragma once

// Test-local numerical helpers, deliberately independent of the library
// implementation so they can serve as oracles.

#include <cmath>
#include <cstddef>
#include <vector>

#include "levyball/linalg.hpp"

namespace testing_helpers {

/// Midpoint rule on a logarithmic grid over [lo, hi]; dumb and slow on
/// purpose.
template <typename F>
double log_midpoint(F&& f, double lo, double hi, std::size_t n) {
  const double y_lo = std::log(lo);
  const double step = (std::log(hi) - y_lo) / static_cast<double>(n);
  double sum = 0.0;
  double compensation = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = y_lo + (static_cast<double>(i) + 0.5) * step;
    const double w = std::exp(y);
    const double term = f(w) * w * step;  // dw = w dy
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

/// int_0^delta s^(1-alpha) ds by brute force: log-grid midpoint from a cut
/// deep enough that the remaining mass (relative weight e^(-(2-alpha) K)) is
/// below 1e-13 of the total.
inline double radial_second_moment_oracle(double alpha, double delta,
                                          std::size_t n = 600000) {
  const double cut = delta * std::exp(-30.0 / (2.0 - alpha));
  return log_midpoint([&](double s) { return std::pow(s, 1.0 - alpha); }, cut,
                      delta, n);
}

/// int_delta^infty s^(-1-alpha) ds by brute force on [delta, R] with R large
/// enough that the tail is below double precision at the scales tested.
inline double radial_tail_mass_oracle(double alpha, double delta,
                                      std::size_t n = 400000) {
  const double far = delta * std::exp(50.0 / alpha);
  return log_midpoint([&](double s) { return std::pow(s, -1.0 - alpha); },
                      delta, far, n);
}

// Oscillatory tails by repeated integration by parts:
//   C_k = int_W^inf cos(w) w^(-k-alpha) dw,
//   S_k = int_W^inf sin(w) w^(-k-alpha) dw,
// with C_k = -sin(W) W^(-k-a) + (k+a) S_(k+1) and
//      S_k =  cos(W) W^(-k-a) - (k+a) C_(k+1).
inline double sine_tail(double alpha, double cutoff, int k, int depth);

inline double cosine_tail(double alpha, double cutoff, int k, int depth) {
  if (depth == 0) return 0.0;
  return -std::sin(cutoff) * std::pow(cutoff, -k - alpha) +
         (k + alpha) * sine_tail(alpha, cutoff, k + 1, depth - 1);
}

inline double sine_tail(double alpha, double cutoff, int k, int depth) {
  if (depth == 0) return 0.0;
  return std::cos(cutoff) * std::pow(cutoff, -k - alpha) -
         (k + alpha) * cosine_tail(alpha, cutoff, k + 1, depth - 1);
}

/// Brute-force value of int_R (1 - cos w) |w|^(-1-alpha) dw: Taylor head on
/// [0, 1e-3], midpoint log-grid middle up to 200, integrated-by-parts cosine
/// tail beyond. Good to ~1e-9 absolute.
inline double c1_oracle(double alpha, std::size_t n = 20000000) {
  const double w0 = 1e-3;
  const double head = std::pow(w0, 2.0 - alpha) / (2.0 * (2.0 - alpha)) -
                      std::pow(w0, 4.0 - alpha) / (24.0 * (4.0 - alpha)) +
                      std::pow(w0, 6.0 - alpha) / (720.0 * (6.0 - alpha));
  const double cutoff = 200.0;
  const double mid = log_midpoint(
      [&](double w) {
        return (1.0 - std::cos(w)) * std::pow(w, -1.0 - alpha);
      },
      w0, cutoff, n);
  const double tail = std::pow(cutoff, -alpha) / alpha -
                      cosine_tail(alpha, cutoff, 1, 6);
  return 2.0 * (head + mid + tail);
}

/// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(levyball::SquareMatrix m) {
  const std::size_t d = m.dim();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) off += std::abs(m.at(p, q));
    }
    if (off < 1e-15) break;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        if (std::abs(m.at(p, q)) < 1e-18) continue;
        const double theta = 0.5 * std::atan2(2.0 * m.at(p, q),
                                              m.at(q, q) - m.at(p, p));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (std::size_t k = 0; k < d; ++k) {
          const double mkp = m.at(k, p);
          const double mkq = m.at(k, q);
          m.at(k, p) = c * mkp - s * mkq;
          m.at(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < d; ++k) {
          const double mpk = m.at(p, k);
          const double mqk = m.at(q, k);
          m.at(p, k) = c * mpk - s * mqk;
          m.at(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }
  std::vector<double> eig(d);
  for (std::size_t i = 0; i < d; ++i) eig[i] = m.at(i, i);
  return eig;
}

}  // namespace testing_helpers
