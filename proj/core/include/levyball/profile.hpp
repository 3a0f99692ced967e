#pragma once

#include <span>

#include "levyball/constants.hpp"

namespace levyball {

/// The ball profile c_alpha (r^2 - |x|^2)_+^(alpha/2). Vanishes outside the
/// open ball of radius r and decreases strictly in |x| inside it.
class ProfileFunction {
 public:
  ProfileFunction(double radius, StabilityIndex alpha);

  double radius() const { return radius_; }
  double alpha() const { return alpha_.value(); }
  StabilityIndex index() const { return alpha_; }
  double coefficient() const { return c_alpha_; }

  double operator()(std::span<const double> x) const;

  /// One-dimensional section s_r(u) = c_alpha (r^2 - u^2)_+^(alpha/2) and its
  /// derivatives on the open interval |u| < r. The derivatives are the exact
  /// closed forms; the quadrature inner head depends on them.
  double value_1d(double u) const;
  double second_derivative_1d(double u) const;
  double fourth_derivative_1d(double u) const;

 private:
  double radius_;
  StabilityIndex alpha_;
  double c_alpha_;
};

/// Convenience: profile value without building the object.
double profile(std::span<const double> x, double radius, StabilityIndex alpha);

/// Closed-form mean exit time from the ball of radius r for a symmetric
/// stable process with spectral mass mu_total started at x:
///   kappa_alpha * alpha / mu_total * (r^2 - |x|^2)_+^(alpha/2).
/// Zero when |x| >= r. Only the total mass of the spectral measure enters.
double mean_exit_closed_form(std::span<const double> x, double radius,
                             StabilityIndex alpha, double mu_total);

/// Same, parameterized by |x| directly.
double mean_exit_closed_form_radial(double x_norm, double radius,
                                    StabilityIndex alpha, double mu_total);

}  // namespace levyball
