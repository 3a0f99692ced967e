#include "levyball/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace levyball {

namespace {

double norm_squared(std::span<const double> x) {
  double acc = 0.0;
  for (double xi : x) acc += xi * xi;
  return acc;
}

void require_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::domain_error("profile: radius must be positive and finite");
  }
}

}  // namespace

ProfileFunction::ProfileFunction(double radius, StabilityIndex alpha)
    : radius_(radius), alpha_(alpha), c_alpha_(c_alpha(alpha)) {
  require_radius(radius);
}

double ProfileFunction::operator()(std::span<const double> x) const {
  // (r^2 - |x|^2)_+ computed as max(.., 0) before exponentiation, so the
  // outside region yields exactly 0 rather than NaN.
  const double gap = std::max(radius_ * radius_ - norm_squared(x), 0.0);
  return c_alpha_ * std::pow(gap, alpha_.value() / 2.0);
}

double ProfileFunction::value_1d(double u) const {
  const double gap = std::max(radius_ * radius_ - u * u, 0.0);
  return c_alpha_ * std::pow(gap, alpha_.value() / 2.0);
}

double ProfileFunction::second_derivative_1d(double u) const {
  const double a = alpha_.value();
  const double g = radius_ * radius_ - u * u;
  if (!(g > 0.0)) {
    throw std::domain_error("ProfileFunction: derivative outside support");
  }
  return c_alpha_ * a * std::pow(g, a / 2.0 - 2.0) * ((a - 1.0) * u * u - radius_ * radius_);
}

double ProfileFunction::fourth_derivative_1d(double u) const {
  const double p = alpha_.value() / 2.0;
  const double g = radius_ * radius_ - u * u;
  if (!(g > 0.0)) {
    throw std::domain_error("ProfileFunction: derivative outside support");
  }
  const double u2 = u * u;
  const double term = 12.0 * std::pow(g, p - 2.0) -
                      48.0 * (p - 2.0) * u2 * std::pow(g, p - 3.0) +
                      16.0 * (p - 2.0) * (p - 3.0) * u2 * u2 * std::pow(g, p - 4.0);
  return c_alpha_ * p * (p - 1.0) * term;
}

double profile(std::span<const double> x, double radius, StabilityIndex alpha) {
  return ProfileFunction(radius, alpha)(x);
}

double mean_exit_closed_form_radial(double x_norm, double radius,
                                    StabilityIndex alpha, double mu_total) {
  require_radius(radius);
  if (!(mu_total > 0.0) || !std::isfinite(mu_total)) {
    throw std::domain_error("mean_exit_closed_form: mu_total must be positive");
  }
  const double gap = std::max(radius * radius - x_norm * x_norm, 0.0);
  return kappa(alpha) * alpha.value() / mu_total *
         std::pow(gap, alpha.value() / 2.0);
}

double mean_exit_closed_form(std::span<const double> x, double radius,
                             StabilityIndex alpha, double mu_total) {
  return mean_exit_closed_form_radial(std::sqrt(norm_squared(x)), radius, alpha,
                                      mu_total);
}

}  // namespace levyball
