#include "levyball/stable_sampler.hpp"

#include "levyball/gamma.hpp"

namespace levyball {

double c1(StabilityIndex alpha) {
  alpha.require_supported();
  const double a = alpha.value();
  const double t = 1.0 - a;
  // cos(pi a / 2) = sin(pi t / 2); the ratio sin(pi t / 2) / t is smooth
  // through t = 0, so no special-casing of alpha = 1 beyond the exact point.
  const double ratio = (t == 0.0) ? M_PI / 2.0 : std::sin(M_PI * t / 2.0) / t;
  return 2.0 * gamma(2.0 - a) * ratio / a;
}

double sample_standard_sas(StabilityIndex alpha, PathRng& rng) {
  const double a = alpha.value();
  const double angle = M_PI * (rng.uniform_oo() - 0.5);  // uniform (-pi/2, pi/2)
  if (a == 1.0) {
    rng.uniform_oc();  // keep the two-uniform draw pattern of the generic branch
    return std::tan(angle);
  }
  const double exponential = -std::log(rng.uniform_oc());
  const double t = 1.0 - a;
  // sin(a angle) / cos(angle)^(1/a) * (cos(t angle) / W)^(t / a)
  const double leading = std::sin(a * angle) *
                         std::pow(std::cos(angle), -1.0 / a);
  const double cos_t_angle_m1 = -2.0 * std::pow(std::sin(0.5 * t * angle), 2);
  const double log_factor =
      (t / a) * (std::log1p(cos_t_angle_m1) - std::log(exponential));
  return leading * std::exp(log_factor);
}

}  // namespace levyball
