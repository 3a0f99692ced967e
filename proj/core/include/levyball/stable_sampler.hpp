#pragma once

#include <cmath>
#include <stdexcept>

#include "levyball/constants.hpp"
#include "levyball/rng.hpp"

namespace levyball {

/// c1(alpha) = integral of (1 - cos w) / |w|^(1+alpha) over the real line.
/// Converts Levy-density mass into characteristic-exponent scale: a 1-d
/// symmetric process with Levy density m / |w|^(1+alpha) has exponent
/// m * c1(alpha) * |theta|^alpha.
double c1(StabilityIndex alpha);

/// Scale sigma of a 1-d symmetric alpha-stable law with characteristic
/// function exp(-sigma^alpha |theta|^alpha).
struct StableScale {
  double sigma;

  explicit StableScale(double s) : sigma(s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::domain_error("StableScale: sigma must be positive and finite");
    }
  }
};

/// One draw from the standard (sigma = 1) symmetric alpha-stable law,
/// Chambers-Mallows-Stuck. Consumes exactly two uniforms. alpha = 1 takes the
/// exact Cauchy branch; near alpha = 1 the power factor is evaluated in
/// log1p form, which stays accurate as the exponent (1-alpha)/alpha -> 0.
double sample_standard_sas(StabilityIndex alpha, PathRng& rng);

inline double sample_sas_1d(StabilityIndex alpha, StableScale scale,
                            PathRng& rng) {
  return scale.sigma * sample_standard_sas(alpha, rng);
}

}  // namespace levyball
