#include "levyball/constants.hpp"

#include "levyball/gamma.hpp"

namespace levyball {

double kappa(StabilityIndex alpha) {
  const double half = alpha.value() / 2.0;
  return 1.0 / (gamma(1.0 - half) * gamma(1.0 + half));
}

double c_alpha(StabilityIndex alpha) {
  return alpha.value() * kappa(alpha) / 2.0;
}

}  // namespace levyball
