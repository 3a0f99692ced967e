#include "levyball/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace levyball {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_core(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) {
    acc += kLanczos[i] / (x - 1.0 + i);
  }
  const double t = x + kLanczosG - 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("gamma: argument must be finite");
  }
  if (x >= 0.5) {
    return lanczos_core(x);
  }
  if (x == std::floor(x)) {
    throw std::domain_error("gamma: pole at non-positive integer argument");
  }
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return M_PI / (std::sin(M_PI * x) * lanczos_core(1.0 - x));
}

}  // namespace levyball
