#pragma once

namespace levyball {

/// Gamma function for real x, excluding the poles at x = 0, -1, -2, ...
/// Lanczos approximation (g = 7, 9 terms) with the reflection formula for
/// x < 0.5; relative accuracy is validated to 1e-13 on (0.025, 3) by the
/// fixture suite.
double gamma(double x);

}  // namespace levyball
