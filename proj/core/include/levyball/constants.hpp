#pragma once

#include <stdexcept>

namespace levyball {

/// Sub-range of (0, 2) in which the quadrature and simulation routines are
/// trusted; closed-form evaluations accept the full open interval.
struct SupportedRange {
  double min = 0.1;
  double max = 1.95;
};

/// Stability index alpha of a symmetric stable process, restricted to (0, 2).
class StabilityIndex {
 public:
  explicit StabilityIndex(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha < 2.0)) {
      throw std::domain_error("StabilityIndex: alpha must lie in (0, 2)");
    }
  }

  double value() const { return alpha_; }

  bool in_range(const SupportedRange& range = {}) const {
    return alpha_ >= range.min && alpha_ <= range.max;
  }

  /// Quadrature/simulation entry points refuse to run outside the supported
  /// sub-range.
  void require_supported(const SupportedRange& range = {}) const {
    if (!in_range(range)) {
      throw std::domain_error(
          "StabilityIndex: alpha outside the numerically supported range");
    }
  }

 private:
  double alpha_;
};

/// kappa_alpha = 1 / (Gamma(1 - alpha/2) Gamma(1 + alpha/2)); the exit-time
/// constant. Strictly positive on (0, 2).
double kappa(StabilityIndex alpha);

/// c_alpha = alpha * kappa_alpha / 2; the profile-function normalization.
double c_alpha(StabilityIndex alpha);

}  // namespace levyball
