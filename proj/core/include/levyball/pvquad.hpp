#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "levyball/constants.hpp"
#include "levyball/spectral.hpp"

namespace levyball {

/// Controls for the principal-value quadrature.
struct PVQuadSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
  /// Inner symmetrization cutoff (units of w). The effective cutoff may be
  /// widened automatically where direct evaluation of the second difference
  /// would drown in rounding; the widening is covered by the Taylor terms
  /// and accounted for in the error estimate.
  double inner_cutoff = 1e-6;
  /// Outer cutoff W. 0 means automatic: past every breakpoint with margin.
  /// Both support roots must lie inside [-W, W].
  double tail_cutoff = 0.0;
  SupportedRange supported = {};
};

struct PVQuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
};

/// Raised when the adaptive stage cannot meet its tolerance; carries the
/// partial result.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, PVQuadResult partial)
      : std::runtime_error(what), partial_(partial) {}

  const PVQuadResult& partial() const { return partial_; }

 private:
  PVQuadResult partial_;
};

/// How the integrand behaves beyond the outer cutoff W.
enum class TailModel {
  /// f(u + w) = 0 for |w| > W; the tail integrates in closed form to
  /// -f(u) * (2/alpha) * W^(-alpha).
  vanishing_function,
  /// f(u + w) = f(u) for |w| > W (e.g. constant f); the tail vanishes.
  vanishing_difference,
};

/// p.v. integral of [f(u + w) - f(u)] / |w|^(1+alpha) dw over the real line.
///
/// The singular point splits in three zones: (i) |w| <= eps is the even
/// second-difference zone, integrated analytically from the second and
/// fourth derivatives of f at u (supplied in closed form, or estimated by
/// Richardson finite differences); (ii) [eps, W] folded to the positive axis
/// and integrated adaptively with panel edges at every |breakpoint|;
/// (iii) |w| > W in closed form per the tail model.
///
/// Breakpoints are w-coordinates of kinks of w -> f(u + w); u itself must not
/// be one, and f needs two continuous derivatives near u.
PVQuadResult pv_fractional_integral_1d(
    const std::function<double(double)>& f, double u, StabilityIndex alpha,
    const PVQuadSpec& spec = {}, std::span<const double> breakpoints = {},
    std::optional<double> d2f_at_u = std::nullopt,
    std::optional<double> d4f_at_u = std::nullopt,
    TailModel tail = TailModel::vanishing_function);

/// Interval identity of the one-dimensional profile: the p.v. integral of
/// s_r around any interior point u equals -1, independent of u and r.
PVQuadResult getoor_identity_check(double u, double r, StabilityIndex alpha,
                                   const PVQuadSpec& spec = {});

/// Directional operator applied to the d-dimensional profile:
/// K_v S_r(x) = -|v|^alpha for |x| < r. Evaluated through the rotation
/// reduction to the one-dimensional identity along v/|v|.
PVQuadResult apply_Kv(std::span<const double> v, std::span<const double> x,
                      double r, StabilityIndex alpha,
                      const PVQuadSpec& spec = {});

/// Closed form of the anisotropic generator on the profile:
/// K S_r(x) = -sum_j m_j |A z_j|^alpha over the full atom list.
/// Requires a discrete measure and A z != 0 for every atom.
double apply_K(const SpectralMeasure& mu, const LinearMap& a,
               std::span<const double> x, double r, StabilityIndex alpha);

/// Closed form of the process generator on the profile: -|mu| / 2.
double apply_K_nu(const SpectralMeasure& mu, std::span<const double> x,
                  double r, StabilityIndex alpha);

/// Closed form together with the independent quadrature route.
struct GeneratorCheck {
  double closed_form = 0.0;
  double quadrature = 0.0;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool consistent = false;
};

GeneratorCheck apply_K_checked(const SpectralMeasure& mu, const LinearMap& a,
                               std::span<const double> x, double r,
                               StabilityIndex alpha,
                               const PVQuadSpec& spec = {});

GeneratorCheck apply_K_nu_checked(const SpectralMeasure& mu,
                                  std::span<const double> x, double r,
                                  StabilityIndex alpha,
                                  const PVQuadSpec& spec = {});

}  // namespace levyball
