#include "levyball/pvquad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "levyball/linalg.hpp"
#include "levyball/profile.hpp"
#include "levyball/quadrature.hpp"

namespace levyball {

namespace {

constexpr double kMachineEps = std::numeric_limits<double>::epsilon();

struct InnerDerivatives {
  double d2 = 0.0;
  double d4 = 0.0;
  double cert = 0.0;  // absolute uncertainty carried into the head terms
};

// Richardson 5-point stencils; only used when the caller has no closed form.
InnerDerivatives estimate_derivatives(const std::function<double(double)>& f,
                                      double u, double fu, double window) {
  const double scale = std::max(1.0, std::abs(u));
  const double h = std::min(5e-3 * scale, window / 8.0);
  const double fp1 = f(u + h), fm1 = f(u - h);
  const double fp2 = f(u + 2.0 * h), fm2 = f(u - 2.0 * h);
  InnerDerivatives out;
  out.d2 = (-fp2 + 16.0 * fp1 - 30.0 * fu + 16.0 * fm1 - fm2) / (12.0 * h * h);
  out.d4 = (fp2 - 4.0 * fp1 + 6.0 * fu - 4.0 * fm1 + fm2) / (h * h * h * h);
  const double m = std::max({1.0, std::abs(fu), std::abs(fp1), std::abs(fm1)});
  out.cert = 6.0 * kMachineEps * m / (h * h) + 1e-8 * std::abs(out.d2);
  return out;
}

double fold_breakpoint_window(std::span<const double> breakpoints) {
  double window = std::numeric_limits<double>::infinity();
  for (double b : breakpoints) window = std::min(window, std::abs(b));
  return window;
}

}  // namespace

PVQuadResult pv_fractional_integral_1d(const std::function<double(double)>& f,
                                       double u, StabilityIndex alpha,
                                       const PVQuadSpec& spec,
                                       std::span<const double> breakpoints,
                                       std::optional<double> d2f_at_u,
                                       std::optional<double> d4f_at_u,
                                       TailModel tail) {
  alpha.require_supported(spec.supported);
  const double a = alpha.value();
  if (!(spec.inner_cutoff > 0.0) || !(spec.abs_tol > 0.0) ||
      !(spec.rel_tol > 0.0)) {
    throw std::invalid_argument("PVQuadSpec: tolerances and cutoffs must be positive");
  }

  const double fu = f(u);
  const double window = fold_breakpoint_window(breakpoints);
  if (!(window > 0.0)) {
    throw std::invalid_argument("pv_fractional_integral_1d: u must not be a breakpoint");
  }

  // Outer cutoff: every breakpoint inside, with margin.
  double cutoff = spec.tail_cutoff;
  if (cutoff <= 0.0) {
    double farthest = std::max(1.0, std::abs(u));
    for (double b : breakpoints) farthest = std::max(farthest, std::abs(b));
    cutoff = 2.0 * farthest;
  } else {
    for (double b : breakpoints) {
      if (std::abs(b) >= cutoff) {
        throw std::invalid_argument(
            "pv_fractional_integral_1d: breakpoint outside [-W, W]");
      }
    }
  }

  // Derivatives at u for the inner head.
  InnerDerivatives deriv;
  if (d2f_at_u) {
    deriv.d2 = *d2f_at_u;
    deriv.d4 = d4f_at_u.value_or(0.0);
    if (!d4f_at_u) {
      const double fin_window = std::isfinite(window) ? window : cutoff;
      deriv.d4 = estimate_derivatives(f, u, fu, fin_window).d4;
    }
  } else {
    const double fin_window = std::isfinite(window) ? window : cutoff;
    deriv = estimate_derivatives(f, u, fu, fin_window);
  }

  // Inner cutoff: widen past the rounding wall of the direct second
  // difference, shrink below curvature growth and the nearest kink.
  const double magnitude = std::max(1.0, std::abs(fu));
  const double rounding_budget = std::max(0.1 * spec.abs_tol, 1e-13);
  const double eps_round =
      std::pow(64.0 * kMachineEps * magnitude / rounding_budget, 1.0 / a);
  double eps = std::max(spec.inner_cutoff, eps_round);
  if (std::isfinite(window)) eps = std::min(eps, 0.25 * window);
  eps = std::min(eps, cutoff / 8.0);
  if (std::abs(deriv.d4) > 0.0) {
    const double curvature_scale =
        std::sqrt(std::max(std::abs(deriv.d2), 1e-3 * magnitude) / std::abs(deriv.d4));
    eps = std::min(eps, std::max(0.1 * curvature_scale, spec.inner_cutoff));
  }
  if (!(eps > 0.0) || !(eps < cutoff)) {
    throw std::invalid_argument("pv_fractional_integral_1d: inner cutoff >= W");
  }

  // (i) head on |w| <= eps: integral of the even part via the Taylor terms
  //     f''(u) w^2 + f''''(u) w^4 / 12.
  const double head2 = deriv.d2 * std::pow(eps, 2.0 - a) / (2.0 - a);
  const double head4 = deriv.d4 * std::pow(eps, 4.0 - a) / (12.0 * (4.0 - a));
  const double sixth_proxy =
      10.0 * deriv.d4 * deriv.d4 / std::max(std::abs(deriv.d2), 1e-6);
  double cert = deriv.cert * std::pow(eps, 2.0 - a) / (2.0 - a) +
                sixth_proxy * std::pow(eps, 6.0 - a) / 1512.0 +
                16.0 * kMachineEps * magnitude * std::pow(eps, -a) / a;

  // (ii) folded midrange on [eps, W]: the even second difference against
  //      w^(-1-alpha); kinks of either side fold onto |breakpoint|.
  std::vector<double> edges;
  edges.push_back(eps);
  for (double b : breakpoints) {
    const double ab = std::abs(b);
    if (ab > eps * (1.0 + 1e-12) && ab < cutoff * (1.0 - 1e-12)) {
      edges.push_back(ab);
    }
  }
  edges.push_back(cutoff);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [&](double p, double q) {
                            return std::abs(p - q) <= 1e-13 * cutoff;
                          }),
              edges.end());

  const auto integrand = [&](double w) {
    const double second_difference = f(u + w) + f(u - w) - 2.0 * fu;
    return second_difference * std::pow(w, -1.0 - a);
  };
  QuadOptions options;
  options.abs_tol = spec.abs_tol;
  options.rel_tol = spec.rel_tol;
  options.max_subdivisions = spec.max_subdivisions;
  const QuadOutcome mid = adaptive_integrate(integrand, edges, options);

  // (iii) closed-form tail beyond W.
  double tail_value = 0.0;
  if (tail == TailModel::vanishing_function) {
    tail_value = -fu * (2.0 / a) * std::pow(cutoff, -a);
  }

  PVQuadResult result;
  result.value = head2 + head4 + mid.value + tail_value;
  result.error_estimate = mid.error_estimate + cert;
  result.subdivisions_used = mid.subdivisions_used;
  if (!mid.converged) {
    throw QuadratureError(
        "pv_fractional_integral_1d: adaptive stage exhausted its subdivision budget",
        result);
  }
  return result;
}

PVQuadResult getoor_identity_check(double u, double r, StabilityIndex alpha,
                                   const PVQuadSpec& spec) {
  if (!(r > 0.0)) {
    throw std::domain_error("getoor_identity_check: radius must be positive");
  }
  if (!(std::abs(u) < r)) {
    throw std::domain_error("getoor_identity_check: u must satisfy |u| < r");
  }
  const ProfileFunction profile(r, alpha);
  const double roots[2] = {-u - r, -u + r};  // support crossings of s_r(u + w)
  return pv_fractional_integral_1d(
      [&](double t) { return profile.value_1d(t); }, u, alpha, spec, roots,
      profile.second_derivative_1d(u), profile.fourth_derivative_1d(u),
      TailModel::vanishing_function);
}

PVQuadResult apply_Kv(std::span<const double> v, std::span<const double> x,
                      double r, StabilityIndex alpha, const PVQuadSpec& spec) {
  if (!(r > 0.0)) {
    throw std::domain_error("apply_Kv: radius must be positive");
  }
  if (v.size() != x.size()) {
    throw std::invalid_argument("apply_Kv: v and x dimensions differ");
  }
  const double vnorm = norm(v);
  if (!(vnorm > 1e-14)) {
    throw std::domain_error("apply_Kv: direction v must be nonzero");
  }
  const double x2 = norm_squared(x);
  if (!(x2 < r * r)) {
    throw std::domain_error("apply_Kv: x must lie strictly inside the ball");
  }
  // reduction along v* = v/|v|: with x1 = x.v* and the orthogonal rest
  // x~ = x - x1 v*, the section radius is rho = sqrt(r^2 - |x~|^2) and
  //   K_v S_r(x) = |v|^alpha K_{e1} s_rho(x1).
  double x1 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) x1 += x[i] * v[i];
  x1 /= vnorm;
  const double ortho2 = std::max(x2 - x1 * x1, 0.0);
  const double rho = std::sqrt(r * r - ortho2);

  const PVQuadResult one_dim = getoor_identity_check(x1, rho, alpha, spec);
  const double scale = std::pow(vnorm, alpha.value());
  return {scale * one_dim.value, scale * one_dim.error_estimate,
          one_dim.subdivisions_used};
}

namespace {

Vec map_direction(const LinearMap& a, std::span<const double> z) {
  if (a.dim() != z.size()) {
    throw std::invalid_argument("apply_K: map dimension mismatch");
  }
  return a.apply(z);
}

void require_inside(std::span<const double> x, double r, const char* who) {
  if (!(r > 0.0) || !(norm_squared(x) < r * r)) {
    throw std::domain_error(std::string(who) + ": x must lie strictly inside the ball");
  }
}

void require_dim(const SpectralMeasure& mu, std::span<const double> x,
                 const char* who) {
  if (mu.dim() != x.size()) {
    throw std::invalid_argument(std::string(who) +
                                ": x dimension != measure dimension");
  }
}

}  // namespace

double apply_K(const SpectralMeasure& mu, const LinearMap& a,
               std::span<const double> x, double r, StabilityIndex alpha) {
  require_dim(mu, x, "apply_K");
  require_inside(x, r, "apply_K");
  double acc = 0.0;
  for (const AtomPair& pair : mu.pairs()) {
    const Vec image = map_direction(a, pair.z);
    const double len = norm(image);
    if (!(len > 1e-12)) {
      throw std::domain_error("apply_K: A z vanishes for an atom (degenerate direction)");
    }
    // z and -z map to images of equal norm
    acc += 2.0 * pair.pair_mass * std::pow(len, alpha.value());
  }
  return -acc;
}

double apply_K_nu(const SpectralMeasure& mu, std::span<const double> x,
                  double r, StabilityIndex alpha) {
  (void)alpha;
  require_dim(mu, x, "apply_K_nu");
  require_inside(x, r, "apply_K_nu");
  return -mu.total_mass() / 2.0;
}

GeneratorCheck apply_K_checked(const SpectralMeasure& mu, const LinearMap& a,
                               std::span<const double> x, double r,
                               StabilityIndex alpha, const PVQuadSpec& spec) {
  GeneratorCheck check;
  check.closed_form = apply_K(mu, a, x, r, alpha);
  double quad = 0.0;
  double err = 0.0;
  for (const AtomPair& pair : mu.pairs()) {
    const Vec image = map_direction(a, pair.z);
    const PVQuadResult kv = apply_Kv(image, x, r, alpha, spec);
    quad += 2.0 * pair.pair_mass * kv.value;
    err += 2.0 * pair.pair_mass * kv.error_estimate;
  }
  check.quadrature = quad;
  check.discrepancy = std::abs(check.closed_form - check.quadrature);
  check.tolerance = std::max(1e-5 * mu.total_mass(), 20.0 * err);
  check.consistent = check.discrepancy <= check.tolerance;
  return check;
}

GeneratorCheck apply_K_nu_checked(const SpectralMeasure& mu,
                                  std::span<const double> x, double r,
                                  StabilityIndex alpha,
                                  const PVQuadSpec& spec) {
  GeneratorCheck check;
  check.closed_form = apply_K_nu(mu, x, r, alpha);
  double quad = 0.0;
  double err = 0.0;
  if (mu.is_discrete()) {
    // (1/2) sum over the full atom list collapses to the pair sum
    for (const AtomPair& pair : mu.pairs()) {
      const PVQuadResult kv = apply_Kv(pair.z, x, r, alpha, spec);
      quad += pair.pair_mass * kv.value;
      err += pair.pair_mass * kv.error_estimate;
    }
  } else {
    // the directional value is direction-independent; probe a fixed frame
    const std::size_t d = mu.dim();
    std::vector<Vec> probes;
    for (std::size_t i = 0; i < d; ++i) {
      Vec e(d, 0.0);
      e[i] = 1.0;
      probes.push_back(std::move(e));
    }
    probes.push_back(Vec(d, 1.0 / std::sqrt(static_cast<double>(d))));
    double mean = 0.0;
    double mean_err = 0.0;
    for (const Vec& z : probes) {
      const PVQuadResult kv = apply_Kv(z, x, r, alpha, spec);
      mean += kv.value;
      mean_err += kv.error_estimate;
    }
    mean /= static_cast<double>(probes.size());
    mean_err /= static_cast<double>(probes.size());
    quad = mu.total_mass() / 2.0 * mean;
    err = mu.total_mass() / 2.0 * mean_err;
  }
  check.quadrature = quad;
  check.discrepancy = std::abs(check.closed_form - check.quadrature);
  check.tolerance = std::max(1e-5 * mu.total_mass(), 20.0 * err);
  check.consistent = check.discrepancy <= check.tolerance;
  return check;
}

}  // namespace levyball
