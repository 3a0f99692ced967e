#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"
#include "levyball/pvquad.hpp"
#include "levyball/rng.hpp"
#include "test_helpers.hpp"

using levyball::apply_K;
using levyball::apply_K_checked;
using levyball::apply_K_nu;
using levyball::apply_K_nu_checked;
using levyball::apply_Kv;
using levyball::Atom;
using levyball::getoor_identity_check;
using levyball::LinearMap;
using levyball::PathRng;
using levyball::pv_fractional_integral_1d;
using levyball::PVQuadResult;
using levyball::PVQuadSpec;
using levyball::SpectralMeasure;
using levyball::StabilityIndex;
using levyball::TailModel;
using levyball::Vec;

TEST_CASE("constant functions integrate to exactly zero") {
  const auto result = pv_fractional_integral_1d(
      [](double) { return 3.25; }, 0.4, StabilityIndex(0.8), PVQuadSpec{}, {},
      std::nullopt, std::nullopt, TailModel::vanishing_difference);
  CHECK(result.value == 0.0);
}

TEST_CASE("Gaussian bump at u=0 matches the frozen oracle value") {
  PVQuadSpec spec;
  spec.tail_cutoff = 40.0;  // exp(-w^2) vanishes there in double precision
  const auto result = pv_fractional_integral_1d(
      [](double w) { return std::exp(-w * w); }, 0.0, StabilityIndex(0.5), spec,
      {}, -2.0, 12.0);
  CHECK(std::abs(result.value - levyball::fixtures::kPvGaussAlphaHalf) <= 1e-8);
  CHECK(result.error_estimate < 1e-7);
}

TEST_CASE("Gaussian bump with finite-difference derivatives stays accurate") {
  PVQuadSpec spec;
  spec.tail_cutoff = 40.0;
  const auto result = pv_fractional_integral_1d(
      [](double w) { return std::exp(-w * w); }, 0.0, StabilityIndex(0.5), spec);
  CHECK(std::abs(result.value - levyball::fixtures::kPvGaussAlphaHalf) <= 1e-8);
}

TEST_CASE("even integrand about u equals its folded absolutely convergent form") {
  // f even about u = 1.3; the p.v. integral reduces to the one-sided folded
  // integral, which the dumb log-grid oracle can do directly
  const double u = 1.3;
  const double a = 0.6;
  const auto f = [u](double t) {
    const double w = t - u;
    return 1.0 / (1.0 + w * w);
  };
  PVQuadSpec spec;
  spec.tail_cutoff = 1e7;  // f decays only algebraically; push the cutoff out
  spec.max_subdivisions = 4000;
  const auto result =
      pv_fractional_integral_1d(f, u, StabilityIndex(a), spec, {}, -2.0, 24.0);
  const double mid = testing_helpers::log_midpoint(
      [&](double w) {
        return (f(u + w) + f(u - w) - 2.0 * f(u)) * std::pow(w, -1.0 - a);
      },
      1e-8, 1e7, 2000000);
  // head below 1e-8 is ~ f'' (1e-8)^(2-a); tail beyond 1e7 is -2 f(u) W^-a / a
  const double oracle = mid - 2.0 * f(u) * std::pow(1e7, -a) / a;
  CHECK(std::abs(result.value - oracle) <= 1e-6);
}

TEST_CASE("interval identity: spot values") {
  CHECK(std::abs(getoor_identity_check(0.0, 1.0, StabilityIndex(0.5)).value +
                 1.0) <= 1e-6);
  CHECK(std::abs(getoor_identity_check(0.5, 1.0, StabilityIndex(1.5)).value +
                 1.0) <= 1e-6);
  CHECK(std::abs(getoor_identity_check(0.0, 2.0, StabilityIndex(1.0)).value +
                 1.0) <= 1e-6);
}

TEST_CASE("interval identity is r-independent") {
  for (double r : {0.5, 1.0, 2.0}) {
    const auto result = getoor_identity_check(0.2 * r, r, StabilityIndex(1.2));
    CHECK(std::abs(result.value + 1.0) <= 1e-6);
  }
}

TEST_CASE("interval identity across the interior (location independence)") {
  for (double a : {0.5, 1.2, 1.8}) {
    for (int k = 0; k < 20; ++k) {
      const double u = -0.95 + 1.9 * k / 19.0;
      const auto result = getoor_identity_check(u, 1.0, StabilityIndex(a));
      CHECK(std::abs(result.value + 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("interval identity rejects |u| >= r") {
  CHECK_THROWS_AS(getoor_identity_check(1.0, 1.0, StabilityIndex(1.0)),
                  std::domain_error);
  CHECK_THROWS_AS(getoor_identity_check(-1.2, 1.0, StabilityIndex(1.0)),
                  std::domain_error);
}

TEST_CASE("quadrature refuses alphas outside the supported range") {
  CHECK_THROWS_AS(getoor_identity_check(0.0, 1.0, StabilityIndex(0.05)),
                  std::domain_error);
  CHECK_THROWS_AS(getoor_identity_check(0.0, 1.0, StabilityIndex(1.97)),
                  std::domain_error);
}

TEST_CASE("exhausted subdivision budgets raise with a partial result") {
  PVQuadSpec spec;
  spec.max_subdivisions = 3;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-15;
  try {
    getoor_identity_check(0.3, 1.0, StabilityIndex(1.5), spec);
    FAIL("expected QuadratureError");
  } catch (const levyball::QuadratureError& error) {
    CHECK(std::abs(error.partial().value + 1.0) < 0.1);
    CHECK(error.partial().error_estimate > 0.0);
  }
}

TEST_CASE("directional operator: axis direction at the center") {
  for (double a : {0.3, 0.8, 1.0, 1.5, 1.8}) {
    const Vec v{1.0, 0.0};
    const Vec x{0.0, 0.0};
    const auto result = apply_Kv(v, x, 1.0, StabilityIndex(a));
    CHECK(std::abs(result.value + 1.0) <= 1e-6);
  }
}

TEST_CASE("directional operator: scaled direction off-center") {
  const Vec v{0.0, 2.0};
  const Vec x{0.3, 0.1};
  const auto result = apply_Kv(v, x, 1.0, StabilityIndex(1.0));
  CHECK(std::abs(result.value + 2.0) <= 2e-6);
}

TEST_CASE("directional operator: diagonal direction, alpha one half") {
  const Vec v{1.0, 1.0};
  const Vec x{0.0, 0.0};
  const auto result = apply_Kv(v, x, 1.0, StabilityIndex(0.5));
  CHECK(std::abs(result.value + std::pow(2.0, 0.25)) <= 2e-6);
}

TEST_CASE("directional operator scaling in |v|") {
  const Vec x{0.2, -0.1, 0.05};
  for (double a : {0.5, 1.2}) {
    const StabilityIndex alpha(a);
    const Vec v{0.4, -1.0, 0.3};
    const double base = apply_Kv(v, x, 1.0, alpha).value;
    for (double lambda : {0.5, 2.0, 10.0}) {
      Vec scaled = v;
      for (double& vi : scaled) vi *= lambda;
      const double observed = apply_Kv(scaled, x, 1.0, alpha).value;
      CHECK(std::abs(observed - std::pow(lambda, a) * base) <= 4e-6 * std::pow(lambda, a));
    }
  }
}

TEST_CASE("directional operator is rotation equivariant") {
  PathRng rng(616, 0);
  for (int trial = 0; trial < 6; ++trial) {
    const double a = 0.4 + 1.4 * rng.uniform_oo();
    const StabilityIndex alpha(a);
    const double theta = 2.0 * M_PI * rng.uniform_oo();
    const double c = std::cos(theta), s = std::sin(theta);
    const Vec v{0.3 + rng.uniform_oo(), -0.5 + rng.uniform_oo()};
    const Vec x{0.4 * rng.uniform_oo(), -0.4 * rng.uniform_oo()};
    const Vec rv{c * v[0] - s * v[1], s * v[0] + c * v[1]};
    const Vec rx{c * x[0] - s * x[1], s * x[0] + c * x[1]};
    const double lhs = apply_Kv(rv, rx, 1.0, alpha).value;
    const double rhs = apply_Kv(v, x, 1.0, alpha).value;
    CHECK(std::abs(lhs - rhs) <= 4e-6);
  }
}

TEST_CASE("directional operator rejects bad arguments") {
  const Vec v{0.0, 0.0};
  const Vec x{0.0, 0.0};
  CHECK_THROWS_AS(apply_Kv(v, x, 1.0, StabilityIndex(1.0)), std::domain_error);
  const Vec v2{1.0, 0.0};
  const Vec rim{1.0, 0.0};
  CHECK_THROWS_AS(apply_Kv(v2, rim, 1.0, StabilityIndex(1.0)), std::domain_error);
  const Vec short_v{1.0};
  CHECK_THROWS_AS(apply_Kv(short_v, x, 1.0, StabilityIndex(1.0)),
                  std::invalid_argument);
}

TEST_CASE("generator operators reject dimension mismatches") {
  const Atom atoms[] = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
  const SpectralMeasure mu = SpectralMeasure::discrete(2, atoms);
  const Vec x1{0.0};
  CHECK_THROWS_AS(apply_K(mu, LinearMap::identity(2), x1, 1.0, StabilityIndex(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_K_nu(mu, x1, 1.0, StabilityIndex(1.0)),
                  std::invalid_argument);
}

namespace {

SpectralMeasure cross() {
  const Atom atoms[] = {{{1.0, 0.0}, 1.0},
                        {{-1.0, 0.0}, 1.0},
                        {{0.0, 1.0}, 1.0},
                        {{0.0, -1.0}, 1.0}};
  return SpectralMeasure::discrete(2, atoms);
}

}  // namespace

TEST_CASE("anisotropic generator closed forms") {
  const SpectralMeasure mu = cross();
  const Vec x{0.1, 0.2};
  const StabilityIndex alpha(1.0);
  CHECK(apply_K(mu, LinearMap::identity(2), x, 1.0, alpha) ==
        doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(apply_K(mu, LinearMap::scaled_identity(2, 2.0), x, 1.0, alpha) ==
        doctest::Approx(-8.0).epsilon(1e-14));

  // arbitrary rotation is an isometry
  const double theta = 0.7;
  LinearMap rot(2);
  rot.at(0, 0) = std::cos(theta);
  rot.at(0, 1) = -std::sin(theta);
  rot.at(1, 0) = std::sin(theta);
  rot.at(1, 1) = std::cos(theta);
  CHECK(apply_K(mu, rot, x, 1.0, StabilityIndex(0.7)) ==
        doctest::Approx(-4.0).epsilon(1e-13));
}

TEST_CASE("anisotropic generator with |mu| = 2 and doubled map") {
  const Atom atoms[] = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
  const SpectralMeasure mu = SpectralMeasure::discrete(2, atoms);
  const Vec x{0.0, 0.0};
  CHECK(apply_K(mu, LinearMap::scaled_identity(2, 2.0), x, 1.0,
                StabilityIndex(1.0)) == doctest::Approx(-4.0).epsilon(1e-14));
  const auto check = apply_K_checked(mu, LinearMap::scaled_identity(2, 2.0), x,
                                     1.0, StabilityIndex(1.0));
  CHECK(check.consistent);
  CHECK(check.discrepancy <= 1e-5 * mu.total_mass());
}

TEST_CASE("generator rejects degenerate mapped directions") {
  const Atom atoms[] = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
  const SpectralMeasure mu = SpectralMeasure::discrete(2, atoms);
  LinearMap projector(2);  // kills e1
  projector.at(1, 1) = 1.0;
  const Vec x{0.0, 0.0};
  CHECK_THROWS_AS(apply_K(mu, projector, x, 1.0, StabilityIndex(1.0)),
                  std::domain_error);
}

TEST_CASE("process generator closed form and quadrature route") {
  const Vec x{0.15, -0.3};
  const StabilityIndex alpha(1.2);
  CHECK(apply_K_nu(cross(), x, 1.0, alpha) == doctest::Approx(-2.0).epsilon(1e-14));

  const Atom atoms[] = {{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 1.0}};
  const SpectralMeasure pair = SpectralMeasure::discrete(2, atoms);
  CHECK(apply_K_nu(pair, x, 1.0, alpha) == doctest::Approx(-1.0).epsilon(1e-14));

  const SpectralMeasure iso = SpectralMeasure::isotropic(2, 2.0 * M_PI);
  CHECK(apply_K_nu(iso, x, 1.0, alpha) == doctest::Approx(-M_PI).epsilon(1e-14));

  for (const SpectralMeasure& mu : {cross(), pair, iso}) {
    const auto check = apply_K_nu_checked(mu, x, 1.0, alpha);
    CHECK(check.consistent);
    CHECK(check.discrepancy <= 1e-5 * mu.total_mass());
  }
}

TEST_CASE("process generator needs an interior point") {
  const Vec rim{0.0, 1.0};
  CHECK_THROWS_AS(apply_K_nu(cross(), rim, 1.0, StabilityIndex(1.0)),
                  std::domain_error);
}
