#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fixtures.hpp"
#include "levyball/gamma.hpp"

// note: unqualified `gamma` would collide with the legacy libm function
namespace lb = levyball;

TEST_CASE("gamma matches the high-precision fixture table to 1e-13") {
  for (const auto& point : levyball::fixtures::kGammaTable) {
    const double value = lb::gamma(point.x);
    CHECK(std::abs(value - point.gamma) <= 1e-13 * point.gamma);
  }
}

TEST_CASE("gamma agrees with the libm implementation") {
  for (double x = 0.025; x < 3.0; x += 0.0137) {
    CHECK(std::abs(lb::gamma(x) - std::tgamma(x)) <= 1e-12 * std::tgamma(x));
  }
}

TEST_CASE("gamma recurrence x Gamma(x) = Gamma(x+1)") {
  for (double x = 0.05; x < 2.0; x += 0.0731) {
    CHECK(lb::gamma(x + 1.0) == doctest::Approx(x * lb::gamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("gamma simple values") {
  CHECK(lb::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lb::gamma(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lb::gamma(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-15));
  CHECK(lb::gamma(1.5) == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-15));
}

TEST_CASE("gamma rejects poles and non-finite arguments") {
  CHECK_THROWS_AS(lb::gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(lb::gamma(-1.0), std::domain_error);
  CHECK_THROWS_AS(lb::gamma(std::nan("")), std::domain_error);
}
