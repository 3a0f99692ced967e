#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <cstdint>

#include "levyball/rng.hpp"

using levyball::PathRng;

TEST_CASE("philox 4x32-10 known-answer vectors") {
  const auto zeros = PathRng::philox_block({0, 0}, {0, 0, 0, 0});
  CHECK(zeros[0] == 0x6627e8d5u);
  CHECK(zeros[1] == 0xe169c58du);
  CHECK(zeros[2] == 0xbc57ac4cu);
  CHECK(zeros[3] == 0x9b00dbd8u);

  const auto ones = PathRng::philox_block(
      {0xffffffffu, 0xffffffffu},
      {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);
}

TEST_CASE("streams are reproducible and distinct") {
  PathRng a(42, 7);
  PathRng b(42, 7);
  PathRng c(42, 8);
  PathRng d(43, 7);
  bool all_equal_c = true;
  bool all_equal_d = true;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    all_equal_c = all_equal_c && (va == c.next_u64());
    all_equal_d = all_equal_d && (va == d.next_u64());
  }
  CHECK(!all_equal_c);
  CHECK(!all_equal_d);
}

TEST_CASE("uniforms live strictly inside their intervals") {
  PathRng rng(1, 0);
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.uniform_oo();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
  for (int i = 0; i < 200000; ++i) {
    const double u = rng.uniform_oc();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("uniform moments") {
  PathRng rng(1234, 5);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform_oo();
    sum += u;
    sum_sq += u * u;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean - 0.5) < 3.0 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(var - 1.0 / 12.0) < 0.002);
}

TEST_CASE("normal moments") {
  PathRng rng(77, 3);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
}

TEST_CASE("exponential moments") {
  PathRng rng(91, 1);
  const int n = 200000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.exponential();
  CHECK(std::abs(sum / n - 1.0) < 3.0 / std::sqrt(static_cast<double>(n)));
}
