#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace levyball {

/// Counter-based random stream (Philox 4x32-10). One independent stream per
/// (seed, stream_id) pair; paths of a Monte Carlo run use stream_id = path
/// index, so results do not depend on scheduling or worker count.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t stream_id)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_{static_cast<std::uint32_t>(stream_id),
                static_cast<std::uint32_t>(stream_id >> 32)} {}

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return block_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  /// Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform_oo() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on (0, 1]; safe to feed to log().
  double uniform_oc() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; draws come in cached pairs.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform_oc()));
    const double angle = 2.0 * M_PI * uniform_oo();
    cached_ = radius * std::sin(angle);
    have_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Exponential with unit rate.
  double exponential() { return -std::log(uniform_oc()); }

  /// Raw keyed block, exposed for the known-answer test.
  static std::array<std::uint32_t, 4> philox_block(
      std::array<std::uint32_t, 2> key, std::array<std::uint32_t, 4> ctr) {
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
      const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += 0x9E3779B9u;
      key[1] += 0xBB67AE85u;
    }
    return ctr;
  }

 private:
  void refill() {
    block_ = philox_block(key_, {stream_[0], stream_[1],
                                 static_cast<std::uint32_t>(block_counter_),
                                 static_cast<std::uint32_t>(block_counter_ >> 32)});
    ++block_counter_;
    pos_ = 0;
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t block_counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int pos_ = 4;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace levyball
