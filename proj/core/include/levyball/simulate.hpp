#pragma once

#include <cstdint>
#include <string>

#include "levyball/constants.hpp"
#include "levyball/linalg.hpp"
#include "levyball/rng.hpp"
#include "levyball/spectral.hpp"

namespace levyball {

enum class SamplerKind {
  /// Per-step stable increments along the canonical atom pairs; exact process
  /// law on the grid, discrete measures only.
  exact_increment,
  /// Compound Poisson above a threshold delta plus a Gaussian substitute for
  /// the sub-threshold jump activity.
  compound_poisson_gaussian,
};

struct ExitTimeConfig {
  Vec x0;
  double r = 1.0;
  double alpha = 1.0;
  SpectralMeasure mu;
  SamplerKind sampler = SamplerKind::exact_increment;
  double delta = 0.0;    // CPG threshold; 0 selects the default r / 50
  double h = 1e-3;       // time step of the exit grid
  double t_max = 0.0;    // truncation horizon; 0 selects 50 x closed-form mean
  std::uint64_t n_paths = 1;
  std::uint64_t seed = 0;

  StabilityIndex index() const { return StabilityIndex(alpha); }
  double effective_delta() const { return delta > 0.0 ? delta : r / 50.0; }
  double effective_t_max() const;
  double closed_form_mean() const;

  /// Throws std::invalid_argument on any violated constraint.
  void validate() const;
};

struct PathOutcome {
  double time = 0.0;
  bool truncated = false;
};

struct ExitTimeEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_paths = 0;
  std::uint64_t n_completed = 0;
  std::uint64_t n_truncated = 0;
  /// Set when more than 0.1% of paths hit the truncation horizon.
  bool unreliable = false;
  std::string config_hash;
};

/// One exit-time sample on the grid t_k = k h; truncated paths report t_max.
PathOutcome simulate_exit_exact(const ExitTimeConfig& config, PathRng& rng);

/// One exit-time sample from the compound-Poisson + Gaussian scheme; exit is
/// checked at grid times and immediately after every big jump.
PathOutcome simulate_exit_cpg(const ExitTimeConfig& config, PathRng& rng);

/// Mean exit time over n_paths independent paths (stream per path index), CLT
/// standard error, truncation diagnostics. Bit-identical results for any
/// worker count; n_threads = 0 uses the hardware concurrency.
ExitTimeEstimate estimate_mean_exit(const ExitTimeConfig& config,
                                    unsigned n_threads = 0);

/// FNV-1a digest of the canonical text form of the config.
std::string config_hash(const ExitTimeConfig& config);

}  // namespace levyball
