#include "levyball/simulate.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <vector>

#include "levyball/profile.hpp"
#include "levyball/stable_sampler.hpp"

namespace levyball {

double ExitTimeConfig::closed_form_mean() const {
  return mean_exit_closed_form(x0, r, index(), mu.total_mass());
}

double ExitTimeConfig::effective_t_max() const {
  if (t_max > 0.0) return t_max;
  return 50.0 * closed_form_mean();
}

void ExitTimeConfig::validate() const {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("ExitTimeConfig: r must be positive");
  }
  StabilityIndex idx(alpha);
  idx.require_supported();
  if (mu.dim() == 0 || !(mu.total_mass() > 0.0)) {
    throw std::invalid_argument("ExitTimeConfig: spectral measure is empty");
  }
  if (x0.size() != mu.dim()) {
    throw std::invalid_argument("ExitTimeConfig: x0 dimension != measure dimension");
  }
  if (!(norm_squared(x0) < r * r)) {
    throw std::invalid_argument("ExitTimeConfig: x0 must lie strictly inside the ball");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("ExitTimeConfig: step h must be positive");
  }
  if (!(h <= effective_t_max())) {
    throw std::invalid_argument("ExitTimeConfig: step h exceeds the horizon t_max");
  }
  if (n_paths == 0) {
    throw std::invalid_argument("ExitTimeConfig: n_paths must be positive");
  }
  if (sampler == SamplerKind::exact_increment) {
    if (!mu.is_discrete()) {
      throw std::invalid_argument(
          "ExitTimeConfig: the exact-increment sampler needs a discrete measure");
    }
  } else {
    if (!(effective_delta() < r / 10.0)) {
      throw std::invalid_argument("ExitTimeConfig: CPG threshold delta must be < r/10");
    }
  }
}

PathOutcome simulate_exit_exact(const ExitTimeConfig& config, PathRng& rng) {
  const StabilityIndex alpha = config.index();
  const auto pairs = config.mu.pairs();
  const std::size_t d = config.mu.dim();
  const std::size_t n_pairs = pairs.size();

  // per-pair stable scale over one step: (m_i c1(alpha) h)^(1/alpha)
  const double c1_alpha = c1(alpha);
  std::vector<double> sigma(n_pairs);
  std::vector<double> dirs(n_pairs * d);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    sigma[i] = std::pow(pairs[i].pair_mass * c1_alpha * config.h,
                        1.0 / alpha.value());
    for (std::size_t j = 0; j < d; ++j) dirs[i * d + j] = pairs[i].z[j];
  }

  const double r2 = config.r * config.r;
  const double horizon = config.effective_t_max();
  const auto max_steps =
      static_cast<std::uint64_t>(std::ceil(horizon / config.h));

  Vec x = config.x0;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    for (std::size_t i = 0; i < n_pairs; ++i) {
      const double jump = sigma[i] * sample_standard_sas(alpha, rng);
      for (std::size_t j = 0; j < d; ++j) x[j] += dirs[i * d + j] * jump;
    }
    if (norm_squared(x) >= r2) {
      return {static_cast<double>(k) * config.h, false};
    }
  }
  return {horizon, true};
}

PathOutcome simulate_exit_cpg(const ExitTimeConfig& config, PathRng& rng) {
  const StabilityIndex alpha = config.index();
  const double delta = config.effective_delta();
  const std::size_t d = config.mu.dim();

  const SquareMatrix sigma = small_jump_covariance(config.mu, alpha, delta);
  const SquareMatrix factor = cholesky_psd(sigma);
  const double rate = big_jump_intensity(config.mu, alpha, delta);

  const double r2 = config.r * config.r;
  const double horizon = config.effective_t_max();

  Vec x = config.x0;
  Vec noise(d);
  double t = 0.0;
  double next_jump = rng.exponential() / rate;
  std::uint64_t grid_index = 1;

  const auto gaussian_advance = [&](double dt) {
    if (dt <= 0.0) return;
    const double scale = std::sqrt(dt);
    for (std::size_t j = 0; j < d; ++j) noise[j] = rng.normal();
    for (std::size_t i = 0; i < d; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= i; ++j) acc += factor.at(i, j) * noise[j];
      x[i] += scale * acc;
    }
  };

  while (t < horizon) {
    const double next_grid = static_cast<double>(grid_index) * config.h;
    if (next_jump < next_grid && next_jump < horizon) {
      gaussian_advance(next_jump - t);
      t = next_jump;
      const Vec jump = sample_big_jump(config.mu, alpha, delta, rng);
      for (std::size_t j = 0; j < d; ++j) x[j] += jump[j];
      if (norm_squared(x) >= r2) return {t, false};
      next_jump = t + rng.exponential() / rate;
      continue;
    }
    const double target = std::min(next_grid, horizon);
    gaussian_advance(target - t);
    t = target;
    if (target == next_grid) {
      ++grid_index;
      if (norm_squared(x) >= r2) return {t, false};
    }
    if (t >= horizon) break;
  }
  return {horizon, true};
}

namespace {

PathOutcome run_path(const ExitTimeConfig& config, std::uint64_t path_id) {
  PathRng rng(config.seed, path_id);
  if (config.sampler == SamplerKind::exact_increment) {
    return simulate_exit_exact(config, rng);
  }
  return simulate_exit_cpg(config, rng);
}

// Neumaier-compensated sum, applied in fixed path order so the reduction is
// independent of scheduling.
double compensated_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

}  // namespace

std::string config_hash(const ExitTimeConfig& config) {
  std::string canonical;
  char buffer[64];
  const auto append_double = [&](double v) {
    std::snprintf(buffer, sizeof buffer, "%.17g;", v);
    canonical += buffer;
  };
  canonical += config.sampler == SamplerKind::exact_increment ? "exact;" : "cpg;";
  append_double(config.alpha);
  append_double(config.r);
  for (double xi : config.x0) append_double(xi);
  canonical += config.mu.is_discrete() ? "discrete;" : "isotropic;";
  if (config.mu.is_discrete()) {
    for (const AtomPair& p : config.mu.pairs()) {
      for (double zi : p.z) append_double(zi);
      append_double(p.pair_mass);
    }
  } else {
    append_double(config.mu.total_mass());
  }
  append_double(config.effective_delta());
  append_double(config.h);
  append_double(config.effective_t_max());
  std::snprintf(buffer, sizeof buffer, "%" PRIu64 ";%" PRIu64 ";",
                config.n_paths, config.seed);
  canonical += buffer;

  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  std::snprintf(buffer, sizeof buffer, "%016" PRIx64, hash);
  return buffer;
}

ExitTimeEstimate estimate_mean_exit(const ExitTimeConfig& config,
                                    unsigned n_threads) {
  config.validate();
  if (n_threads == 0) {
    n_threads = std::max(1u, std::thread::hardware_concurrency());
  }
  const std::uint64_t n = config.n_paths;
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, n));

  std::vector<double> times(n);
  std::vector<unsigned char> truncated(n, 0);

  const auto worker = [&](unsigned w) {
    for (std::uint64_t path = w; path < n; path += n_threads) {
      const PathOutcome outcome = run_path(config, path);
      times[path] = outcome.time;
      truncated[path] = outcome.truncated ? 1 : 0;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n_threads; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (std::thread& th : pool) th.join();

  ExitTimeEstimate estimate;
  estimate.n_paths = n;
  for (unsigned char flag : truncated) estimate.n_truncated += flag;
  estimate.n_completed = n - estimate.n_truncated;
  estimate.mean = compensated_sum(times) / static_cast<double>(n);
  if (n > 1) {
    std::vector<double> sq(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double dev = times[i] - estimate.mean;
      sq[i] = dev * dev;
    }
    const double variance =
        compensated_sum(sq) / static_cast<double>(n - 1);
    estimate.std_error = std::sqrt(variance / static_cast<double>(n));
  }
  estimate.unreliable =
      static_cast<double>(estimate.n_truncated) > 0.001 * static_cast<double>(n);
  estimate.config_hash = config_hash(config);
  return estimate;
}

}  // namespace levyball
