#pragma once

#include <cstdint>
#include <vector>

#include "levyball/pvquad.hpp"
#include "levyball/report.hpp"
#include "levyball/simulate.hpp"

namespace levyball {

/// Sweep of the one-dimensional interval identity over (alpha, u, r) grids;
/// every row expects -1.
struct GetoorSweepConfig {
  std::vector<double> alphas = {0.3, 0.5, 0.8, 1.0, 1.2, 1.5, 1.8};
  std::vector<double> u_fractions = {0.0, 0.3, -0.3, 0.6, -0.6, 0.9, -0.9};
  std::vector<double> radii = {0.5, 1.0, 2.0};
  double tolerance = 1e-6;
  PVQuadSpec quad = {};
};
ExperimentReport cmd_verify_getoor(const GetoorSweepConfig& config = {});

/// Seeded random (v, x) pairs across dimensions; each row expects -|v|^alpha.
struct LemmaSweepConfig {
  std::vector<std::size_t> dims = {1, 2, 3, 5};
  int cases = 50;
  double r = 1.0;
  double tolerance = 2e-6;
  std::uint64_t seed = 0;
  std::vector<double> alphas = {0.3, 0.5, 0.8, 1.0, 1.2, 1.5, 1.8};
  PVQuadSpec quad = {};
};
ExperimentReport cmd_verify_lemma(const LemmaSweepConfig& config);

/// Generator closed forms (-|mu| under the identity map, -|mu|/2 for the
/// process generator) against the per-direction quadrature route.
struct GeneratorSweepConfig {
  std::vector<double> alphas = {0.5, 1.0, 1.5};
  double r = 1.0;
  double tolerance_factor = 1e-5;  // of |mu|
  std::uint64_t seed = 0;
  PVQuadSpec quad = {};
};
ExperimentReport cmd_verify_generator(const GeneratorSweepConfig& config);

/// Closed-form table of the mean exit time at given radial positions.
struct ClosedFormConfig {
  double alpha = 1.0;
  double r = 1.0;
  double mu_total = 2.0;
  std::vector<double> x0_norms = {0.0, 0.25, 0.5, 0.75};
};
ExperimentReport cmd_closed_form(const ClosedFormConfig& config);

/// One Monte Carlo estimate against the closed form; pass within
/// 3 stderr + bias_budget_fraction * expected.
struct EstimateCommandConfig {
  ExitTimeConfig sim;
  double bias_budget_fraction = 0.01;
  unsigned threads = 0;
};
ExperimentReport cmd_estimate(const EstimateCommandConfig& config);

/// Three spectral measures of equal total mass (antipodal pair, axis cross,
/// isotropic) in d = 2; pairwise agreement within 3 x combined stderr.
/// Distinct per-variant masses (the negative control) shift the expected
/// pairwise differences to the closed-form gap instead of zero.
struct MassEquivalenceConfig {
  double mass = 4.0;
  /// Optional override: masses for {antipodal, cross, isotropic}.
  std::vector<double> masses;
  std::vector<double> alphas = {0.5, 1.0, 1.5};
  double r = 1.0;
  std::uint64_t n_paths = 30000;
  double h_factor = 1e-4;  // h = h_factor * closed-form mean
  std::uint64_t seed = 0;
  unsigned threads = 0;
};
ExperimentReport cmd_mass_equivalence(const MassEquivalenceConfig& config);

/// Estimates at (x0, r) and (lambda x0, lambda r); their ratio must match
/// lambda^alpha within 3 x combined relative CI.
struct ScalingCheckConfig {
  ExitTimeConfig base;
  double lambda = 2.0;
  unsigned threads = 0;
};
ExperimentReport cmd_scaling_check(const ScalingCheckConfig& config);

/// Simulation config document loader (the CLI `estimate` input):
///   {"alpha": real, "r": real, "x0": [..], "mu": <measure document>,
///    "sampler": {"kind": "exact"|"cpg", "delta": real?}, "h": real,
///    "t_max": real?, "n_paths": int, "seed": int}
ExitTimeConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ExitTimeConfig& config);

}  // namespace levyball
