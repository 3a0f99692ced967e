#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "levyball/constants.hpp"
#include "levyball/linalg.hpp"
#include "levyball/rng.hpp"

namespace levyball {

/// Unit vector on the sphere in R^d.
class Direction {
 public:
  explicit Direction(Vec coords);

  std::span<const double> coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }

 private:
  Vec coords_;
};

/// One stored atom: the pair {z: m, -z: m} with z the canonical (half-sphere)
/// representative.
struct AtomPair {
  Vec z;
  double pair_mass;
};

/// A full-sphere atom as seen from outside.
struct Atom {
  Vec z;
  double mass;
};

using LinearMap = SquareMatrix;

/// Finite symmetric spectral measure mu on the unit sphere. Discrete measures
/// are canonicalized to half-sphere pair storage; the isotropic measure is
/// kept analytic (no sphere discretization).
class SpectralMeasure {
 public:
  /// Empty placeholder; any mass-dependent use fails validation.
  SpectralMeasure() = default;

  static SpectralMeasure discrete(std::size_t dim,
                                  std::span<const Atom> atoms);
  static SpectralMeasure isotropic(std::size_t dim, double total_mass);

  std::size_t dim() const { return dim_; }
  bool is_discrete() const { return discrete_; }
  double total_mass() const;

  /// Canonical half-sphere pairs (discrete only).
  std::span<const AtomPair> pairs() const;

  /// Expanded full-sphere atom list, +z before -z, deterministic order
  /// (discrete only).
  std::vector<Atom> atoms() const;

 private:
  std::size_t dim_ = 0;
  bool discrete_ = true;
  std::vector<AtomPair> pairs_;
  double isotropic_mass_ = 0.0;
};

/// (mu + mu(-.))/2, atoms merged on coinciding directions (tolerance 1e-12),
/// total mass preserved. Returned in the canonical expanded form.
std::vector<Atom> symmetrize_atoms(std::size_t dim, std::span<const Atom> atoms);

/// Canonicalizing pass over a whole measure; idempotent.
SpectralMeasure symmetrize(const SpectralMeasure& mu);

/// Levy mass of {|y| >= 1}: |mu| / alpha.
double nu_ball_complement(const SpectralMeasure& mu, StabilityIndex alpha);

/// Covariance of the jump part below the threshold delta:
///   delta^(2-alpha)/(2-alpha) * sum_j m_j z_j z_j^T   (full atom sum),
/// or total_mass/d on the diagonal times the same factor for the isotropic
/// measure. Symmetric PSD.
SquareMatrix small_jump_covariance(const SpectralMeasure& mu,
                                   StabilityIndex alpha, double delta);

/// Levy mass of {|y| > delta}: |mu| * delta^(-alpha) / alpha.
double big_jump_intensity(const SpectralMeasure& mu, StabilityIndex alpha,
                          double delta);

/// Draw a direction from mu / |mu|.
Direction sample_direction(const SpectralMeasure& mu, PathRng& rng);

/// Draw one jump from nu restricted to {|y| > delta}, normalized: direction
/// from mu / |mu|, radius delta * U^(-1/alpha) (Pareto tail).
Vec sample_big_jump(const SpectralMeasure& mu, StabilityIndex alpha,
                    double delta, PathRng& rng);

/// JSON document loader/saver. Schema:
///   {"d": int, "type": "discrete"|"isotropic",
///    "atoms": [{"z": [..], "m": real}], "total_mass": real}
/// The loader symmetrizes and returns the canonicalized measure.
SpectralMeasure measure_from_json_text(const std::string& text);
std::string measure_to_json_text(const SpectralMeasure& mu);

}  // namespace levyball
