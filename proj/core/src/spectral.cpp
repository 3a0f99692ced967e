#include "levyball/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "measure_json.hpp"

namespace levyball {

namespace {

constexpr double kDirectionMergeTol = 1e-12;

void validate_dim(std::size_t dim) {
  if (dim == 0) {
    throw std::invalid_argument("SpectralMeasure: dimension must be positive");
  }
}

Vec normalized_or_throw(Vec z) {
  const double n = norm(z);
  if (!(n > 1e-12) || !std::isfinite(n)) {
    throw std::invalid_argument("Direction: vector has no usable direction");
  }
  for (double& zi : z) zi /= n;
  return z;
}

// Representative of the pair {z, -z}: first coordinate of meaningful
// magnitude is made positive.
bool needs_flip(std::span<const double> z) {
  for (double zi : z) {
    if (std::abs(zi) > kDirectionMergeTol) return zi < 0.0;
  }
  return false;
}

void flip(Vec& z) {
  for (double& zi : z) zi = -zi;
}

bool close(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc) <= kDirectionMergeTol;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<AtomPair> canonical_pairs(std::size_t dim,
                                      std::span<const Atom> atoms) {
  validate_dim(dim);
  if (atoms.empty()) {
    throw std::domain_error("SpectralMeasure: empty atom list");
  }
  std::vector<AtomPair> pairs;
  for (const Atom& atom : atoms) {
    if (atom.z.size() != dim) {
      throw std::invalid_argument("SpectralMeasure: atom dimension mismatch");
    }
    if (!(atom.mass > 0.0) || !std::isfinite(atom.mass)) {
      throw std::invalid_argument("SpectralMeasure: atom masses must be positive and finite");
    }
    Vec rep = normalized_or_throw(atom.z);
    if (needs_flip(rep)) flip(rep);
    // (mu + mu(-.))/2 spreads mass m as m/2 onto each of {z, -z}
    const double half = atom.mass / 2.0;
    bool merged = false;
    for (AtomPair& p : pairs) {
      if (close(p.z, rep)) {
        p.pair_mass += half;
        merged = true;
        break;
      }
    }
    if (!merged) pairs.push_back({std::move(rep), half});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const AtomPair& a, const AtomPair& b) { return lex_less(a.z, b.z); });
  return pairs;
}

}  // namespace

Direction::Direction(Vec coords) : coords_(normalized_or_throw(std::move(coords))) {}

SpectralMeasure SpectralMeasure::discrete(std::size_t dim,
                                          std::span<const Atom> atoms) {
  SpectralMeasure mu;
  mu.dim_ = dim;
  mu.discrete_ = true;
  mu.pairs_ = canonical_pairs(dim, atoms);
  return mu;
}

SpectralMeasure SpectralMeasure::isotropic(std::size_t dim, double total_mass) {
  validate_dim(dim);
  if (!(total_mass > 0.0) || !std::isfinite(total_mass)) {
    throw std::invalid_argument("SpectralMeasure: total mass must be positive");
  }
  SpectralMeasure mu;
  mu.dim_ = dim;
  mu.discrete_ = false;
  mu.isotropic_mass_ = total_mass;
  return mu;
}

double SpectralMeasure::total_mass() const {
  if (!discrete_) return isotropic_mass_;
  double acc = 0.0;
  for (const AtomPair& p : pairs_) acc += 2.0 * p.pair_mass;
  return acc;
}

std::span<const AtomPair> SpectralMeasure::pairs() const {
  if (!discrete_) {
    throw std::domain_error("SpectralMeasure: isotropic measure has no atom pairs");
  }
  return pairs_;
}

std::vector<Atom> SpectralMeasure::atoms() const {
  std::vector<Atom> out;
  out.reserve(2 * pairs().size());
  for (const AtomPair& p : pairs_) {
    out.push_back({p.z, p.pair_mass});
    Vec neg = p.z;
    flip(neg);
    out.push_back({std::move(neg), p.pair_mass});
  }
  return out;
}

std::vector<Atom> symmetrize_atoms(std::size_t dim, std::span<const Atom> atoms) {
  return SpectralMeasure::discrete(dim, atoms).atoms();
}

SpectralMeasure symmetrize(const SpectralMeasure& mu) {
  if (!mu.is_discrete()) return mu;
  const auto full = mu.atoms();
  return SpectralMeasure::discrete(mu.dim(), full);
}

double nu_ball_complement(const SpectralMeasure& mu, StabilityIndex alpha) {
  return mu.total_mass() / alpha.value();
}

SquareMatrix small_jump_covariance(const SpectralMeasure& mu,
                                   StabilityIndex alpha, double delta) {
  alpha.require_supported();
  if (!(delta > 0.0)) {
    throw std::domain_error("small_jump_covariance: delta must be positive");
  }
  const double a = alpha.value();
  const double factor = std::pow(delta, 2.0 - a) / (2.0 - a);
  if (!mu.is_discrete()) {
    return SquareMatrix::scaled_identity(
        mu.dim(), factor * mu.total_mass() / static_cast<double>(mu.dim()));
  }
  SquareMatrix sigma(mu.dim());
  for (const AtomPair& p : mu.pairs()) {
    // both members of the pair contribute the same rank-1 term
    sigma.add_outer(p.z, 2.0 * p.pair_mass * factor);
  }
  return sigma;
}

double big_jump_intensity(const SpectralMeasure& mu, StabilityIndex alpha,
                          double delta) {
  if (!(delta > 0.0)) {
    throw std::domain_error("big_jump_intensity: delta must be positive");
  }
  return mu.total_mass() * std::pow(delta, -alpha.value()) / alpha.value();
}

Direction sample_direction(const SpectralMeasure& mu, PathRng& rng) {
  if (mu.is_discrete()) {
    const auto pairs = mu.pairs();
    double half_total = 0.0;
    for (const AtomPair& p : pairs) half_total += p.pair_mass;
    double pick = rng.uniform_oo() * half_total;
    std::size_t idx = 0;
    for (; idx + 1 < pairs.size(); ++idx) {
      pick -= pairs[idx].pair_mass;
      if (pick <= 0.0) break;
    }
    Vec z = pairs[idx].z;
    if (rng.uniform_oo() < 0.5) flip(z);
    return Direction(std::move(z));
  }
  // isotropic: normalized Gaussian vector
  Vec z(mu.dim());
  double n2 = 0.0;
  do {
    for (double& zi : z) zi = rng.normal();
    n2 = norm_squared(z);
  } while (!(n2 > 1e-24));
  return Direction(std::move(z));
}

Vec sample_big_jump(const SpectralMeasure& mu, StabilityIndex alpha,
                    double delta, PathRng& rng) {
  if (!(delta > 0.0)) {
    throw std::domain_error("sample_big_jump: delta must be positive");
  }
  const Direction dir = sample_direction(mu, rng);
  // radial Pareto tail of dr / r^(1+alpha) above delta; uniform_oo avoids the
  // boundary radius exactly delta
  const double radius = delta * std::pow(rng.uniform_oo(), -1.0 / alpha.value());
  Vec y(dir.coords().begin(), dir.coords().end());
  for (double& yi : y) yi *= radius;
  return y;
}

namespace detail {

SpectralMeasure measure_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("type")) {
    throw std::invalid_argument("spectral measure document: need \"d\" and \"type\"");
  }
  const auto dim = doc.at("d").get<std::size_t>();
  const auto type = doc.at("type").get<std::string>();
  if (type == "isotropic") {
    return SpectralMeasure::isotropic(dim, doc.at("total_mass").get<double>());
  }
  if (type != "discrete") {
    throw std::invalid_argument("spectral measure document: unknown type \"" + type + "\"");
  }
  if (!doc.contains("atoms") || !doc.at("atoms").is_array()) {
    throw std::invalid_argument("spectral measure document: discrete type needs \"atoms\"");
  }
  std::vector<Atom> atoms;
  for (const auto& item : doc.at("atoms")) {
    Atom atom;
    atom.z = item.at("z").get<Vec>();
    atom.mass = item.at("m").get<double>();
    atoms.push_back(std::move(atom));
  }
  return SpectralMeasure::discrete(dim, atoms);
}

nlohmann::json measure_to_json(const SpectralMeasure& mu) {
  nlohmann::json doc;
  doc["d"] = mu.dim();
  if (mu.is_discrete()) {
    doc["type"] = "discrete";
    auto atoms = nlohmann::json::array();
    for (const Atom& atom : mu.atoms()) {
      atoms.push_back({{"z", atom.z}, {"m", atom.mass}});
    }
    doc["atoms"] = std::move(atoms);
  } else {
    doc["type"] = "isotropic";
  }
  doc["total_mass"] = mu.total_mass();
  return doc;
}

}  // namespace detail

SpectralMeasure measure_from_json_text(const std::string& text) {
  return detail::measure_from_json(nlohmann::json::parse(text));
}

std::string measure_to_json_text(const SpectralMeasure& mu) {
  return detail::measure_to_json(mu).dump(2);
}

}  // namespace levyball
