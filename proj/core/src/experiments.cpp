#include "levyball/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "levyball/profile.hpp"
#include "measure_json.hpp"

namespace levyball {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

Vec random_unit_vector(std::size_t d, PathRng& rng) {
  Vec v(d);
  double n2 = 0.0;
  do {
    for (double& vi : v) vi = rng.normal();
    n2 = norm_squared(v);
  } while (!(n2 > 1e-12));
  const double inv = 1.0 / std::sqrt(n2);
  for (double& vi : v) vi *= inv;
  return v;
}

Vec random_interior_point(std::size_t d, double r, double max_fraction,
                          PathRng& rng) {
  Vec x = random_unit_vector(d, rng);
  const double radius =
      r * max_fraction *
      std::pow(rng.uniform_oo(), 1.0 / static_cast<double>(d));
  for (double& xi : x) xi *= radius;
  return x;
}

SpectralMeasure antipodal_pair(double mass) {
  const Atom atoms[] = {{{1.0, 0.0}, mass / 2.0}, {{-1.0, 0.0}, mass / 2.0}};
  return SpectralMeasure::discrete(2, atoms);
}

SpectralMeasure axis_cross(double mass) {
  const Atom atoms[] = {{{1.0, 0.0}, mass / 4.0},
                        {{-1.0, 0.0}, mass / 4.0},
                        {{0.0, 1.0}, mass / 4.0},
                        {{0.0, -1.0}, mass / 4.0}};
  return SpectralMeasure::discrete(2, atoms);
}

}  // namespace

ExperimentReport cmd_verify_getoor(const GetoorSweepConfig& config) {
  const auto start = Clock::now();
  ExperimentReport report;
  report.command = "verify-getoor";
  report.inputs = {{"alphas", join(config.alphas)},
                   {"u_fractions", join(config.u_fractions)},
                   {"radii", join(config.radii)},
                   {"tolerance", format_double(config.tolerance)}};
  for (double a : config.alphas) {
    const StabilityIndex alpha(a);
    for (double r : config.radii) {
      for (double frac : config.u_fractions) {
        const double u = frac * r;
        if (!(std::abs(u) < r)) {
          throw std::invalid_argument("verify-getoor: |u| must be below r");
        }
        const PVQuadResult pv = getoor_identity_check(u, r, alpha, config.quad);
        ReportRow row;
        char label[96];
        std::snprintf(label, sizeof label, "alpha=%g r=%g u=%g", a, r, u);
        row.label = label;
        row.expected = -1.0;
        row.observed = pv.value;
        row.tolerance = config.tolerance;
        row.pass = std::abs(row.observed - row.expected) <= row.tolerance;
        row.extras = {{"quad_error", pv.error_estimate},
                      {"subdivisions", static_cast<double>(pv.subdivisions_used)}};
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExperimentReport cmd_verify_lemma(const LemmaSweepConfig& config) {
  const auto start = Clock::now();
  if (config.dims.empty() || config.alphas.empty() || config.cases <= 0) {
    throw std::invalid_argument("verify-lemma: empty case grid");
  }
  ExperimentReport report;
  report.command = "verify-lemma";
  report.inputs = {{"cases", std::to_string(config.cases)},
                   {"r", format_double(config.r)},
                   {"seed", std::to_string(config.seed)},
                   {"tolerance", format_double(config.tolerance)},
                   {"alphas", join(config.alphas)}};

  PathRng rng(config.seed, 0);
  for (int i = 0; i < config.cases; ++i) {
    const std::size_t d = config.dims[i % config.dims.size()];
    const StabilityIndex alpha(config.alphas[i % config.alphas.size()]);
    Vec v = random_unit_vector(d, rng);
    const double magnitude = 0.5 + 3.5 * rng.uniform_oo();
    for (double& vi : v) vi *= magnitude;
    const Vec x = random_interior_point(d, config.r, 0.9, rng);

    const PVQuadResult kv = apply_Kv(v, x, config.r, alpha, config.quad);
    ReportRow row;
    char label[96];
    std::snprintf(label, sizeof label, "case=%d d=%zu alpha=%g |v|=%.6g", i, d,
                  alpha.value(), norm(v));
    row.label = label;
    row.expected = -std::pow(norm(v), alpha.value());
    row.observed = kv.value;
    row.tolerance = config.tolerance;
    row.pass = std::abs(row.observed - row.expected) <= row.tolerance;
    row.extras = {{"quad_error", kv.error_estimate},
                  {"x_norm", norm(x)}};
    report.rows.push_back(std::move(row));
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExperimentReport cmd_verify_generator(const GeneratorSweepConfig& config) {
  const auto start = Clock::now();
  ExperimentReport report;
  report.command = "verify-generator";
  report.inputs = {{"alphas", join(config.alphas)},
                   {"r", format_double(config.r)},
                   {"seed", std::to_string(config.seed)},
                   {"tolerance_factor", format_double(config.tolerance_factor)}};

  PathRng rng(config.seed, 0);

  struct Case {
    std::string name;
    SpectralMeasure mu;
  };
  std::vector<Case> cases;
  cases.push_back({"antipodal-d2", antipodal_pair(2.0)});
  cases.push_back({"cross-d2", axis_cross(4.0)});
  {
    std::vector<Atom> atoms;
    for (int k = 0; k < 3; ++k) {
      atoms.push_back({random_unit_vector(3, rng), 0.5 + rng.uniform_oo()});
    }
    cases.push_back({"random-d3", SpectralMeasure::discrete(3, atoms)});
  }
  cases.push_back({"isotropic-d2", SpectralMeasure::isotropic(2, 2.0 * M_PI)});

  for (const Case& item : cases) {
    const double total = item.mu.total_mass();
    const std::size_t d = item.mu.dim();
    const Vec x = random_interior_point(d, config.r, 0.5, rng);
    for (double a : config.alphas) {
      const StabilityIndex alpha(a);
      const auto add_row = [&](const std::string& what, double expected,
                               double observed, double tolerance,
                               double quad_err = 0.0) {
        ReportRow row;
        row.label = item.name + " alpha=" + format_double(a) + " " + what;
        row.expected = expected;
        row.observed = observed;
        row.tolerance = tolerance;
        row.pass = std::abs(observed - expected) <= tolerance;
        if (quad_err > 0.0) row.extras = {{"quad_error", quad_err}};
        report.rows.push_back(std::move(row));
      };

      const double exact_tol = 1e-12 * total;
      add_row("K_nu closed", -total / 2.0, apply_K_nu(item.mu, x, config.r, alpha),
              exact_tol);
      const GeneratorCheck nu_check =
          apply_K_nu_checked(item.mu, x, config.r, alpha, config.quad);
      add_row("K_nu quadrature", nu_check.closed_form, nu_check.quadrature,
              config.tolerance_factor * total, nu_check.discrepancy);

      if (!item.mu.is_discrete()) continue;

      const LinearMap identity = LinearMap::identity(d);
      add_row("K identity closed", -total,
              apply_K(item.mu, identity, x, config.r, alpha), exact_tol);
      const GeneratorCheck k_check =
          apply_K_checked(item.mu, identity, x, config.r, alpha, config.quad);
      add_row("K identity quadrature", k_check.closed_form, k_check.quadrature,
              config.tolerance_factor * total, k_check.discrepancy);

      LinearMap doubled = LinearMap::scaled_identity(d, 2.0);
      add_row("K doubled closed", -std::pow(2.0, a) * total,
              apply_K(item.mu, doubled, x, config.r, alpha),
              1e-12 * total * std::pow(2.0, a));

      if (d == 2) {
        const double angle = 2.0 * M_PI * rng.uniform_oo();
        LinearMap rotation(2);
        rotation.at(0, 0) = std::cos(angle);
        rotation.at(0, 1) = -std::sin(angle);
        rotation.at(1, 0) = std::sin(angle);
        rotation.at(1, 1) = std::cos(angle);
        add_row("K rotation closed", -total,
                apply_K(item.mu, rotation, x, config.r, alpha), exact_tol);
      }
    }
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExperimentReport cmd_closed_form(const ClosedFormConfig& config) {
  const auto start = Clock::now();
  const StabilityIndex alpha(config.alpha);
  ExperimentReport report;
  report.command = "closed-form";
  report.inputs = {{"alpha", format_double(config.alpha)},
                   {"r", format_double(config.r)},
                   {"mu_total", format_double(config.mu_total)},
                   {"x0_norms", join(config.x0_norms)}};
  report.csv_columns = {"label", "observed", "expected", "pass"};
  for (double s : config.x0_norms) {
    const double value =
        mean_exit_closed_form_radial(s, config.r, alpha, config.mu_total);
    ReportRow row;
    row.label = "x0_norm=" + format_double(s);
    row.expected = value;
    row.observed = value;
    row.tolerance = 0.0;
    row.pass = true;
    report.rows.push_back(std::move(row));
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExperimentReport cmd_estimate(const EstimateCommandConfig& config) {
  const auto start = Clock::now();
  config.sim.validate();
  ExperimentReport report;
  report.command = "estimate";
  report.inputs = {{"config", config_to_json_text(config.sim)}};
  report.csv_columns = {"x0_norm", "alpha", "mu_total",    "expected",
                        "observed", "stderr", "n_truncated", "pass"};

  const double expected = config.sim.closed_form_mean();
  const ExitTimeEstimate estimate =
      estimate_mean_exit(config.sim, config.threads);

  ReportRow row;
  row.label = "estimate";
  row.expected = expected;
  row.observed = estimate.mean;
  row.tolerance =
      3.0 * estimate.std_error + config.bias_budget_fraction * expected;
  row.pass = std::abs(row.observed - row.expected) <= row.tolerance;
  row.extras = {{"x0_norm", norm(config.sim.x0)},
                {"alpha", config.sim.alpha},
                {"mu_total", config.sim.mu.total_mass()},
                {"stderr", estimate.std_error},
                {"n_truncated", static_cast<double>(estimate.n_truncated)},
                {"unreliable", estimate.unreliable ? 1.0 : 0.0}};
  report.rows.push_back(std::move(row));
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExperimentReport cmd_mass_equivalence(const MassEquivalenceConfig& config) {
  const auto start = Clock::now();
  std::vector<double> masses = config.masses;
  if (masses.empty()) masses = {config.mass, config.mass, config.mass};
  if (masses.size() != 3) {
    throw std::invalid_argument("mass-equivalence: need exactly 3 masses");
  }
  ExperimentReport report;
  report.command = "mass-equivalence";
  report.inputs = {{"masses", join(masses)},
                   {"alphas", join(config.alphas)},
                   {"r", format_double(config.r)},
                   {"n_paths", std::to_string(config.n_paths)},
                   {"h_factor", format_double(config.h_factor)},
                   {"seed", std::to_string(config.seed)}};
  struct Variant {
    std::string name;
    SpectralMeasure mu;
    SamplerKind sampler;
  };
  const std::vector<Variant> variants = {
      {"antipodal", antipodal_pair(masses[0]), SamplerKind::exact_increment},
      {"cross", axis_cross(masses[1]), SamplerKind::exact_increment},
      {"isotropic", SpectralMeasure::isotropic(2, masses[2]),
       SamplerKind::compound_poisson_gaussian},
  };

  std::uint64_t run = 0;
  for (double a : config.alphas) {
    const StabilityIndex alpha(a);
    struct Outcome {
      std::string name;
      double expected;
      ExitTimeEstimate estimate;
    };
    std::vector<Outcome> outcomes;
    for (const Variant& variant : variants) {
      ExitTimeConfig sim;
      sim.x0 = {0.0, 0.0};
      sim.r = config.r;
      sim.alpha = a;
      sim.mu = variant.mu;
      sim.sampler = variant.sampler;
      sim.h = config.h_factor *
              mean_exit_closed_form_radial(0.0, config.r, alpha,
                                           variant.mu.total_mass());
      sim.n_paths = config.n_paths;
      sim.seed = config.seed + run++;
      sim.validate();
      Outcome outcome{variant.name, sim.closed_form_mean(),
                      estimate_mean_exit(sim, config.threads)};

      ReportRow row;
      row.label = "alpha=" + format_double(a) + " " + outcome.name;
      row.expected = outcome.expected;
      row.observed = outcome.estimate.mean;
      row.tolerance = 3.0 * outcome.estimate.std_error + 0.01 * outcome.expected;
      row.pass = std::abs(row.observed - row.expected) <= row.tolerance;
      row.extras = {{"stderr", outcome.estimate.std_error},
                    {"n_truncated",
                     static_cast<double>(outcome.estimate.n_truncated)}};
      report.rows.push_back(std::move(row));
      outcomes.push_back(std::move(outcome));
    }
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
        ReportRow row;
        row.label = "alpha=" + format_double(a) + " " + outcomes[i].name +
                    " vs " + outcomes[j].name;
        row.expected = outcomes[i].expected - outcomes[j].expected;
        row.observed = outcomes[i].estimate.mean - outcomes[j].estimate.mean;
        const double se_i = outcomes[i].estimate.std_error;
        const double se_j = outcomes[j].estimate.std_error;
        // equal masses: pure 3x combined stderr; unequal (negative control):
        // allow the discretization budget on the nonzero expected gap
        row.tolerance = 3.0 * std::sqrt(se_i * se_i + se_j * se_j) +
                        0.01 * std::abs(row.expected);
        row.pass = std::abs(row.observed - row.expected) <= row.tolerance;
        report.rows.push_back(std::move(row));
      }
    }
  }
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExperimentReport cmd_scaling_check(const ScalingCheckConfig& config) {
  const auto start = Clock::now();
  config.base.validate();
  if (!(config.lambda > 0.0)) {
    throw std::invalid_argument("scaling-check: lambda must be positive");
  }
  ExperimentReport report;
  report.command = "scaling-check";
  report.inputs = {{"config", config_to_json_text(config.base)},
                   {"lambda", format_double(config.lambda)}};

  const double a = config.base.alpha;
  const double growth = std::pow(config.lambda, a);

  ExitTimeConfig scaled = config.base;
  for (double& xi : scaled.x0) xi *= config.lambda;
  scaled.r *= config.lambda;
  scaled.h *= growth;
  if (scaled.t_max > 0.0) scaled.t_max *= growth;
  scaled.seed = config.base.seed + 1;
  scaled.validate();

  const ExitTimeEstimate base_est =
      estimate_mean_exit(config.base, config.threads);
  const ExitTimeEstimate scaled_est = estimate_mean_exit(scaled, config.threads);

  const double rse_base = base_est.std_error / base_est.mean;
  const double rse_scaled = scaled_est.std_error / scaled_est.mean;

  ReportRow row;
  row.label = "lambda=" + format_double(config.lambda);
  row.expected = growth;
  row.observed = scaled_est.mean / base_est.mean;
  row.tolerance =
      3.0 * std::sqrt(rse_base * rse_base + rse_scaled * rse_scaled) * growth;
  row.pass = std::abs(row.observed - row.expected) <= row.tolerance;
  row.extras = {{"base_mean", base_est.mean},
                {"scaled_mean", scaled_est.mean},
                {"base_stderr", base_est.std_error},
                {"scaled_stderr", scaled_est.std_error}};
  report.rows.push_back(std::move(row));
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ExitTimeConfig config_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                error.what());
  }
  try {
    ExitTimeConfig config;
    config.alpha = doc.at("alpha").get<double>();
    config.r = doc.at("r").get<double>();
    config.x0 = doc.at("x0").get<Vec>();
    config.mu = detail::measure_from_json(doc.at("mu"));
    const auto& sampler = doc.at("sampler");
    const auto kind = sampler.at("kind").get<std::string>();
    if (kind == "exact") {
      config.sampler = SamplerKind::exact_increment;
    } else if (kind == "cpg") {
      config.sampler = SamplerKind::compound_poisson_gaussian;
    } else {
      throw std::invalid_argument("config: sampler.kind must be exact or cpg");
    }
    if (sampler.contains("delta")) {
      config.delta = sampler.at("delta").get<double>();
    }
    config.h = doc.at("h").get<double>();
    if (doc.contains("t_max")) config.t_max = doc.at("t_max").get<double>();
    config.n_paths = doc.at("n_paths").get<std::uint64_t>();
    config.seed = doc.at("seed").get<std::uint64_t>();
    config.validate();
    return config;
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("config: ") + error.what());
  }
}

std::string config_to_json_text(const ExitTimeConfig& config) {
  nlohmann::json doc;
  doc["alpha"] = config.alpha;
  doc["r"] = config.r;
  doc["x0"] = config.x0;
  doc["mu"] = detail::measure_to_json(config.mu);
  nlohmann::json sampler;
  sampler["kind"] =
      config.sampler == SamplerKind::exact_increment ? "exact" : "cpg";
  if (config.sampler == SamplerKind::compound_poisson_gaussian) {
    sampler["delta"] = config.effective_delta();
  }
  doc["sampler"] = std::move(sampler);
  doc["h"] = config.h;
  doc["t_max"] = config.effective_t_max();
  doc["n_paths"] = config.n_paths;
  doc["seed"] = config.seed;
  return doc.dump();
}

}  // namespace levyball
