// levyball: numerical verification of the ball exit-time formula for
// symmetric stable processes, plus Monte Carlo estimation for arbitrary
// spectral measures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "levyball/experiments.hpp"

namespace {

using namespace levyball;

constexpr int kExitPass = 0;
constexpr int kExitRowFailure = 1;
constexpr int kExitConfigError = 2;

struct OutputOptions {
  std::string out_path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& options) {
  cmd->add_option("--out", options.out_path, "Write the report to this path");
  cmd->add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int finish(const ExperimentReport& report, const OutputOptions& options) {
  for (const ReportRow& row : report.rows) {
    std::printf("%s  %-40s observed %.17g expected %.17g (tol %.3g)\n",
                row.pass ? "PASS" : "FAIL", row.label.c_str(), row.observed,
                row.expected, row.tolerance);
  }
  const std::size_t failed =
      report.rows.size() -
      static_cast<std::size_t>(
          std::count_if(report.rows.begin(), report.rows.end(),
                        [](const ReportRow& row) { return row.pass; }));
  std::printf("%s: %zu/%zu rows passed\n", report.command.c_str(),
              report.rows.size() - failed, report.rows.size());
  std::fprintf(stderr, "wall time: %.2f s\n", report.wall_time_seconds);

  if (!options.out_path.empty()) {
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out) {
      throw std::invalid_argument("cannot write report to " + options.out_path);
    }
    out << (options.format == "json" ? report_to_json_text(report)
                                     : report_to_csv_text(report));
  }
  return report.all_pass() ? kExitPass : kExitRowFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Mean exit times of symmetric stable processes from balls:\n"
      "closed forms, principal-value quadrature checks, Monte Carlo."};
  app.require_subcommand(1);

  GetoorSweepConfig getoor;
  OutputOptions getoor_out;
  auto* cmd_getoor = app.add_subcommand(
      "verify-getoor", "Sweep the interval identity (expected value -1)");
  cmd_getoor->add_option("--alphas", getoor.alphas, "Stability indices")
      ->delimiter(',');
  cmd_getoor->add_option("--radii", getoor.radii, "Ball radii")->delimiter(',');
  cmd_getoor
      ->add_option("--u-fracs", getoor.u_fractions,
                   "Evaluation points as fractions of r, inside (-1, 1)")
      ->delimiter(',');
  cmd_getoor->add_option("--tolerance", getoor.tolerance, "Absolute tolerance")
      ->capture_default_str();
  add_output_flags(cmd_getoor, getoor_out);

  LemmaSweepConfig lemma;
  OutputOptions lemma_out;
  auto* cmd_lemma = app.add_subcommand(
      "verify-lemma", "Random directional cases (expected -|v|^alpha)");
  cmd_lemma->add_option("--cases", lemma.cases, "Number of random cases")
      ->capture_default_str();
  cmd_lemma->add_option("--dims", lemma.dims, "Dimensions")->delimiter(',');
  cmd_lemma->add_option("--r", lemma.r, "Ball radius")->capture_default_str();
  cmd_lemma->add_option("--seed", lemma.seed, "RNG seed")->required();
  cmd_lemma->add_option("--tolerance", lemma.tolerance, "Absolute tolerance")
      ->capture_default_str();
  add_output_flags(cmd_lemma, lemma_out);

  GeneratorSweepConfig generator;
  OutputOptions generator_out;
  auto* cmd_generator = app.add_subcommand(
      "verify-generator",
      "Generator closed forms (-|mu|, -|mu|/2) with quadrature cross-checks");
  cmd_generator->add_option("--alphas", generator.alphas, "Stability indices")
      ->delimiter(',');
  cmd_generator->add_option("--r", generator.r, "Ball radius")
      ->capture_default_str();
  cmd_generator->add_option("--seed", generator.seed, "RNG seed")->required();
  add_output_flags(cmd_generator, generator_out);

  ClosedFormConfig closed;
  OutputOptions closed_out;
  auto* cmd_closed =
      app.add_subcommand("closed-form", "Print the closed-form exit-time table");
  cmd_closed->add_option("--alpha", closed.alpha, "Stability index")
      ->capture_default_str();
  cmd_closed->add_option("--r", closed.r, "Ball radius")->capture_default_str();
  cmd_closed->add_option("--mu-total", closed.mu_total, "Total spectral mass")
      ->capture_default_str();
  cmd_closed->add_option("--x0-norms", closed.x0_norms, "|x0| grid")
      ->delimiter(',');
  add_output_flags(cmd_closed, closed_out);

  EstimateCommandConfig estimate;
  std::string estimate_config_path;
  OutputOptions estimate_out;
  auto* cmd_est = app.add_subcommand(
      "estimate", "Monte Carlo mean exit time vs the closed form");
  cmd_est->add_option("--config", estimate_config_path, "Simulation config JSON")
      ->required();
  cmd_est->add_option("--threads", estimate.threads, "Worker threads (0 = auto)");
  cmd_est
      ->add_option("--bias-budget", estimate.bias_budget_fraction,
                   "Bias budget as a fraction of the expected value")
      ->capture_default_str();
  add_output_flags(cmd_est, estimate_out);

  MassEquivalenceConfig mass;
  OutputOptions mass_out;
  auto* cmd_mass = app.add_subcommand(
      "mass-equivalence",
      "Equal-mass measures (antipodal, cross, isotropic) agree pairwise");
  cmd_mass->add_option("--mass", mass.mass, "Total spectral mass")
      ->capture_default_str();
  cmd_mass
      ->add_option("--masses", mass.masses,
                   "Per-variant masses {antipodal, cross, isotropic}; unequal "
                   "values run the negative control")
      ->delimiter(',')
      ->expected(3);
  cmd_mass->add_option("--alphas", mass.alphas, "Stability indices")
      ->delimiter(',');
  cmd_mass->add_option("--r", mass.r, "Ball radius")->capture_default_str();
  cmd_mass->add_option("--n-paths", mass.n_paths, "Paths per estimate")
      ->capture_default_str();
  cmd_mass
      ->add_option("--h-factor", mass.h_factor,
                   "Step size as a fraction of the closed-form mean")
      ->capture_default_str();
  cmd_mass->add_option("--seed", mass.seed, "RNG seed")->required();
  cmd_mass->add_option("--threads", mass.threads, "Worker threads (0 = auto)");
  add_output_flags(cmd_mass, mass_out);

  ScalingCheckConfig scaling;
  std::string scaling_config_path;
  OutputOptions scaling_out;
  auto* cmd_scaling = app.add_subcommand(
      "scaling-check", "Estimates at (x0, r) and (L x0, L r) scale as L^alpha");
  cmd_scaling
      ->add_option("--config", scaling_config_path, "Base simulation config JSON")
      ->required();
  cmd_scaling->add_option("--lambda", scaling.lambda, "Scale factor")
      ->capture_default_str();
  cmd_scaling->add_option("--threads", scaling.threads,
                          "Worker threads (0 = auto)");
  add_output_flags(cmd_scaling, scaling_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);  // prints help or the parse error
    return code == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (cmd_getoor->parsed()) {
      return finish(cmd_verify_getoor(getoor), getoor_out);
    }
    if (cmd_lemma->parsed()) {
      return finish(cmd_verify_lemma(lemma), lemma_out);
    }
    if (cmd_generator->parsed()) {
      return finish(cmd_verify_generator(generator), generator_out);
    }
    if (cmd_closed->parsed()) {
      return finish(cmd_closed_form(closed), closed_out);
    }
    if (cmd_est->parsed()) {
      estimate.sim = config_from_json_text(read_file(estimate_config_path));
      return finish(cmd_estimate(estimate), estimate_out);
    }
    if (cmd_mass->parsed()) {
      return finish(cmd_mass_equivalence(mass), mass_out);
    }
    if (cmd_scaling->parsed()) {
      scaling.base = config_from_json_text(read_file(scaling_config_path));
      return finish(cmd_scaling_check(scaling), scaling_out);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
