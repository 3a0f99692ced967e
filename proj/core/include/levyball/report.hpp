#pragma once

#include <string>
#include <utility>
#include <vector>

namespace levyball {

struct ReportRow {
  std::string label;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Command-specific numeric columns (stderr, truncation counts, ...).
  std::vector<std::pair<std::string, double>> extras;
};

/// Machine-readable result of one harness command. The serialized form is a
/// pure function of the command arguments (wall time is console-only
/// diagnostics), so repeated runs produce identical bytes.
struct ExperimentReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportRow> rows;
  /// Column layout for the CSV form; names resolve against the core fields
  /// (label, expected, observed, tolerance, pass) and the row extras.
  std::vector<std::string> csv_columns = {"label", "expected", "observed",
                                          "tolerance", "pass"};
  double wall_time_seconds = 0.0;

  bool all_pass() const;
};

std::string report_to_json_text(const ExperimentReport& report);
std::string report_to_csv_text(const ExperimentReport& report);

/// Inverse of report_to_json_text; used by the round-trip contract tests.
ExperimentReport report_from_json_text(const std::string& text);

}  // namespace levyball
