#include "levyball/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace levyball {

bool ExperimentReport::all_pass() const {
  for (const ReportRow& row : rows) {
    if (!row.pass) return false;
  }
  return true;
}

std::string report_to_json_text(const ExperimentReport& report) {
  nlohmann::json doc;
  doc["command"] = report.command;
  auto inputs = nlohmann::json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = value;
  doc["inputs"] = std::move(inputs);
  auto rows = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::json item;
    item["label"] = row.label;
    item["expected"] = row.expected;
    item["observed"] = row.observed;
    item["tolerance"] = row.tolerance;
    item["pass"] = row.pass;
    if (!row.extras.empty()) {
      auto extras = nlohmann::json::object();
      for (const auto& [key, value] : row.extras) extras[key] = value;
      item["extras"] = std::move(extras);
    }
    rows.push_back(std::move(item));
  }
  doc["rows"] = std::move(rows);
  doc["csv_columns"] = report.csv_columns;
  return doc.dump(2) + "\n";
}

namespace {

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string resolve_column(const ReportRow& row, const std::string& name) {
  if (name == "label") return row.label;
  if (name == "expected") return format_double(row.expected);
  if (name == "observed") return format_double(row.observed);
  if (name == "tolerance") return format_double(row.tolerance);
  if (name == "pass") return row.pass ? "1" : "0";
  for (const auto& [key, value] : row.extras) {
    if (key == name) {
      if (name == "n_truncated" || name == "n_paths") {
        return std::to_string(static_cast<long long>(value));
      }
      return format_double(value);
    }
  }
  throw std::invalid_argument("report CSV: unknown column \"" + name + "\"");
}

}  // namespace

std::string report_to_csv_text(const ExperimentReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.csv_columns.size(); ++i) {
    if (i) out += ',';
    out += report.csv_columns[i];
  }
  out += '\n';
  for (const ReportRow& row : report.rows) {
    for (std::size_t i = 0; i < report.csv_columns.size(); ++i) {
      if (i) out += ',';
      out += resolve_column(row, report.csv_columns[i]);
    }
    out += '\n';
  }
  return out;
}

ExperimentReport report_from_json_text(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  ExperimentReport report;
  report.command = doc.at("command").get<std::string>();
  for (const auto& [key, value] : doc.at("inputs").items()) {
    report.inputs.emplace_back(key, value.get<std::string>());
  }
  for (const auto& item : doc.at("rows")) {
    ReportRow row;
    row.label = item.at("label").get<std::string>();
    row.expected = item.at("expected").get<double>();
    row.observed = item.at("observed").get<double>();
    row.tolerance = item.at("tolerance").get<double>();
    row.pass = item.at("pass").get<bool>();
    if (item.contains("extras")) {
      for (const auto& [key, value] : item.at("extras").items()) {
        row.extras.emplace_back(key, value.get<double>());
      }
    }
    report.rows.push_back(std::move(row));
  }
  if (doc.contains("csv_columns")) {
    report.csv_columns = doc.at("csv_columns").get<std::vector<std::string>>();
  }
  return report;
}

}  // namespace levyball
