#include <cstdio>
#include <optional>
#include <string>

#include "urysohn/experiments.hpp"

namespace urysohn {

namespace {

std::string format_number(double value, const char* table_format, Precision precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, precision == Precision::Full ? "%.17g" : table_format, value);
  return buffer;
}

std::string error_cell(double value, Precision precision) { return format_number(value, "%.2e", precision); }

std::string error_cell(const std::optional<double>& value, Precision precision) {
  return value ? error_cell(*value, precision) : std::string();
}

std::string delta_cell(const std::optional<double>& value, Precision precision) {
  return value ? format_number(*value, "%.2f", precision) : std::string();
}

}  // namespace

std::string format_csv(const ConvergenceReport& report, Precision precision) {
  std::string out = "n,m,err_mod,delta_mod,err_iter,delta_iter,err_extrap,delta_extrap\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.m) + ',' + error_cell(row.err_mod, precision) + ',' +
           delta_cell(row.delta_mod, precision) + ',' + error_cell(row.err_iter, precision) + ',' +
           delta_cell(row.delta_iter, precision) + ',' + error_cell(row.err_extrap, precision) + ',' +
           delta_cell(row.delta_extrap, precision) + '\n';
  }
  return out;
}

std::string format_markdown(const ConvergenceReport& report, Precision precision) {
  std::string out =
      "| n | m | err_mod | delta_mod | err_iter | delta_iter | err_extrap | delta_extrap |\n"
      "|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const auto& row : report.rows) {
    out += "| " + std::to_string(row.n) + " | " + std::to_string(row.m) + " | " + error_cell(row.err_mod, precision) +
           " | " + delta_cell(row.delta_mod, precision) + " | " + error_cell(row.err_iter, precision) + " | " +
           delta_cell(row.delta_iter, precision) + " | " + error_cell(row.err_extrap, precision) + " | " +
           delta_cell(row.delta_extrap, precision) + " |\n";
  }
  return out;
}

std::string format_report(const ConvergenceReport& report, Precision precision) {
  return report.config.output_format == OutputFormat::Markdown ? format_markdown(report, precision)
                                                               : format_csv(report, precision);
}

}  // namespace urysohn
