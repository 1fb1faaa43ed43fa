// Command-line driver for convergence studies.
//
//   urysohn list-presets
//   urysohn run --preset table-4.4 [--format csv|markdown] [--precision table|full] [--output path]
//   urysohn run --config study.json
//
// Exit codes: 0 success, 2 configuration error, 3 solver failure.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "urysohn/errors.hpp"
#include "urysohn/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct RunOptions {
  std::string config_path;
  std::string preset;
  std::string output_path;
  std::string format;
  std::string precision = "table";
};

int run(const RunOptions& options) {
  urysohn::ExperimentConfig config = options.preset.empty() ? urysohn::load_config(options.config_path)
                                                            : urysohn::preset_config(options.preset);
  if (options.format == "csv") config.output_format = urysohn::OutputFormat::Csv;
  if (options.format == "markdown") config.output_format = urysohn::OutputFormat::Markdown;
  const auto precision = options.precision == "full" ? urysohn::Precision::Full : urysohn::Precision::Table;

  const auto report = urysohn::run_experiment(config);
  const std::string text = urysohn::format_report(report, precision);
  if (options.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(options.output_path);
    if (!out) throw urysohn::ConfigError("cannot write output file '" + options.output_path + "'");
    out << text;
  }
  for (const auto& row : report.rows) {
    std::cerr << "n=" << row.n << " m=" << row.m << " newton_iterations=" << row.newton_iterations
              << " seconds=" << row.runtime_seconds << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete modified projection solver for Urysohn integral equations"};
  app.require_subcommand(1);

  RunOptions options;
  auto* run_cmd = app.add_subcommand("run", "Run a convergence study");
  auto* config_opt = run_cmd->add_option("--config", options.config_path, "JSON experiment config");
  auto* preset_opt = run_cmd->add_option("--preset", options.preset, "Built-in experiment (see list-presets)");
  config_opt->excludes(preset_opt);
  run_cmd->add_option("--output", options.output_path, "Write the table to this file instead of stdout");
  run_cmd->add_option("--format", options.format, "Table format")->check(CLI::IsMember({"csv", "markdown"}));
  run_cmd->add_option("--precision", options.precision, "table: 3 significant digits; full: round-trip")
      ->check(CLI::IsMember({"table", "full"}));

  auto* list_cmd = app.add_subcommand("list-presets", "List built-in experiments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& preset : urysohn::presets()) std::cout << preset.name << '\t' << preset.description << '\n';
      return 0;
    }
    if (options.config_path.empty() && options.preset.empty()) {
      std::cerr << "run: one of --config or --preset is required\n";
      return kExitConfig;
    }
    return run(options);
  } catch (const urysohn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const urysohn::NonConvergence& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const urysohn::SingularLinearSystem& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
