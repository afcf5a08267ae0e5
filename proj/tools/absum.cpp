// SPDX-License-Identifier: Apache-2.0
//
// absum: run declarative summability experiments and write CSV reports.
//
//   absum run <config.toml|preset> [--out DIR] [--N INT] [--tol FLOAT]
//   absum check <config.toml|preset> --only CHECK [--out DIR] [--N INT]
//   absum list-presets

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "absum/absum.hpp"

namespace {

absum::cli::ExperimentConfig load_config(const std::string& source) {
  if (auto preset = absum::cli::find_preset(source)) return *preset;
  std::ifstream in(source);
  if (!in) {
    throw std::invalid_argument("config: '" + source +
                                "' is neither a preset name nor a readable "
                                "file (see `absum list-presets`)");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return absum::cli::parse_config(text.str());
}

void apply_overrides(absum::cli::ExperimentConfig& config,
                     const std::optional<std::string>& out,
                     const std::optional<long long>& n,
                     const std::optional<double>& tol) {
  if (out) config.out_dir = *out;
  if (n) config.N = *n;
  if (tol) config.quad_tol = *tol;
}

int execute(const absum::cli::ExperimentConfig& config,
            const std::optional<std::string>& only) {
  const absum::cli::RunOutcome outcome =
      absum::cli::run_experiment(config, only);
  std::cout << outcome.summary;
  std::cout << "\nwrote:\n";
  for (const std::string& path : outcome.files)
    std::cout << "  " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical experiments in absolute matrix summability"};
  app.require_subcommand(1);

  std::string source;
  std::optional<std::string> out;
  std::optional<long long> n_override;
  std::optional<double> tol_override;
  std::string only;

  CLI::App* run = app.add_subcommand("run", "run every check of a config");
  run->add_option("config", source, "config file or preset name")->required();
  run->add_option("--out", out, "output directory override");
  run->add_option("--N", n_override, "prefix length override");
  run->add_option("--tol", tol_override, "quadrature tolerance override");

  CLI::App* check = app.add_subcommand("check", "run a single check");
  check->add_option("config", source, "config file or preset name")->required();
  check->add_option("--only", only, "check to run")
      ->required()
      ->check(CLI::IsMember(absum::cli::known_checks()));
  check->add_option("--out", out, "output directory override");
  check->add_option("--N", n_override, "prefix length override");
  check->add_option("--tol", tol_override, "quadrature tolerance override");

  CLI::App* list = app.add_subcommand("list-presets", "list named scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (list->parsed()) {
      for (const absum::cli::Preset& preset : absum::cli::presets()) {
        const auto& c = preset.config;
        std::cout << c.name << "\n  " << preset.description << "\n"
                  << "  method " << c.method << ", weights " << c.weights
                  << ", k " << absum::csv::format_double(c.k) << ", variant "
                  << c.variant << ", N " << c.N << "\n";
      }
      return 0;
    }
    absum::cli::ExperimentConfig config = load_config(source);
    apply_overrides(config, out, n_override, tol_override);
    if (check->parsed()) return execute(config, only);
    return execute(config, std::nullopt);
  } catch (const absum::AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
