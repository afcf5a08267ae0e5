// SPDX-License-Identifier: Apache-2.0
//
// Experiment runner: resolves a validated config, executes the requested
// checks in a fixed order, and writes deterministic CSV reports plus a
// human-readable summary.

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "absum/config.hpp"
#include "absum/decomposition.hpp"
#include "absum/fourier.hpp"
#include "absum/hypotheses.hpp"
#include "absum/indices.hpp"
#include "absum/matrix_conditions.hpp"
#include "absum/presets.hpp"
#include "absum/sequence_diagnostics.hpp"

namespace absum::cli {

struct RunOutcome {
  std::vector<std::string> files;  ///< paths written, in order
  std::string summary;
};

namespace detail {

inline bool wants(const ExperimentConfig& c, const std::string& check,
                  const std::optional<std::string>& only) {
  if (only) return *only == check;
  return std::find(c.checks.begin(), c.checks.end(), check) != c.checks.end();
}

inline std::string scenario_line(const ExperimentConfig& c) {
  const bool unit_weights = c.weights == "1";
  if (c.method == "weighted_mean" && unit_weights)
    return "scenario: mean method equals unit weights (order-one Cesaro "
           "reduction, C1-k family)";
  if (c.method == "weighted_mean")
    return "scenario: method is the weighted mean of the weight system "
           "(Riesz-mean reduction, thm23-weighted family)";
  if (unit_weights)
    return "scenario: unit weights with a general method (|A|_k-style index, "
           "abs-A-k family)";
  return "scenario: general method and weights";
}

inline void append_report_lines(std::ostringstream& os,
                                const HypothesisLedger& ledger) {
  for (const auto& entry : ledger.entries) {
    os << "  " << entry.id << ": " << to_string(entry.report.verdict)
       << " (sup " << csv::format_double(entry.report.sup_ratio) << " at n="
       << entry.report.argmax_index << ", tail slope "
       << csv::format_double(entry.report.tail_slope) << ")\n";
  }
}

}  // namespace detail

/// Executes the config.  `only` restricts the run to a single named check
/// (the `check` subcommand).  Throws std::invalid_argument for config
/// errors and AccuracyError for quadrature failures.
inline RunOutcome run_experiment(const ExperimentConfig& config,
                                 const std::optional<std::string>& only = {}) {
  validate(config);
  if (only) {
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), *only) == known.end())
      throw std::invalid_argument("--only: unknown check '" + *only + "'");
    if (*only == "fourier" && config.series.kind != "fourier")
      throw std::invalid_argument(
          "--only: the fourier check needs series.kind = \"fourier\"");
  }

  const GrowthThresholds thresholds;
  WeightSystem weights = build_weights(config);
  TriangularMethod method = build_method(config, weights);
  const HypothesisVariant variant = build_variant(config);
  LazySequence factor =
      build_expression_sequence(config.factor, 1, "lambda:" + config.factor);
  LazySequence majorant = build_expression_sequence(
      config.majorant, 1, "X:" + config.majorant);
  const Index N = config.N;

  // The series is resolved lazily: Fourier configs only need it when a
  // non-fourier check asks for terms.
  std::optional<LazySequence> series;
  std::optional<FourierState> fourier_state;
  auto the_series = [&]() -> const LazySequence& {
    if (!series) {
      if (config.series.kind == "fourier") {
        fourier_state.emplace(build_periodic(config.series), config.series.x,
                              N);
        series = fourier_state->term_sequence();
      } else {
        series = build_series(config.series);
      }
    }
    return *series;
  };

  std::filesystem::create_directories(config.out_dir);
  RunOutcome outcome;
  auto open_file = [&](const std::string& name) {
    const std::string path =
        (std::filesystem::path(config.out_dir) / name).string();
    outcome.files.push_back(path);
    return std::ofstream(path, std::ios::binary | std::ios::trunc);
  };

  std::ostringstream summary;
  summary << "experiment: " << config.name << "\n";
  summary << detail::scenario_line(config) << "\n";
  summary << "\n--- configuration ---\n" << render(config);

  HypothesisLedger all_reports;
  std::optional<SummabilityLedger> index_ledger;

  if (detail::wants(config, "matrix-conditions", only)) {
    summary << "\n--- matrix-conditions ---\n";
    for (auto& entry : check_matrix_conditions(method, weights, N, thresholds))
      all_reports.push("m:" + entry.id, std::move(entry.report));
    auto [identity, inequalities] = column_difference_checks(method, N);
    all_reports.push("m:hat-column-identity", std::move(identity));
    all_reports.push("m:difference-bounds", std::move(inequalities));
    summary << "  checked rows 0.." << N << "\n";
  }

  if (detail::wants(config, "hypotheses", only)) {
    summary << "\n--- hypotheses (" << config.variant << ") ---\n";
    HypothesisLedger conditions = check_hypotheses(
        the_series(), factor, majorant, weights, config.k, variant, N,
        thresholds);
    for (auto& entry : conditions.entries)
      all_reports.push(std::move(entry.id), std::move(entry.report));
    // Structural diagnostic of the majorant, per variant.
    if (variant == HypothesisVariant::almost_increasing) {
      all_reports.push("x-structure",
                       almost_increasing_diagnostic(majorant, N, thresholds));
    } else {
      const double beta =
          variant == HypothesisVariant::quasi_sigma ? 0.0 : config.beta;
      all_reports.push(
          "x-structure",
          quasi_f_power_check(majorant, config.sigma, beta, N, thresholds)
              .report);
    }
    summary << "  overall: " << to_string(conditions.overall()) << "\n";
  }

  if (detail::wants(config, "lemma", only)) {
    summary << "\n--- lemma ---\n";
    auto [first, second] = check_lemma(factor, majorant, N, thresholds);
    summary << "  l1: " << to_string(first.verdict)
            << ", l2: " << to_string(second.verdict) << "\n";
    all_reports.push("l1", std::move(first));
    all_reports.push("l2", std::move(second));
  }

  if (detail::wants(config, "index", only)) {
    summary << "\n--- index (factored series) ---\n";
    index_ledger = index_matrix(factored_series(the_series(), factor), method,
                                weights, config.k, N);
    GrowthReport flat = index_ledger->flattening_report(thresholds);
    summary << "  " << index_ledger->method_tag << ": total "
            << csv::format_double(index_ledger->total()) << ", "
            << to_string(flat.verdict) << "\n";
    all_reports.push("index-flattening", std::move(flat));
  }

  if (detail::wants(config, "decomposition", only)) {
    summary << "\n--- decomposition ---\n";
    BoundedSums sums = bounded_sums(method, the_series(), factor, weights,
                                    config.k, N, /*keep_rows=*/true);
    double worst_residual = 0.0;
    Index worst_at = 1;
    for (const DecompositionRow& row : sums.rows) {
      const double scaled =
          std::abs(row.residual) / std::max(1.0, std::abs(row.delta_I));
      if (scaled > worst_residual) {
        worst_residual = scaled;
        worst_at = row.n;
      }
    }
    all_reports.push("d:residual",
                     grade_worst_deviation(
                         "delta_I_n = I1 + I2 + I3 + I4 for n <= " +
                             std::to_string(N),
                         worst_residual, worst_at, 1e-10));
    for (std::size_t r = 0; r < 4; ++r) {
      all_reports.push("d:I" + std::to_string(r + 1),
                       sums.parts[r].flattening_report(thresholds));
    }
    all_reports.push("d:combined", sums.combined.flattening_report(thresholds));
    summary << "  worst scaled residual "
            << csv::format_double(worst_residual) << " at n=" << worst_at
            << "\n";

    auto rows_file = open_file("decomposition.csv");
    write_decomposition_csv(rows_file, sums.rows);
    for (std::size_t r = 0; r < 4; ++r) {
      auto part_file =
          open_file("decomposition_ledger_r" + std::to_string(r + 1) + ".csv");
      sums.parts[r].write_csv(part_file);
    }
    if (!index_ledger) index_ledger = std::move(sums.combined);
  }

  if (detail::wants(config, "fourier", only)) {
    summary << "\n--- fourier ---\n";
    FourierExperiment experiment = fourier_summability_experiment(
        build_periodic(config.series), config.series.x, factor, majorant,
        weights, method, config.k, variant, N, thresholds, config.quad_tol);
    summary << "  hypotheses overall: "
            << to_string(experiment.hypotheses.overall()) << "\n";
    GrowthReport flat = experiment.ledger.flattening_report(thresholds);
    summary << "  " << experiment.ledger.method_tag << ": total "
            << csv::format_double(experiment.ledger.total()) << ", "
            << to_string(flat.verdict) << "\n";
    for (auto& entry : experiment.hypotheses.entries)
      all_reports.push("f:" + entry.id, std::move(entry.report));
    all_reports.push("f:index-flattening", std::move(flat));
    index_ledger = std::move(experiment.ledger);
  }

  if (!all_reports.entries.empty()) {
    auto file = open_file("hypotheses.csv");
    all_reports.write_csv(file);
  }
  if (index_ledger) {
    auto file = open_file("ledger.csv");
    index_ledger->write_csv(file);
  }

  summary << "\n--- reports ---\n";
  detail::append_report_lines(summary, all_reports);

  auto summary_file = open_file("summary.txt");
  outcome.summary = summary.str();
  summary_file << outcome.summary;
  return outcome;
}

}  // namespace absum::cli
