// SPDX-License-Identifier: Apache-2.0
//
// Named experiment scenarios, one per specialisation of the factor theorem:
// the general weighted-mean configuration, its beta = 0 reduction, the
// unit-weight |A|_k style configuration with a method distinct from the
// weight system, the order-one Cesaro reduction, and a Fourier application.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absum/config.hpp"

namespace absum::cli {

struct Preset {
  std::string description;
  ExperimentConfig config;
};

inline std::vector<Preset> presets() {
  std::vector<Preset> out;
  const std::vector<std::string> full_checks{
      "matrix-conditions", "hypotheses", "lemma", "index", "decomposition"};

  {
    Preset p;
    p.description =
        "weighted mean with growing weights, quasi-f majorant (full factor "
        "theorem configuration)";
    ExperimentConfig& c = p.config;
    c.name = "thm23-weighted";
    c.series = {"c1-inverse", "(2 + (-1)^n) / 3", 1, "", "sawtooth", 1.0};
    c.factor = "1/(n+1)";
    c.majorant = "log(n+2)";
    c.weights = "n+1";
    c.method = "weighted_mean";
    c.k = 1.5;
    c.sigma = 0.5;
    c.beta = 1.0;
    c.N = 2000;
    c.variant = "quasi-f";
    c.checks = full_checks;
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.description =
        "weighted mean with beta = 0 (quasi-sigma majorant reduction)";
    ExperimentConfig& c = p.config;
    c.name = "thm22-sigma";
    c.series = {"c1-inverse", "(2 + (-1)^n) / 3", 1, "", "sawtooth", 1.0};
    c.factor = "1/(n+1)";
    c.majorant = "log(n+2)";
    c.weights = "1";
    c.method = "weighted_mean";
    c.k = 2.0;
    c.sigma = 0.5;
    c.beta = 0.0;
    c.N = 2000;
    c.variant = "quasi-sigma";
    c.checks = full_checks;
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.description =
        "unit weights with a method distinct from the weight system "
        "(|A|_k-style index)";
    ExperimentConfig& c = p.config;
    c.name = "abs-A-k";
    c.series = {"c1-inverse", "(2 + (-1)^n) / 3", 1, "", "sawtooth", 1.0};
    c.factor = "1/(n+1)";
    c.majorant = "log(n+2)";
    c.weights = "1";
    c.method = "weighted_mean(n+1)";
    c.k = 1.0;
    c.sigma = 0.5;
    c.beta = 1.0;
    c.N = 2000;
    c.variant = "quasi-f";
    c.checks = full_checks;
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.description =
        "unit weights and the matching mean method (order-one Cesaro "
        "reduction)";
    ExperimentConfig& c = p.config;
    c.name = "C1-k";
    c.series = {"c1-inverse", "(2 + (-1)^n) / 3", 1, "", "sawtooth", 1.0};
    c.factor = "1/(n+1)";
    c.majorant = "log(n+2)";
    c.weights = "1";
    c.method = "weighted_mean";
    c.k = 1.0;
    c.sigma = 0.5;
    c.beta = 1.0;
    c.N = 2000;
    c.variant = "quasi-f";
    c.checks = full_checks;
    out.push_back(std::move(p));
  }
  {
    Preset p;
    p.description =
        "factored Fourier series of the sawtooth at x = 1 under the "
        "weighted mean";
    ExperimentConfig& c = p.config;
    c.name = "fourier-sawtooth";
    c.series = {"fourier", "", 1, "", "sawtooth", 1.0};
    c.factor = "1/(n+1)";
    c.majorant = "log(n+2)";
    c.weights = "1";
    c.method = "weighted_mean";
    c.k = 1.0;
    c.sigma = 0.5;
    c.beta = 1.0;
    c.N = 2000;
    c.variant = "quasi-f";
    c.checks = {"fourier"};
    out.push_back(std::move(p));
  }
  return out;
}

inline std::optional<ExperimentConfig> find_preset(const std::string& name) {
  for (const Preset& p : presets())
    if (p.config.name == name) return p.config;
  return std::nullopt;
}

}  // namespace absum::cli
