// SPDX-License-Identifier: Apache-2.0
//
// 2*pi-periodic functions on the base interval [-pi, pi), extended by exact
// argument reduction, with registered breakpoints (jumps or kinks) so that
// quadrature panels can align with them.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absum/csv.hpp"

namespace absum {

enum class SmoothnessHint { smooth, piecewise, bv_only };

class PeriodicFunction {
 public:
  using Evaluator = std::function<double(double)>;

  PeriodicFunction(Evaluator on_base, SmoothnessHint hint,
                   std::vector<double> breakpoints = {},
                   std::string name = "f")
      : eval_(std::move(on_base)),
        hint_(hint),
        breakpoints_(std::move(breakpoints)),
        name_(std::move(name)) {
    std::sort(breakpoints_.begin(), breakpoints_.end());
  }

  /// Value at any real t, reduced into the base period.
  double operator()(double t) const { return eval_(reduce(t)); }

  /// Exact periodic argument reduction into [-pi, pi].
  static double reduce(double t) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(t, two_pi);
    if (r < -std::numbers::pi) r += two_pi;
    if (r > std::numbers::pi) r -= two_pi;
    return r;
  }

  SmoothnessHint hint() const { return hint_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::string& name() const { return name_; }

  // ------------------------------------------------------------ library --

  /// f(t) = t on (-pi, pi); jump at +-pi.
  static PeriodicFunction sawtooth() {
    return PeriodicFunction([](double t) { return t; },
                            SmoothnessHint::piecewise,
                            {-std::numbers::pi, std::numbers::pi}, "sawtooth");
  }

  /// f(t) = sign(t); jumps at 0 and +-pi.
  static PeriodicFunction square() {
    return PeriodicFunction(
        [](double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); },
        SmoothnessHint::piecewise,
        {-std::numbers::pi, 0.0, std::numbers::pi}, "square");
  }

  /// f(t) = |t|; continuous with kinks at 0 and +-pi.
  static PeriodicFunction triangle() {
    return PeriodicFunction([](double t) { return std::abs(t); },
                            SmoothnessHint::piecewise,
                            {-std::numbers::pi, 0.0, std::numbers::pi},
                            "triangle");
  }

  /// f(t) = sin(m t).
  static PeriodicFunction harmonic(int m) {
    return PeriodicFunction(
        [m](double t) { return std::sin(m * t); }, SmoothnessHint::smooth, {},
        "sin(" + std::to_string(m) + "t)");
  }

  /// Piecewise-linear interpolant of samples (t_i, f_i) on [-pi, pi],
  /// wrapped periodically between the last and first sample.
  static PeriodicFunction from_samples(std::vector<std::pair<double, double>> samples,
                                       std::string name = "sampled") {
    if (samples.size() < 2)
      throw std::invalid_argument("PeriodicFunction: need at least 2 samples");
    std::sort(samples.begin(), samples.end());
    auto data = std::make_shared<std::vector<std::pair<double, double>>>(
        std::move(samples));
    std::vector<double> breaks;
    for (const auto& s : *data) breaks.push_back(s.first);
    return PeriodicFunction(
        [data](double t) {
          const auto& pts = *data;
          auto it = std::lower_bound(
              pts.begin(), pts.end(), t,
              [](const std::pair<double, double>& p, double x) {
                return p.first < x;
              });
          if (it == pts.begin()) return pts.front().second;
          if (it == pts.end()) return pts.back().second;
          const auto& [t1, f1] = *(it - 1);
          const auto& [t2, f2] = *it;
          if (t2 == t1) return f2;
          return f1 + (f2 - f1) * (t - t1) / (t2 - t1);
        },
        SmoothnessHint::bv_only, std::move(breaks), std::move(name));
  }

  /// Loads samples from a two-column CSV (t, f(t)).
  static PeriodicFunction from_csv(const std::string& path) {
    std::vector<std::pair<double, double>> samples;
    for (const auto& row : csv::read_table(path)) {
      if (row.size() != 2)
        throw std::runtime_error(path + ": expected two columns (t, f)");
      samples.emplace_back(row[0], row[1]);
    }
    return from_samples(std::move(samples), "sampled(" + path + ")");
  }

 private:
  Evaluator eval_;
  SmoothnessHint hint_;
  std::vector<double> breakpoints_;
  std::string name_;
};

}  // namespace absum
