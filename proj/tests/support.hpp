// SPDX-License-Identifier: Apache-2.0
//
// Shared test helpers: deviation metrics and seeded random generators.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "absum/sequence.hpp"

namespace testsupport {

/// Relative deviation; 0 when both vanish.
inline double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

/// Deviation on the unit scale: |x - y| / max(1, |x|, |y|).  Matrix entries
/// and companion rows live on the row scale (row masses are ~1), where an
/// absolute floor is the meaningful yardstick.
inline double scaled_dev(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline std::vector<double> random_values(unsigned seed, std::size_t count,
                                         double lo = -1.0, double hi = 1.0) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (double& x : out) x = dist(gen);
  return out;
}

/// Random sequence with terms u_n / (n+1-start), u uniform in [lo, hi].
inline absum::LazySequence random_decaying_sequence(unsigned seed,
                                                    std::size_t count,
                                                    absum::Index start = 1) {
  std::vector<double> values = random_values(seed, count);
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] /= static_cast<double>(i + 1);
  return absum::LazySequence::from_values(std::move(values), start,
                                          "random#" + std::to_string(seed));
}

}  // namespace testsupport
