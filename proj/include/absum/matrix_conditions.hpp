// SPDX-License-Identifier: Apache-2.0
//
// The four structural conditions a normal method must satisfy for the main
// factor theorem: unit first companion column, columnwise monotonicity,
// diagonal comparable to p_n/P_n, and the weighted hat-column sum bounded by
// the diagonal.  Violations are reported, never thrown.

#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "absum/compensated.hpp"
#include "absum/growth.hpp"
#include "absum/triangular.hpp"
#include "absum/weights.hpp"

namespace absum {

struct MatrixConditionEntry {
  std::string id;
  GrowthReport report;
};

/// Checks rows 0..N.  Returns one entry per condition, in order:
///   "bar-row-unit"     bar_a_n0 = 1 for every n            (tolerance 1e-12)
///   "column-monotone"  a_{n-1,v} >= a_nv for n >= v+1
///   "diagonal-weight"  a_nn P_n / p_n = O(1)
///   "hat-column-sum"   |sum_{v<n} hat_a_{n,v+1}/v| = O(a_nn)
inline std::vector<MatrixConditionEntry> check_matrix_conditions(
    const TriangularMethod& A, const WeightSystem& w, Index N,
    const GrowthThresholds& thr = {}) {
  if (N < 2)
    throw std::invalid_argument("check_matrix_conditions: N >= 2 required");

  double worst_unit = 0.0;
  Index worst_unit_at = 0;
  double worst_monotone = 0.0;
  Index worst_monotone_at = 1;
  double entry_scale = 0.0;
  std::vector<double> diag_ratio;
  std::vector<double> hat_ratio;  // from n = 2
  diag_ratio.reserve(static_cast<std::size_t>(N + 1));

  std::shared_ptr<const std::vector<double>> prev_row;
  for (Index n = 0; n <= N; ++n) {
    auto bar = A.bar_row(n);
    auto cur = A.row(n);
    const double unit_dev = std::abs((*bar)[0] - 1.0);
    if (unit_dev > worst_unit) {
      worst_unit = unit_dev;
      worst_unit_at = n;
    }
    for (Index v = 0; v <= n; ++v)
      entry_scale = std::max(entry_scale,
                             std::abs((*cur)[static_cast<std::size_t>(v)]));
    if (n >= 1) {
      for (Index v = 0; v <= n - 1; ++v) {
        const double rise = (*cur)[static_cast<std::size_t>(v)] -
                            (*prev_row)[static_cast<std::size_t>(v)];
        if (rise > worst_monotone) {
          worst_monotone = rise;
          worst_monotone_at = n;
        }
      }
    }
    const double ann = (*cur)[static_cast<std::size_t>(n)];
    diag_ratio.push_back(std::abs(ann) * w.ratio(n));
    if (n >= 2) {
      auto hat = A.hat_row(n);
      CompensatedSum acc;
      for (Index v = 1; v <= n - 1; ++v)
        acc += (*hat)[static_cast<std::size_t>(v + 1)] /
               static_cast<double>(v);
      hat_ratio.push_back(std::abs(acc.value()) / std::abs(ann));
    }
    prev_row = cur;
  }

  std::vector<MatrixConditionEntry> out;
  out.push_back({"bar-row-unit",
                 grade_worst_deviation("bar_a_n0 = 1 for all n <= " +
                                           std::to_string(N),
                                       worst_unit, worst_unit_at, 1e-12)});
  out.push_back(
      {"column-monotone",
       grade_worst_deviation("a_{n-1,v} >= a_nv for n >= v+1", worst_monotone,
                             worst_monotone_at,
                             1e-13 * std::max(1.0, entry_scale))});
  out.push_back({"diagonal-weight",
                 grade_ratio_history("a_nn P_n / p_n = O(1)", diag_ratio, 0,
                                     thr)});
  out.push_back({"hat-column-sum",
                 grade_ratio_history("sum_{v<n} hat_a_{n,v+1}/v = O(a_nn)",
                                     hat_ratio, 2, thr)});
  return out;
}

}  // namespace absum
