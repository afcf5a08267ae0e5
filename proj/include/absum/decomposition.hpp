// SPDX-License-Identifier: Apache-2.0
//
// The Abel-transformed split of the hat-transform of a factored series.
// For n >= 1, with t the order-one mean of (n a_n),
//
//   delta_I_n = sum_{v=1..n} hat_a_nv a_v lambda_v
//             = I1 + I2 + I3 + I4
//
//   I1 = sum_{v<n} (a_nv - a_{n-1,v}) lambda_v t_v (v+1)/v
//   I2 = sum_{v<n} hat_a_{n,v+1} (lambda_v - lambda_{v+1}) t_v (v+1)/v
//   I3 = sum_{v<n} hat_a_{n,v+1} lambda_{v+1} t_v / v
//   I4 = a_nn lambda_n t_n (n+1)/n
//
// an identity that is exact in exact arithmetic; the residual of each row is
// the library's central regression quantity.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "absum/cesaro.hpp"
#include "absum/compensated.hpp"
#include "absum/csv.hpp"
#include "absum/growth.hpp"
#include "absum/ledger.hpp"
#include "absum/sequence.hpp"
#include "absum/triangular.hpp"
#include "absum/weights.hpp"

namespace absum {

struct DecompositionRow {
  Index n = 0;
  double delta_I = 0.0;
  double I1 = 0.0, I2 = 0.0, I3 = 0.0, I4 = 0.0;
  double residual = 0.0;  ///< delta_I - (I1+I2+I3+I4)
};

namespace detail {

inline DecompositionRow decompose_at(const TriangularMethod& A,
                                     const LazySequence& a,
                                     const LazySequence& lambda,
                                     const LazySequence& t, Index n) {
  auto cur = A.row(n);
  auto prev = n >= 1 ? A.row(n - 1) : nullptr;
  auto hat = A.hat_row(n);

  CompensatedSum direct, i1, i2, i3;
  for (Index v = 1; v <= n; ++v) {
    direct += (*hat)[static_cast<std::size_t>(v)] * a.term_or_zero(v) *
              lambda[v];
  }
  for (Index v = 1; v <= n - 1; ++v) {
    const double vd = static_cast<double>(v);
    const double tv = t[v];
    const double swell = tv * (vd + 1.0) / vd;
    const double col_diff = (*cur)[static_cast<std::size_t>(v)] -
                            (*prev)[static_cast<std::size_t>(v)];
    const double hat_next = (*hat)[static_cast<std::size_t>(v + 1)];
    i1 += col_diff * lambda[v] * swell;
    i2 += hat_next * (lambda[v] - lambda[v + 1]) * swell;
    i3 += hat_next * lambda[v + 1] * tv / vd;
  }
  DecompositionRow row;
  row.n = n;
  row.delta_I = direct.value();
  row.I1 = i1.value();
  row.I2 = i2.value();
  row.I3 = i3.value();
  const double nd = static_cast<double>(n);
  row.I4 = (*cur)[static_cast<std::size_t>(n)] * lambda[n] * t[n] *
           (nd + 1.0) / nd;
  row.residual = row.delta_I - (row.I1 + row.I2 + row.I3 + row.I4);
  return row;
}

}  // namespace detail

/// One decomposition row.  n >= 1; t is derived from a internally.
inline DecompositionRow decompose(const TriangularMethod& A,
                                  const LazySequence& a,
                                  const LazySequence& lambda, Index n) {
  if (n < 1) throw std::invalid_argument("decompose: n >= 1 required");
  LazySequence t = c1_mean_of(a);
  return detail::decompose_at(A, a, lambda, t, n);
}

/// Streams rows 1..N to the visitor, sharing the mean scan and row caches.
inline void decompose_range(const TriangularMethod& A, const LazySequence& a,
                            const LazySequence& lambda, Index N,
                            const std::function<void(const DecompositionRow&)>&
                                visit) {
  LazySequence t = c1_mean_of(a);
  for (Index n = 1; n <= N; ++n)
    visit(detail::decompose_at(A, a, lambda, t, n));
}

struct BoundedSums {
  std::array<SummabilityLedger, 4> parts;  ///< one per I_{n,r}
  SummabilityLedger combined;              ///< the |A,p_n|_k ledger
  std::vector<DecompositionRow> rows;
};

/// Ledgers (P_n/p_n)^{k-1} |I_{n,r}|^k for r = 1..4 plus the combined
/// |A,p_n|_k ledger, built from one decomposition sweep.
inline BoundedSums bounded_sums(const TriangularMethod& A,
                                const LazySequence& a,
                                const LazySequence& lambda,
                                const WeightSystem& w, double k, Index N,
                                bool keep_rows = false) {
  std::array<LedgerBuilder, 4> builders{
      LedgerBuilder("I1 of " + A.name(), k),
      LedgerBuilder("I2 of " + A.name(), k),
      LedgerBuilder("I3 of " + A.name(), k),
      LedgerBuilder("I4 of " + A.name(), k)};
  LedgerBuilder combined("|" + A.name() + ",p|_" + std::to_string(k) +
                             " of factored series",
                         k);
  BoundedSums out;
  decompose_range(A, a, lambda, N, [&](const DecompositionRow& row) {
    const double ratio = w.ratio(row.n);
    builders[0].append(ratio, row.I1);
    builders[1].append(ratio, row.I2);
    builders[2].append(ratio, row.I3);
    builders[3].append(ratio, row.I4);
    combined.append(ratio, row.delta_I);
    if (keep_rows) out.rows.push_back(row);
  });
  for (std::size_t r = 0; r < 4; ++r) out.parts[r] = builders[r].take();
  out.combined = combined.take();
  return out;
}

/// Verifies, over all v <= n <= N:
///  1. the column identity hat_a_nv - hat_a_{n,v+1} = a_nv - a_{n-1,v}
///     (worst deviation on the unit row scale; tolerance 1e-13), and
///  2. the two inequalities sum_{v<n} |a_nv - a_{n-1,v}| <= a_nn (rows) and
///     sum_{n>v} |a_nv - a_{n-1,v}| <= a_vv (columns), reporting the worst
///     violation (zero slack deficit when both hold).
inline std::pair<GrowthReport, GrowthReport> column_difference_checks(
    const TriangularMethod& A, Index N) {
  double worst_dev = 0.0;
  Index worst_dev_at = 0;
  double worst_violation = 0.0;
  Index worst_violation_at = 0;
  std::vector<CompensatedSum> column_sums(static_cast<std::size_t>(N));
  std::vector<CompensatedSum> hat_column_sums(static_cast<std::size_t>(N));

  std::shared_ptr<const std::vector<double>> prev;
  for (Index n = 0; n <= N; ++n) {
    auto cur = A.row(n);
    auto hat = A.hat_row(n);
    CompensatedSum row_sum;
    for (Index v = 0; v <= n; ++v) {
      const double hat_here = (*hat)[static_cast<std::size_t>(v)];
      const double hat_next =
          v < n ? (*hat)[static_cast<std::size_t>(v + 1)] : 0.0;
      const double col_diff =
          (*cur)[static_cast<std::size_t>(v)] -
          (n >= 1 && v < n ? (*prev)[static_cast<std::size_t>(v)] : 0.0);
      const double dev = std::abs((hat_here - hat_next) - col_diff);
      const double scale = std::max(
          {1.0, std::abs(hat_here), std::abs(hat_next), std::abs(col_diff)});
      if (dev / scale > worst_dev) {
        worst_dev = dev / scale;
        worst_dev_at = n;
      }
      if (n >= 1 && v >= 1 && v < n) {
        row_sum += std::abs(col_diff);
        column_sums[static_cast<std::size_t>(v - 1)] += std::abs(col_diff);
        hat_column_sums[static_cast<std::size_t>(v - 1)] +=
            (*hat)[static_cast<std::size_t>(v + 1)];
      }
    }
    if (n >= 1) {
      const double ann = (*cur)[static_cast<std::size_t>(n)];
      const double violation = row_sum.value() - ann;
      if (violation > worst_violation) {
        worst_violation = violation;
        worst_violation_at = n;
      }
    }
    prev = cur;
  }
  double hat_column_extreme = 0.0;
  for (Index v = 1; v < N; ++v) {
    const double avv = A.entry(v, v);
    const double violation =
        column_sums[static_cast<std::size_t>(v - 1)].value() - avv;
    if (violation > worst_violation) {
      worst_violation = violation;
      worst_violation_at = v;
    }
    hat_column_extreme =
        std::max(hat_column_extreme,
                 std::abs(hat_column_sums[static_cast<std::size_t>(v - 1)]
                              .value()) /
                     std::abs(avv));
  }

  GrowthReport identity = grade_worst_deviation(
      "hat_a_nv - hat_a_{n,v+1} = a_nv - a_{n-1,v} for v <= n <= " +
          std::to_string(N),
      worst_dev, worst_dev_at, 1e-13);
  GrowthReport inequalities = grade_worst_deviation(
      "sum_v |a_nv - a_{n-1,v}| <= a_nn and sum_n |a_nv - a_{n-1,v}| <= a_vv"
      " (hat column sums reach " +
          std::to_string(hat_column_extreme) + " x a_vv)",
      std::max(0.0, worst_violation), worst_violation_at, 1e-13);
  return {identity, inequalities};
}

/// n, delta_I, I1..I4, residual rows (schema v1).
inline void write_decomposition_csv(std::ostream& os,
                                    const std::vector<DecompositionRow>& rows) {
  os << csv::kSchemaHeader << "\n";
  os << "n,delta_I,I1,I2,I3,I4,residual\n";
  for (const DecompositionRow& r : rows) {
    os << r.n << ',' << csv::format_double(r.delta_I) << ','
       << csv::format_double(r.I1) << ',' << csv::format_double(r.I2) << ','
       << csv::format_double(r.I3) << ',' << csv::format_double(r.I4) << ','
       << csv::format_double(r.residual) << '\n';
  }
}

}  // namespace absum
