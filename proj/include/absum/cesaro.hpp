// SPDX-License-Identifier: Apache-2.0
//
// Cesaro machinery: the binomial-type coefficients A_n^alpha, the order-alpha
// means of (s_n) and (n a_n), and the order-one mean with its exact inversion.

#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "absum/compensated.hpp"
#include "absum/sequence.hpp"

namespace absum {

/// A_n^alpha = (alpha+1)(alpha+2)...(alpha+n)/n!, with A_n^alpha = 0 for
/// n < 0, computed by the stable multiplicative recurrence.
inline double cesaro_coefficient(double alpha, Index n) {
  if (!(alpha > -1.0))
    throw std::domain_error("cesaro_coefficient: alpha must exceed -1");
  if (n < 0) return 0.0;
  double value = 1.0;
  // multiply before dividing: integral orders stay exact
  for (Index j = 1; j <= n; ++j) value = value * (alpha + j) / j;
  return value;
}

/// A_j^alpha for j = 0..count-1 by the same recurrence (one pass).
inline std::vector<double> cesaro_coefficient_row(double alpha, Index count) {
  if (!(alpha > -1.0))
    throw std::domain_error("cesaro_coefficient_row: alpha must exceed -1");
  std::vector<double> row(static_cast<std::size_t>(count));
  double value = 1.0;
  for (Index j = 0; j < count; ++j) {
    if (j > 0) value = value * (alpha + j) / j;
    row[static_cast<std::size_t>(j)] = value;
  }
  return row;
}

struct CesaroMeanPair {
  double u;  ///< order-alpha mean of the partial sums
  double t;  ///< order-alpha mean of (n a_n)
};

/// Evaluates both order-alpha means at successive n.  Each step costs O(n)
/// (the coefficient row shifts with n), so a full prefix costs O(N^2).
class CesaroScan {
 public:
  CesaroScan(LazySequence a, double alpha)
      : a_(std::move(a)), s_(partial_sums(a_)), alpha_(alpha) {
    if (!(alpha > -1.0))
      throw std::domain_error("cesaro means: alpha must exceed -1");
  }

  CesaroMeanPair at(Index n) {
    const std::vector<double> w = cesaro_coefficient_row(alpha_ - 1.0, n + 1);
    const double scale = cesaro_coefficient(alpha_, n);
    CompensatedSum su, st;
    for (Index v = 0; v <= n; ++v) {
      const double c = w[static_cast<std::size_t>(n - v)];
      su += c * s_.term_or_zero(v);
      st += c * (static_cast<double>(v) * a_.term_or_zero(v));
    }
    return {su.value() / scale, st.value() / scale};
  }

  const LazySequence& series() const { return a_; }

 private:
  LazySequence a_;
  LazySequence s_;
  double alpha_;
};

/// Both order-alpha means at a single index.
inline CesaroMeanPair cesaro_means(const LazySequence& a, double alpha,
                                   Index n) {
  CesaroScan scan(a, alpha);
  return scan.at(n);
}

/// t_n = (1/(n+1)) sum_{v=1..n} v a_v, the order-one mean of (n a_n); the
/// quantity appearing in every hypothesis condition.  Defined from n = 1.
inline LazySequence c1_mean_of(const LazySequence& a) {
  auto acc = std::make_shared<CompensatedSum>();
  return LazySequence(
      1,
      [acc, a](Index n) {
        *acc += static_cast<double>(n) * a.term_or_zero(n);
        return acc->value() / static_cast<double>(n + 1);
      },
      "c1_mean(" + a.name() + ")");
}

/// Exact inverse of c1_mean_of: recovers a_n from a prescribed t via
/// n a_n = (n+1) t_n - n t_{n-1}.  Defined from n = 1.
inline LazySequence c1_mean_invert(const LazySequence& t) {
  return LazySequence(
      1,
      [t](Index n) {
        const double prev = t.term_or_zero(n - 1);
        return (static_cast<double>(n + 1) * t[n] -
                static_cast<double>(n) * prev) /
               static_cast<double>(n);
      },
      "c1_invert(" + t.name() + ")");
}

}  // namespace absum
