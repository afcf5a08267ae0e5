// SPDX-License-Identifier: Apache-2.0
//
// Structural sequence-class diagnostics: bounded variation, quasi-power
// increasing (with weight n^sigma (log n)^beta), and almost increasing.
// All of them are finite-prefix evidence graders, not proofs.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "absum/growth.hpp"
#include "absum/sequence.hpp"

namespace absum {

/// Partial sums of sum |x_n - x_{n+1}| up to N, graded for flattening.
inline GrowthReport bounded_variation_diagnostic(
    const LazySequence& x, Index N, const GrowthThresholds& thr = {}) {
  if (N < 2) throw std::invalid_argument("bounded_variation_diagnostic: N >= 2 required");
  const Index start = x.start_index();
  CompensatedSum acc;
  std::vector<double> partials;
  partials.reserve(static_cast<std::size_t>(N - start + 1));
  for (Index n = start; n <= N; ++n) {
    acc += std::abs(x[n] - x[n + 1]);
    partials.push_back(acc.value());
  }
  return grade_partial_sums("sum |d " + x.name() + "| converges", partials,
                            start, thr);
}

/// n^sigma (log n)^beta, the comparison weight of the quasi-power class.
inline double quasi_power_weight(Index n, double sigma, double beta) {
  const double nd = static_cast<double>(n);
  return std::pow(nd, sigma) * std::pow(std::log(nd), beta);
}

struct QuasiPowerCheck {
  double k_min = 1.0;  ///< smallest admissible constant on the scanned range
  GrowthReport report;
};

/// Smallest K with K f_n X_n >= f_m X_m over 2 <= m <= n <= N, where
/// f_n = n^sigma (log n)^beta.  Computed in O(N) by tracking the running
/// maximum of f_m X_m; the scan starts at 2 because f_1 = 0 when beta > 0
/// (any finite initial segment is absorbed by the constant).  The verdict
/// compares the constant at N/2 and at N: a stabilising K is evidence of
/// class membership.
inline QuasiPowerCheck quasi_f_power_check(const LazySequence& X, double sigma,
                                           double beta, Index N,
                                           const GrowthThresholds& thr = {}) {
  if (!(sigma > 0.0 && sigma < 1.0))
    throw std::domain_error("quasi_f_power_check: sigma must lie in (0,1)");
  if (!(beta >= 0.0))
    throw std::domain_error("quasi_f_power_check: beta must be >= 0");
  if (N < 3) throw std::invalid_argument("quasi_f_power_check: N >= 3 required");

  std::vector<double> k_history;
  k_history.reserve(static_cast<std::size_t>(N - 1));
  double running_max = 0.0;
  double k_min = 0.0;
  Index argmax = 2;
  for (Index n = 2; n <= N; ++n) {
    const double xn = X[n];
    if (!(xn > 0.0)) {
      throw std::domain_error("quasi_f_power_check: X[" + std::to_string(n) +
                              "] = " + std::to_string(xn) +
                              " must be positive");
    }
    const double fx = quasi_power_weight(n, sigma, beta) * xn;
    running_max = std::max(running_max, fx);
    const double k_here = running_max / fx;
    if (k_here > k_min) {
      k_min = k_here;
      argmax = n;
    }
    k_history.push_back(k_min);
  }
  QuasiPowerCheck out;
  out.k_min = k_min;
  out.report = grade_stabilizing_constant(
      "K(N) with K f_n X_n >= f_m X_m, f_n = n^" + std::to_string(sigma) +
          " (log n)^" + std::to_string(beta),
      k_history, 2, thr);
  out.report.sup_ratio = k_min;
  out.report.argmax_index = argmax;
  return out;
}

/// beta = 0 specialisation of quasi_f_power_check.
inline QuasiPowerCheck quasi_sigma_power_check(const LazySequence& X,
                                               double sigma, Index N,
                                               const GrowthThresholds& thr = {}) {
  return quasi_f_power_check(X, sigma, 0.0, N, thr);
}

/// Almost-increasing diagnostic.  With the running maximum c_n = max_{m<=n}
/// b_m as witness (upper constant exactly 1), the best lower constant is
/// M = inf_n b_n / c_n.  The report stores M in sup_ratio with its attaining
/// index; the verdict requires M to stabilise between N/2 and N and to stay
/// above the configured floor.
inline GrowthReport almost_increasing_diagnostic(const LazySequence& b,
                                                 Index N,
                                                 const GrowthThresholds& thr = {}) {
  const Index start = b.start_index();
  double envelope = 0.0;
  double m_best = std::numeric_limits<double>::infinity();
  Index arg = start;
  std::vector<double> reciprocal_history;
  reciprocal_history.reserve(static_cast<std::size_t>(N - start + 1));
  for (Index n = start; n <= N; ++n) {
    const double bn = b[n];
    if (!(bn > 0.0)) {
      throw std::domain_error("almost_increasing_diagnostic: b[" +
                              std::to_string(n) + "] = " + std::to_string(bn) +
                              " must be positive");
    }
    envelope = std::max(envelope, bn);
    const double ratio = bn / envelope;
    if (ratio < m_best) {
      m_best = ratio;
      arg = n;
    }
    reciprocal_history.push_back(1.0 / m_best);
  }
  GrowthReport rep = grade_stabilizing_constant(
      "M c_n <= " + b.name() + " <= c_n with c_n the running maximum",
      reciprocal_history, start, thr);
  rep.sup_ratio = m_best;
  rep.argmax_index = arg;
  if (m_best < thr.lower_constant_floor) rep.verdict = Verdict::diverging;
  return rep;
}

}  // namespace absum
