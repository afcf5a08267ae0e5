// SPDX-License-Identifier: Apache-2.0
//
// Finite-prefix growth diagnostics.  Every asymptotic claim checked by the
// library (boundedness of a ratio, convergence of a series of non-negative
// terms, stabilisation under grid refinement) is graded into a GrowthReport:
// the extremal ratio seen, where it occurred, the log-log trend of the tail,
// and a three-way verdict.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace absum {

using Index = std::int64_t;

enum class Verdict { consistent_with_bounded, diverging, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent_with_bounded: return "consistent-with-bounded";
    case Verdict::diverging: return "diverging";
    default: return "inconclusive";
  }
}

/// Thresholds for turning finite evidence into a verdict.
///
/// Ratio-style quantities (anything of the form quantity(m)/bound(m) that
/// should stay bounded) are graded by the least-squares slope of
/// log|q| vs log m over the last half of the prefix:
/// slope < slope_bounded => consistent, slope > slope_diverging => diverging.
///
/// Series of non-negative terms are graded by dyadic increments of the
/// partial sums: if the increment over the last octave decays by less than
/// increment_ratio_diverging per octave the series is graded diverging; if
/// the geometric tail estimate is below tail_fraction of the accumulated sum
/// it is graded consistent.
struct GrowthThresholds {
  double slope_bounded = 0.02;
  double slope_diverging = 0.1;
  double tail_fraction = 0.05;
  double increment_ratio_diverging = 0.9;
  double refinement_cauchy_tol = 1e-2;
  double lower_constant_floor = 1e-8;
  // for extremal-constant scans graded by comparing the value at N/2 and N
  double stabilization_growth_bounded = 0.05;
  double stabilization_growth_diverging = 0.2;
};

struct GrowthReport {
  std::string claim;
  double sup_ratio = 0.0;
  Index argmax_index = 0;
  double tail_slope = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

namespace detail {

/// Least-squares slope of log|values[i]| against log(i + first_index) over
/// the last half of the samples.  Zero and non-finite samples are skipped;
/// fewer than two usable points give slope 0.
inline double tail_log_log_slope(const std::vector<double>& values,
                                 Index first_index) {
  const std::size_t count = values.size();
  if (count < 2) return 0.0;
  const std::size_t from = count / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = from; i < count; ++i) {
    const double q = std::abs(values[i]);
    if (!(q > 0.0) || !std::isfinite(q)) continue;
    const double x = std::log(static_cast<double>(first_index) + i);
    const double y = std::log(q);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) return 0.0;
  const double denom = m * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (m * sxy - sx * sy) / denom;
}

inline double sample_at(const std::vector<double>& values, Index first_index,
                        Index n) {
  return values[static_cast<std::size_t>(n - first_index)];
}

}  // namespace detail

/// Grades a history of ratio-style samples q_n, n = first_index .. N.
/// The claim should remain O(1); the verdict follows the tail slope.
inline GrowthReport grade_ratio_history(std::string claim,
                                        const std::vector<double>& history,
                                        Index first_index,
                                        const GrowthThresholds& thr = {}) {
  GrowthReport rep;
  rep.claim = std::move(claim);
  if (history.empty()) return rep;
  rep.argmax_index = first_index;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const double q = history[i];
    if (!std::isfinite(q)) {
      rep.sup_ratio = std::numeric_limits<double>::infinity();
      rep.argmax_index = first_index + static_cast<Index>(i);
      rep.verdict = Verdict::diverging;
      return rep;
    }
    if (std::abs(q) > rep.sup_ratio) {
      rep.sup_ratio = std::abs(q);
      rep.argmax_index = first_index + static_cast<Index>(i);
    }
  }
  rep.tail_slope = detail::tail_log_log_slope(history, first_index);
  if (rep.sup_ratio == 0.0 || rep.tail_slope < thr.slope_bounded) {
    rep.verdict = Verdict::consistent_with_bounded;
  } else if (rep.tail_slope > thr.slope_diverging) {
    rep.verdict = Verdict::diverging;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  return rep;
}

/// Grades the partial sums S_n (non-decreasing) of a series of non-negative
/// terms, n = first_index .. N.  Dyadic increments D_j = S(n_j) - S(n_j/2)
/// estimate the tail: a per-octave decay ratio close to 1 (or above) means
/// the series is still accumulating mass at every scale and is graded
/// diverging; a small geometric tail estimate is graded consistent.
inline GrowthReport grade_partial_sums(std::string claim,
                                       const std::vector<double>& partials,
                                       Index first_index,
                                       const GrowthThresholds& thr = {}) {
  GrowthReport rep;
  rep.claim = std::move(claim);
  if (partials.empty()) return rep;
  const Index last = first_index + static_cast<Index>(partials.size()) - 1;
  rep.sup_ratio = partials.back();
  rep.argmax_index = last;
  rep.tail_slope = detail::tail_log_log_slope(partials, first_index);
  if (!(partials.back() > 0.0)) {
    rep.verdict = Verdict::consistent_with_bounded;
    return rep;
  }
  if (!std::isfinite(partials.back())) {
    rep.verdict = Verdict::diverging;
    return rep;
  }

  // Checkpoints last, last/2, last/4, ... down to the start of the history.
  std::vector<double> checkpoints;
  for (Index n = last; n >= first_index && checkpoints.size() < 8;
       n /= 2) {
    checkpoints.push_back(detail::sample_at(partials, first_index, n));
    if (n == first_index) break;
  }
  std::reverse(checkpoints.begin(), checkpoints.end());
  if (checkpoints.size() < 3) {
    rep.verdict = Verdict::inconclusive;
    return rep;
  }
  std::vector<double> increments;
  for (std::size_t i = 1; i < checkpoints.size(); ++i)
    increments.push_back(std::max(0.0, checkpoints[i] - checkpoints[i - 1]));

  const double d_last = increments.back();
  if (d_last == 0.0) {
    rep.verdict = Verdict::consistent_with_bounded;
    return rep;
  }
  // Median decay ratio over the last (up to) three octave pairs.
  std::vector<double> ratios;
  for (std::size_t i = increments.size(); i-- > 1 && ratios.size() < 3;) {
    if (increments[i - 1] > 0.0) ratios.push_back(increments[i] / increments[i - 1]);
  }
  if (ratios.empty()) {
    rep.verdict = Verdict::inconclusive;
    return rep;
  }
  std::sort(ratios.begin(), ratios.end());
  const double rho = ratios[ratios.size() / 2];
  if (rho >= thr.increment_ratio_diverging) {
    rep.verdict = Verdict::diverging;
    return rep;
  }
  const double tail_estimate = d_last * rho / (1.0 - rho);
  const double scale = std::max(partials.back(), 1e-300);
  rep.verdict = (tail_estimate <= thr.tail_fraction * scale)
                    ? Verdict::consistent_with_bounded
                    : Verdict::inconclusive;
  return rep;
}

/// Grades a running extremal constant (non-decreasing history, e.g. the
/// smallest admissible K of a comparison class) by how much it still grows
/// between the half prefix and the full prefix.
inline GrowthReport grade_stabilizing_constant(std::string claim,
                                               const std::vector<double>& history,
                                               Index first_index,
                                               const GrowthThresholds& thr = {}) {
  GrowthReport rep;
  rep.claim = std::move(claim);
  if (history.empty()) return rep;
  const Index last = first_index + static_cast<Index>(history.size()) - 1;
  rep.sup_ratio = history.back();
  rep.argmax_index = last;
  rep.tail_slope = detail::tail_log_log_slope(history, first_index);
  const Index half = std::max(first_index, last / 2);
  const double at_half = detail::sample_at(history, first_index, half);
  const double at_full = history.back();
  if (!std::isfinite(at_full)) {
    rep.verdict = Verdict::diverging;
    return rep;
  }
  const double growth = at_half > 0.0
                            ? at_full / at_half - 1.0
                            : (at_full > 0.0 ? std::numeric_limits<double>::infinity()
                                             : 0.0);
  if (growth <= thr.stabilization_growth_bounded) {
    rep.verdict = Verdict::consistent_with_bounded;
  } else if (growth >= thr.stabilization_growth_diverging) {
    rep.verdict = Verdict::diverging;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  return rep;
}

/// Grades an exact identity or inequality: `worst` is the largest deviation
/// (or violation) observed, `tolerance` the admitted slack.
inline GrowthReport grade_worst_deviation(std::string claim, double worst,
                                          Index argmax, double tolerance) {
  GrowthReport rep;
  rep.claim = std::move(claim);
  rep.sup_ratio = worst;
  rep.argmax_index = argmax;
  rep.verdict = (std::isfinite(worst) && worst <= tolerance)
                    ? Verdict::consistent_with_bounded
                    : Verdict::diverging;
  return rep;
}

/// Grades a sequence of values produced under successive refinements (for
/// example total variation on nested grids).  Consistent when the last
/// refinement step changes the value by at most refinement_cauchy_tol
/// relative to max(1, value); diverging when the value keeps growing by a
/// non-vanishing factor.
inline GrowthReport grade_refinements(std::string claim,
                                      const std::vector<double>& values,
                                      const GrowthThresholds& thr = {}) {
  GrowthReport rep;
  rep.claim = std::move(claim);
  if (values.empty()) return rep;
  rep.sup_ratio = values.back();
  rep.argmax_index = static_cast<Index>(values.size()) - 1;
  if (values.size() < 2) {
    rep.verdict = Verdict::inconclusive;
    return rep;
  }
  const double last = values.back();
  const double prev = values[values.size() - 2];
  if (!std::isfinite(last)) {
    rep.verdict = Verdict::diverging;
    return rep;
  }
  const double change = std::abs(last - prev);
  const double scale = std::max(1.0, std::abs(last));
  rep.tail_slope = change / scale;
  if (change <= thr.refinement_cauchy_tol * scale) {
    rep.verdict = Verdict::consistent_with_bounded;
  } else if (prev > 0.0 && last > 1.2 * prev) {
    rep.verdict = Verdict::diverging;
  } else {
    rep.verdict = Verdict::inconclusive;
  }
  return rep;
}

}  // namespace absum
