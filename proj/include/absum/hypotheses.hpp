// SPDX-License-Identifier: Apache-2.0
//
// Hypothesis ledgers for the summability factor theorems.  Conditions are
// graded against their stated bounds over m = 1..N:
//
//   c1   lambda_m X_m = O(1)
//   c2   sum n X_n |dd lambda_n| = O(1)
//   c3   sum P_n / n = O(P_m)
//   c4   sum (p_n/P_n) |t_n|^k = O(X_m)            (almost-increasing set)
//   c5   sum |t_n|^k / n = O(X_m)
//   c6   sum (p_n/P_n) |t_n|^k / X_n^{k-1} = O(X_m) (quasi-power set)
//   c7   sum |t_n|^k / (n X_n^{k-1}) = O(X_m)
//
// and the two lemma consequences
//
//   l1   n X_n |d lambda_n| = O(1)
//   l2   sum X_n |d lambda_n| converges.
//
// t is the order-one Cesaro mean of (n a_n).

#pragma once

#include <cmath>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "absum/cesaro.hpp"
#include "absum/csv.hpp"
#include "absum/growth.hpp"
#include "absum/sequence.hpp"
#include "absum/weights.hpp"

namespace absum {

enum class HypothesisVariant { almost_increasing, quasi_sigma, quasi_f };

inline const char* to_string(HypothesisVariant v) {
  switch (v) {
    case HypothesisVariant::almost_increasing: return "almost-increasing";
    case HypothesisVariant::quasi_sigma: return "quasi-sigma";
    default: return "quasi-f";
  }
}

/// One report per checked condition; the overall verdict is
/// consistent-with-bounded only if every constituent report is.
struct HypothesisLedger {
  struct Entry {
    std::string id;
    GrowthReport report;
  };
  std::vector<Entry> entries;

  Verdict overall() const {
    bool saw_inconclusive = false;
    for (const Entry& e : entries) {
      if (e.report.verdict == Verdict::diverging) return Verdict::diverging;
      if (e.report.verdict != Verdict::consistent_with_bounded)
        saw_inconclusive = true;
    }
    return saw_inconclusive ? Verdict::inconclusive
                            : Verdict::consistent_with_bounded;
  }

  const GrowthReport* find(const std::string& id) const {
    for (const Entry& e : entries)
      if (e.id == id) return &e.report;
    return nullptr;
  }

  void push(std::string id, GrowthReport rep) {
    entries.push_back({std::move(id), std::move(rep)});
  }

  /// condition_id, sup_ratio, argmax_index, tail_slope, verdict (schema v1).
  void write_csv(std::ostream& os) const {
    os << csv::kSchemaHeader << "\n";
    os << "condition_id,sup_ratio,argmax_index,tail_slope,verdict\n";
    for (const Entry& e : entries) {
      os << e.id << ',' << csv::format_double(e.report.sup_ratio) << ','
         << e.report.argmax_index << ','
         << csv::format_double(e.report.tail_slope) << ','
         << to_string(e.report.verdict) << '\n';
    }
  }
};

/// Runs the condition set of the requested variant against the factor
/// sequence lambda, majorant X, and weights, with t the order-one mean of
/// (n a_n).
inline HypothesisLedger check_hypotheses(const LazySequence& a,
                                         const LazySequence& lambda,
                                         const LazySequence& X,
                                         const WeightSystem& w, double k,
                                         HypothesisVariant variant, Index N,
                                         const GrowthThresholds& thr = {}) {
  if (!(k >= 1.0))
    throw std::domain_error("check_hypotheses: k must be >= 1");
  LazySequence t = c1_mean_of(a);
  const std::size_t count = static_cast<std::size_t>(N);

  std::vector<double> q1, q3, qa, qb;
  std::vector<double> s2_partials;
  q1.reserve(count);
  CompensatedSum s2, s3, sa, sb;
  const bool quasi = variant != HypothesisVariant::almost_increasing;
  for (Index m = 1; m <= N; ++m) {
    const double xm = X[m];
    if (!(xm > 0.0)) {
      throw std::domain_error("check_hypotheses: X[" + std::to_string(m) +
                              "] must be positive");
    }
    const double md = static_cast<double>(m);
    q1.push_back(std::abs(lambda[m]) * xm);

    const double dd = (lambda[m] - lambda[m + 1]) - (lambda[m + 1] - lambda[m + 2]);
    s2 += md * xm * std::abs(dd);
    s2_partials.push_back(s2.value());

    s3 += w.P(m) / md;
    q3.push_back(s3.value() / w.P(m));

    const double tk = std::pow(std::abs(t[m]), k);
    const double weight_a = w.p(m) / w.P(m);
    if (quasi) {
      const double xk = std::pow(xm, k - 1.0);
      sa += weight_a * tk / xk;
      sb += tk / (md * xk);
    } else {
      sa += weight_a * tk;
      sb += tk / md;
    }
    qa.push_back(sa.value() / xm);
    qb.push_back(sb.value() / xm);
  }

  HypothesisLedger ledger;
  ledger.push("c1", grade_ratio_history("lambda_m X_m = O(1)", q1, 1, thr));
  ledger.push("c2", grade_partial_sums("sum n X_n |dd lambda_n| = O(1)",
                                       s2_partials, 1, thr));
  ledger.push("c3",
              grade_ratio_history("sum P_n/n = O(P_m)", q3, 1, thr));
  if (quasi) {
    ledger.push("c6", grade_ratio_history(
                          "sum (p_n/P_n)|t_n|^k / X_n^{k-1} = O(X_m)", qa, 1,
                          thr));
    ledger.push("c7", grade_ratio_history(
                          "sum |t_n|^k / (n X_n^{k-1}) = O(X_m)", qb, 1, thr));
  } else {
    ledger.push("c4", grade_ratio_history("sum (p_n/P_n)|t_n|^k = O(X_m)", qa,
                                          1, thr));
    ledger.push("c5",
                grade_ratio_history("sum |t_n|^k / n = O(X_m)", qb, 1, thr));
  }
  return ledger;
}

/// The two lemma consequences: n X_n |d lambda_n| = O(1) and
/// sum X_n |d lambda_n| < infinity.
inline std::pair<GrowthReport, GrowthReport> check_lemma(
    const LazySequence& lambda, const LazySequence& X, Index N,
    const GrowthThresholds& thr = {}) {
  std::vector<double> ratio_history;
  std::vector<double> partials;
  ratio_history.reserve(static_cast<std::size_t>(N));
  CompensatedSum acc;
  for (Index n = 1; n <= N; ++n) {
    const double dl = std::abs(lambda[n] - lambda[n + 1]);
    const double xn = X[n];
    ratio_history.push_back(static_cast<double>(n) * xn * dl);
    acc += xn * dl;
    partials.push_back(acc.value());
  }
  return {grade_ratio_history("n X_n |d lambda_n| = O(1)", ratio_history, 1,
                              thr),
          grade_partial_sums("sum X_n |d lambda_n| converges", partials, 1,
                             thr)};
}

}  // namespace absum
