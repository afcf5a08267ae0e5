// SPDX-License-Identifier: Apache-2.0
//
// The three summability indices as ledgers.
//
//   Cesaro order alpha:  sum (1/n) |t_n^alpha|^k   (= sum n^{k-1}|u_n - u_{n-1}|^k)
//   weighted mean:       sum (P_n/p_n)^{k-1} |t_n - t_{n-1}|^k
//   general method:      sum (P_n/p_n)^{k-1} |delta A_n(s)|^k
//
// The weighted ledger computes t_n - t_{n-1} through the exact rearrangement
//   t_n - t_{n-1} = p_n / (P_n P_{n-1}) * sum_{v<=n} P_{v-1} a_v ,
// which avoids the catastrophic cancellation of subtracting two nearby
// means; the literal difference of Riesz means is kept as the cross-check
// route in alt_terms.

#pragma once

#include <cmath>
#include <string>

#include "absum/cesaro.hpp"
#include "absum/ledger.hpp"
#include "absum/methods.hpp"
#include "absum/sequence.hpp"
#include "absum/triangular.hpp"
#include "absum/weights.hpp"

namespace absum {

/// The series sum a_n lambda_n.
inline LazySequence factored_series(const LazySequence& a,
                                    const LazySequence& lambda) {
  return termwise_product(a, lambda);
}

/// (N-bar, p_n) mean of (s_n): t_n = (1/P_n) sum_{v<=n} p_v s_v.
inline double riesz_mean(const LazySequence& s, const WeightSystem& w,
                         Index n) {
  CompensatedSum acc;
  for (Index v = 0; v <= n; ++v) acc += w.p(v) * s.term_or_zero(v);
  return acc.value() / w.P(n);
}

/// |C,alpha|_k ledger.  Terms are (1/n)|t_n^alpha|^k; the dual route
/// n^{k-1}|u_n^alpha - u_{n-1}^alpha|^k goes to alt_terms.
inline SummabilityLedger index_cesaro(const LazySequence& a, double alpha,
                                      double k, Index N) {
  CesaroScan scan(a, alpha);
  LedgerBuilder builder("|C," + std::to_string(alpha) + "|_" + std::to_string(k),
                        k);
  double u_prev = scan.at(0).u;
  for (Index n = 1; n <= N; ++n) {
    const CesaroMeanPair mean = scan.at(n);
    const double nd = static_cast<double>(n);
    builder.append(nd, mean.t / nd);
    builder.append_alt(nd, mean.u - u_prev);
    u_prev = mean.u;
  }
  return builder.take();
}

/// |N-bar, p_n|_k ledger (stable route; literal Riesz differences in
/// alt_terms).
inline SummabilityLedger index_weighted(const LazySequence& a,
                                        const WeightSystem& w, double k,
                                        Index N) {
  LedgerBuilder builder("|Nbar,p|_" + std::to_string(k), k);
  LazySequence s = partial_sums(a);
  CompensatedSum weighted_terms;  // sum P_{v-1} a_v
  CompensatedSum riesz_numerator;  // sum p_v s_v
  riesz_numerator += w.p(0) * s.term_or_zero(0);
  double t_prev = riesz_numerator.value() / w.P(0);
  for (Index n = 1; n <= N; ++n) {
    weighted_terms += w.P(n - 1) * a.term_or_zero(n);
    const double delta =
        w.p(n) / (w.P(n) * w.P(n - 1)) * weighted_terms.value();
    builder.append(w.ratio(n), delta);

    riesz_numerator += w.p(n) * s.term_or_zero(n);
    const double t_here = riesz_numerator.value() / w.P(n);
    builder.append_alt(w.ratio(n), t_here - t_prev);
    t_prev = t_here;
  }
  return builder.take();
}

/// |A, p_n|_k ledger through the hat-transform route.
inline SummabilityLedger index_matrix(const LazySequence& a,
                                      const TriangularMethod& A,
                                      const WeightSystem& w, double k,
                                      Index N) {
  LedgerBuilder builder("|" + A.name() + ",p|_" + std::to_string(k), k);
  for (Index n = 1; n <= N; ++n)
    builder.append(w.ratio(n), A.delta_transform(a, n));
  return builder.take();
}

}  // namespace absum
