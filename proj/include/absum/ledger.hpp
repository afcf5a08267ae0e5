// SPDX-License-Identifier: Apache-2.0
//
// Summability ledgers: per-n index terms (P_n/p_n)^{k-1} |difference|^k and
// their running partial sums.

#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "absum/compensated.hpp"
#include "absum/csv.hpp"
#include "absum/growth.hpp"

namespace absum {

/// The shared term composition, so that every ledger builds its terms
/// through the same floating-point path.
inline double index_term(double ratio, double difference, double k) {
  const double d = std::abs(difference);
  if (k == 1.0) return d;
  return std::pow(ratio, k - 1.0) * std::pow(d, k);
}

/// Per-n terms and running partial sums of a summability index.
///
/// `deltas` stores the unpowered difference quantity |.| of each term and
/// `ratios` the weight ratio P_n/p_n, so reductions can be compared at the
/// level where they are exact identities; `alt_terms`, when present, holds
/// the terms of an alternative defining route for cross-checks.
struct SummabilityLedger {
  std::string method_tag;
  double k = 1.0;
  Index start = 1;
  Index N = 0;
  std::vector<double> deltas;
  std::vector<double> ratios;
  std::vector<double> terms;
  std::vector<double> partials;
  std::vector<double> alt_terms;

  double total() const { return partials.empty() ? 0.0 : partials.back(); }

  double term_at(Index n) const {
    return terms[static_cast<std::size_t>(n - start)];
  }
  double delta_at(Index n) const {
    return deltas[static_cast<std::size_t>(n - start)];
  }
  double ratio_at(Index n) const {
    return ratios[static_cast<std::size_t>(n - start)];
  }

  GrowthReport flattening_report(const GrowthThresholds& thr = {}) const {
    return grade_partial_sums("index terms of " + method_tag + " sum to O(1)",
                              partials, start, thr);
  }

  /// n, term, partial_sum rows (schema v1).
  void write_csv(std::ostream& os) const {
    os << csv::kSchemaHeader << "\n";
    os << "n,term,partial_sum\n";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      os << (start + static_cast<Index>(i)) << ','
         << csv::format_double(terms[i]) << ','
         << csv::format_double(partials[i]) << '\n';
    }
  }
};

/// Accumulates a ledger one term at a time with compensated partials.
class LedgerBuilder {
 public:
  LedgerBuilder(std::string method_tag, double k, Index start = 1) {
    if (!(k >= 1.0))
      throw std::domain_error("summability index: k must be >= 1, got " +
                              std::to_string(k));
    ledger_.method_tag = std::move(method_tag);
    ledger_.k = k;
    ledger_.start = start;
    ledger_.N = start - 1;
  }

  void append(double ratio, double difference) {
    const double term = index_term(ratio, difference, ledger_.k);
    acc_ += term;
    ledger_.deltas.push_back(std::abs(difference));
    ledger_.ratios.push_back(ratio);
    ledger_.terms.push_back(term);
    ledger_.partials.push_back(acc_.value());
    ++ledger_.N;
  }

  void append_alt(double ratio, double difference) {
    ledger_.alt_terms.push_back(index_term(ratio, difference, ledger_.k));
  }

  SummabilityLedger take() { return std::move(ledger_); }

 private:
  SummabilityLedger ledger_;
  CompensatedSum acc_;
};

}  // namespace absum
