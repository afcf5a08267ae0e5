// SPDX-License-Identifier: Apache-2.0
//
// Weight systems: strictly positive weights p_n with exact cumulative
// totals P_n and the convention p_{-i} = P_{-i} = 0.

#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "absum/compensated.hpp"
#include "absum/sequence.hpp"

namespace absum {

/// Positive weights (p_n), n >= 0, and their running totals
/// P_n = p_0 + ... + p_n (compensated).  Negative indices read as exactly 0.
class WeightSystem {
 public:
  explicit WeightSystem(LazySequence p) : p_(validated(std::move(p))) {
    auto acc = std::make_shared<CompensatedSum>();
    auto weights = p_;
    totals_ = std::make_unique<LazySequence>(
        0,
        [acc, weights](Index n) {
          *acc += weights[n];
          return acc->value();
        },
        "totals(" + p_.name() + ")");
  }

  WeightSystem(const WeightSystem& other)
      : p_(other.p_), totals_(std::make_unique<LazySequence>(*other.totals_)) {}
  WeightSystem& operator=(const WeightSystem& other) {
    p_ = other.p_;
    totals_ = std::make_unique<LazySequence>(*other.totals_);
    return *this;
  }

  double p(Index n) const { return n < 0 ? 0.0 : p_[n]; }
  double P(Index n) const { return n < 0 ? 0.0 : (*totals_)[n]; }

  /// P_n / p_n, the normalization ratio of the summability indices.
  double ratio(Index n) const { return P(n) / p(n); }

  const LazySequence& weight_sequence() const { return p_; }
  const LazySequence& total_sequence() const { return *totals_; }

 private:
  static LazySequence validated(LazySequence raw) {
    if (raw.start_index() != 0) {
      throw std::invalid_argument(
          "weights: the weight sequence must start at index 0");
    }
    std::string name = raw.name();
    return LazySequence(
        0,
        [raw, name](Index n) {
          const double v = raw[n];
          if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::domain_error("weights '" + name + "': p[" +
                                    std::to_string(n) + "] = " +
                                    std::to_string(v) +
                                    " must be strictly positive");
          }
          return v;
        },
        name);
  }

  LazySequence p_;
  std::unique_ptr<LazySequence> totals_;
};

inline WeightSystem make_weights(LazySequence p) {
  return WeightSystem(std::move(p));
}

/// p_n = 1 for all n, so P_n = n + 1.
inline WeightSystem unit_weights() {
  return WeightSystem(LazySequence::constant(1.0, 0, "ones"));
}

}  // namespace absum
