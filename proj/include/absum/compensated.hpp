// SPDX-License-Identifier: Apache-2.0
//
// Error-feedback accumulator used for every long cumulative sum in the
// library (partial sums, weight totals, ledger partials, quadrature).

#pragma once

#include <cmath>

namespace absum {

/// Kahan/Neumaier compensated accumulator.  The correction term keeps the
/// running sum within a few ulp of the exact sum of the appended values,
/// independent of their count.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(double x) { return *this += -x; }

  double value() const { return sum_ + comp_; }

  void reset() {
    sum_ = 0.0;
    comp_ = 0.0;
  }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <typename Iterator>
double compensated_sum(Iterator first, Iterator last) {
  CompensatedSum acc;
  for (; first != last; ++first) acc += *first;
  return acc.value();
}

template <typename Range>
double compensated_sum(const Range& range) {
  CompensatedSum acc;
  for (double x : range) acc += x;
  return acc.value();
}

}  // namespace absum
