// SPDX-License-Identifier: Apache-2.0
//
// Index-addressable real sequences with memoized, strictly in-order
// evaluation.  Everything the library manipulates (series terms, partial
// sums, summability factors, majorants, weights, Fourier terms) is a
// LazySequence.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absum/compensated.hpp"
#include "absum/growth.hpp"

namespace absum {

/// A real sequence defined from `start_index` (0 or 1 in practice) by a
/// generator rule.  Values are cached on first evaluation; querying index n
/// forces exactly the indices start_index..n, in ascending order, each once.
/// Stateful generators (running sums) may rely on that order.
///
/// Copies share the cache.  Reads of an already-forced prefix are safe from
/// several threads; forcing new indices requires exclusive access
/// (single-writer contract).
class LazySequence {
 public:
  using Rule = std::function<double(Index)>;

  LazySequence(Index start_index, Rule rule, std::string name = "")
      : state_(std::make_shared<State>()) {
    state_->start = start_index;
    state_->rule = std::move(rule);
    state_->name = std::move(name);
  }

  Index start_index() const { return state_->start; }
  const std::string& name() const { return state_->name; }

  /// Value at index n.  Indices below start_index are a usage error.
  double operator[](Index n) const {
    State& st = *state_;
    if (n < st.start) {
      throw std::out_of_range("sequence '" + st.name + "': index " +
                              std::to_string(n) + " is below start index " +
                              std::to_string(st.start));
    }
    const std::size_t slot = static_cast<std::size_t>(n - st.start);
    while (st.cache.size() <= slot) {
      const Index next = st.start + static_cast<Index>(st.cache.size());
      st.cache.push_back(st.rule(next));
    }
    return st.cache[slot];
  }

  double at(Index n) const { return (*this)[n]; }

  /// Series convention: a term whose index lies below the start contributes
  /// zero, so transforms can always sum from index 0.
  double term_or_zero(Index n) const {
    return n < state_->start ? 0.0 : (*this)[n];
  }

  /// Forces the prefix through n (no-op if already forced).
  void force(Index n) const {
    if (n >= state_->start) (void)(*this)[n];
  }

  Index forced_through() const {
    return state_->start + static_cast<Index>(state_->cache.size()) - 1;
  }

  static LazySequence constant(double c, Index start = 0,
                               std::string name = "constant") {
    return LazySequence(start, [c](Index) { return c; }, std::move(name));
  }

  static LazySequence from_values(std::vector<double> values, Index start = 0,
                                  std::string name = "table") {
    auto data = std::make_shared<std::vector<double>>(std::move(values));
    return LazySequence(
        start,
        [data, start, name](Index n) {
          const std::size_t i = static_cast<std::size_t>(n - start);
          if (i >= data->size()) {
            throw std::out_of_range("sequence '" + name + "': index " +
                                    std::to_string(n) +
                                    " is past the last tabulated value");
          }
          return (*data)[i];
        },
        name);
  }

 private:
  struct State {
    Index start = 0;
    Rule rule;
    std::string name;
    std::vector<double> cache;
  };
  std::shared_ptr<State> state_;
};

/// s_n = sum of a_v for v <= n.  Forcing s_n forces a once through n.
inline LazySequence partial_sums(const LazySequence& a) {
  auto acc = std::make_shared<CompensatedSum>();
  return LazySequence(
      a.start_index(),
      [acc, a](Index n) {
        *acc += a[n];
        return acc->value();
      },
      "partial_sums(" + a.name() + ")");
}

/// (forward difference)  d_n = x_n - x_{n+1}.
inline LazySequence forward_difference(const LazySequence& x) {
  return LazySequence(
      x.start_index(), [x](Index n) { return x[n] - x[n + 1]; },
      "diff(" + x.name() + ")");
}

/// d2_n = d_n - d_{n+1} with d the forward difference.
inline LazySequence second_difference(const LazySequence& x) {
  return forward_difference(forward_difference(x));
}

/// Termwise product a_n * b_n; starts where the later of the two starts.
inline LazySequence termwise_product(const LazySequence& a,
                                     const LazySequence& b) {
  const Index start = std::max(a.start_index(), b.start_index());
  return LazySequence(
      start, [a, b](Index n) { return a[n] * b[n]; },
      a.name() + "*" + b.name());
}

}  // namespace absum
