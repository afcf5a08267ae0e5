// SPDX-License-Identifier: Apache-2.0
//
// Lower-triangular (normal) summability methods and their companion
// matrices.  A method A = (a_nv) induces
//
//   bar A : series-to-sequence,  bar_a_nv = sum_{i=v..n} a_ni
//   hat A : series-to-series,    hat_a_00 = a_00,
//                                hat_a_nv = bar_a_nv - bar_a_{n-1,v}  (n >= 1)
//
// and the transforms A_n(s) = sum a_nv s_v = sum bar_a_nv a_v and
// delta A_n(s) = A_n(s) - A_{n-1}(s) = sum hat_a_nv a_v.
//
// Companion rows are computed from the defining sums by default; factories
// may attach cancellation-free closed forms (the defining-sum path stays
// available through *_by_sums for cross-checks).

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absum/compensated.hpp"
#include "absum/sequence.hpp"

namespace absum {

class TriangularMethod {
 public:
  using EntryRule = std::function<double(Index n, Index v)>;
  using RowFill = std::function<void(Index n, std::vector<double>& row)>;

  struct Recipe {
    std::string name;
    EntryRule entry;   ///< a_nv for 0 <= v <= n
    RowFill row;       ///< optional bulk fill of row n (defaults to entry)
    RowFill bar_row;   ///< optional closed form for bar rows
    RowFill hat_row;   ///< optional closed form for hat rows
    Index max_rows = 20000;  ///< dense-row budget
  };

  explicit TriangularMethod(Recipe recipe)
      : recipe_(std::make_shared<const Recipe>(std::move(recipe))),
        cache_(std::make_shared<Cache>()) {
    if (!recipe_->entry)
      throw std::invalid_argument("TriangularMethod: entry rule is required");
  }

  const std::string& name() const { return recipe_->name; }
  Index max_rows() const { return recipe_->max_rows; }

  /// a_nv; zero above the diagonal and on negative rows.
  double entry(Index n, Index v) const {
    if (n < 0 || v < 0 || v > n) return 0.0;
    return recipe_->entry(n, v);
  }

  /// a_nv - a_{n-1,v} (the difference down a column; distinct from
  /// delta_transform, which differences the transforms).
  double column_difference(Index n, Index v) const {
    return entry(n, v) - entry(n - 1, v);
  }

  /// Dense row n = (a_n0 .. a_nn); validates normality (a_nn != 0).
  std::shared_ptr<const std::vector<double>> row(Index n) const {
    return cached(cache_->rows, n, [this](Index r, std::vector<double>& out) {
      if (recipe_->row) {
        recipe_->row(r, out);
      } else {
        for (Index v = 0; v <= r; ++v)
          out[static_cast<std::size_t>(v)] = recipe_->entry(r, v);
      }
      if (out[static_cast<std::size_t>(r)] == 0.0) {
        throw std::domain_error("method '" + recipe_->name +
                                "': zero diagonal entry at row " +
                                std::to_string(r) + " (matrix must be normal)");
      }
    });
  }

  /// Row n of bar A.  Uses the factory closed form when present.
  std::shared_ptr<const std::vector<double>> bar_row(Index n) const {
    return cached(cache_->bar_rows, n,
                  [this](Index r, std::vector<double>& out) {
                    if (recipe_->bar_row) {
                      recipe_->bar_row(r, out);
                    } else {
                      fill_bar_by_sums(r, out);
                    }
                  });
  }

  /// Row n of hat A.  Uses the factory closed form when present.
  std::shared_ptr<const std::vector<double>> hat_row(Index n) const {
    return cached(cache_->hat_rows, n,
                  [this](Index r, std::vector<double>& out) {
                    if (recipe_->hat_row) {
                      recipe_->hat_row(r, out);
                    } else {
                      fill_hat_by_sums(r, out);
                    }
                  });
  }

  /// (bar row, hat row) at n.
  std::pair<std::vector<double>, std::vector<double>> companions(Index n) const {
    return {*bar_row(n), *hat_row(n)};
  }

  /// Defining-sum evaluation, ignoring any closed-form override.
  std::vector<double> bar_row_by_sums(Index n) const {
    std::vector<double> out(static_cast<std::size_t>(n + 1));
    fill_bar_by_sums(n, out);
    return out;
  }

  std::vector<double> hat_row_by_sums(Index n) const {
    std::vector<double> out(static_cast<std::size_t>(n + 1));
    fill_hat_by_sums(n, out);
    return out;
  }

  /// A_n(s) = sum_{v<=n} a_nv s_v.
  double transform(const LazySequence& s, Index n) const {
    auto r = row(n);
    CompensatedSum acc;
    for (Index v = 0; v <= n; ++v)
      acc += (*r)[static_cast<std::size_t>(v)] * s.term_or_zero(v);
    return acc.value();
  }

  /// Same transform through the series terms: sum bar_a_nv a_v.
  double transform_via_bar(const LazySequence& series_terms, Index n) const {
    auto r = bar_row(n);
    CompensatedSum acc;
    for (Index v = 0; v <= n; ++v)
      acc += (*r)[static_cast<std::size_t>(v)] * series_terms.term_or_zero(v);
    return acc.value();
  }

  /// delta A_n(s) = sum hat_a_nv a_v (equals A_n(s) - A_{n-1}(s); at n = 0
  /// this is A_0(s) itself).
  double delta_transform(const LazySequence& series_terms, Index n) const {
    auto r = hat_row(n);
    CompensatedSum acc;
    for (Index v = 0; v <= n; ++v)
      acc += (*r)[static_cast<std::size_t>(v)] * series_terms.term_or_zero(v);
    return acc.value();
  }

 private:
  // Rows are immutable once built; a small keyed cache keeps the two most
  // recently used rows of each kind, which makes sequential sweeps (hat row
  // n needs bar rows n-1 and n) reuse instead of recompute.
  struct Slot {
    Index n = -1;
    std::shared_ptr<const std::vector<double>> data;
  };
  struct SlotPair {
    Slot a, b;
    int last = 0;  // which slot was used most recently
  };
  struct Cache {
    std::mutex mutex;
    SlotPair rows, bar_rows, hat_rows;
  };

  template <typename Fill>
  std::shared_ptr<const std::vector<double>> cached(SlotPair& pair, Index n,
                                                    Fill fill) const {
    if (n < 0)
      throw std::out_of_range("method '" + recipe_->name +
                              "': negative row index");
    if (n >= recipe_->max_rows) {
      throw std::length_error("method '" + recipe_->name + "': row " +
                              std::to_string(n) +
                              " exceeds the configured row budget (" +
                              std::to_string(recipe_->max_rows) + ")");
    }
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      if (pair.a.n == n) {
        pair.last = 0;
        return pair.a.data;
      }
      if (pair.b.n == n) {
        pair.last = 1;
        return pair.b.data;
      }
    }
    auto fresh = std::make_shared<std::vector<double>>(
        static_cast<std::size_t>(n + 1), 0.0);
    fill(n, *fresh);
    std::shared_ptr<const std::vector<double>> result = fresh;
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      Slot& victim = (pair.last == 0) ? pair.b : pair.a;
      victim.n = n;
      victim.data = result;
      pair.last = (pair.last == 0) ? 1 : 0;
    }
    return result;
  }

  // bar_a_nv = sum_{i=v..n} a_ni, accumulated right to left so each entry is
  // a compensated suffix sum of the same row.
  void fill_bar_by_sums(Index n, std::vector<double>& out) const {
    auto r = row(n);
    CompensatedSum acc;
    for (Index v = n; v >= 0; --v) {
      acc += (*r)[static_cast<std::size_t>(v)];
      out[static_cast<std::size_t>(v)] = acc.value();
    }
  }

  void fill_hat_by_sums(Index n, std::vector<double>& out) const {
    auto bar_n = bar_row(n);
    if (n == 0) {
      out[0] = (*bar_n)[0];
      return;
    }
    auto bar_prev = bar_row(n - 1);
    for (Index v = 0; v < n; ++v) {
      out[static_cast<std::size_t>(v)] =
          (*bar_n)[static_cast<std::size_t>(v)] -
          (*bar_prev)[static_cast<std::size_t>(v)];
    }
    // bar_{n-1,n} is an empty sum, so the diagonal passes through.
    out[static_cast<std::size_t>(n)] = (*bar_n)[static_cast<std::size_t>(n)];
  }

  std::shared_ptr<const Recipe> recipe_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace absum
