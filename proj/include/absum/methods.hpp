// SPDX-License-Identifier: Apache-2.0
//
// Method factories.  The weighted-mean and Cesaro factories attach
// cancellation-free closed forms for their companion rows; the generic
// defining-sum path remains available for cross-checking.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absum/cesaro.hpp"
#include "absum/triangular.hpp"
#include "absum/weights.hpp"

namespace absum {

inline TriangularMethod identity_method(Index max_rows = 20000) {
  TriangularMethod::Recipe r;
  r.name = "identity";
  r.max_rows = max_rows;
  r.entry = [](Index n, Index v) { return v == n ? 1.0 : 0.0; };
  r.bar_row = [](Index n, std::vector<double>& out) {
    for (Index v = 0; v <= n; ++v) out[static_cast<std::size_t>(v)] = 1.0;
  };
  r.hat_row = [](Index n, std::vector<double>& out) {
    for (Index v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = 0.0;
    out[static_cast<std::size_t>(n)] = 1.0;
  };
  return TriangularMethod(std::move(r));
}

/// a_nv = p_v / P_n.  Closed forms:
///   bar_a_nv    = (P_n - P_{v-1}) / P_n
///   hat_a_n,v+1 = p_n P_v / (P_n P_{n-1})   (and hat_a_n0 = 0 for n >= 1)
inline TriangularMethod weighted_mean_method(const WeightSystem& w,
                                             Index max_rows = 20000) {
  TriangularMethod::Recipe r;
  r.name = "weighted_mean(" + w.weight_sequence().name() + ")";
  r.max_rows = max_rows;
  r.entry = [w](Index n, Index v) { return w.p(v) / w.P(n); };
  r.bar_row = [w](Index n, std::vector<double>& out) {
    const double Pn = w.P(n);
    for (Index v = 0; v <= n; ++v)
      out[static_cast<std::size_t>(v)] = (Pn - w.P(v - 1)) / Pn;
  };
  r.hat_row = [w](Index n, std::vector<double>& out) {
    if (n == 0) {
      out[0] = w.p(0) / w.P(0);
      return;
    }
    out[0] = 0.0;
    const double scale = w.p(n) / (w.P(n) * w.P(n - 1));
    for (Index v = 1; v <= n; ++v)
      out[static_cast<std::size_t>(v)] = scale * w.P(v - 1);
  };
  return TriangularMethod(std::move(r));
}

/// a_nv = A_{n-v}^{alpha-1} / A_n^alpha with 0 < alpha <= 1.  Closed forms
/// follow from the prefix identity sum_{j<=m} A_j^{alpha-1} = A_m^alpha:
///   bar_a_nv = A_{n-v}^alpha / A_n^alpha
///   hat_a_nv = A_{n-1-v}^alpha * v * alpha / (n (n-v) A_n^alpha),  1<=v<n
/// with hat_a_n0 = 0 and hat_a_nn = 1 / A_n^alpha.
inline TriangularMethod cesaro_method(double alpha, Index max_rows = 20000) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("cesaro_method: alpha must lie in (0, 1]");
  TriangularMethod::Recipe r;
  r.name = "cesaro(" + std::to_string(alpha) + ")";
  r.max_rows = max_rows;
  r.entry = [alpha](Index n, Index v) {
    return cesaro_coefficient(alpha - 1.0, n - v) /
           cesaro_coefficient(alpha, n);
  };
  r.row = [alpha](Index n, std::vector<double>& out) {
    const std::vector<double> w = cesaro_coefficient_row(alpha - 1.0, n + 1);
    const double scale = cesaro_coefficient(alpha, n);
    for (Index v = 0; v <= n; ++v)
      out[static_cast<std::size_t>(v)] =
          w[static_cast<std::size_t>(n - v)] / scale;
  };
  r.bar_row = [alpha](Index n, std::vector<double>& out) {
    const std::vector<double> c = cesaro_coefficient_row(alpha, n + 1);
    const double scale = c[static_cast<std::size_t>(n)];
    for (Index v = 0; v <= n; ++v)
      out[static_cast<std::size_t>(v)] =
          c[static_cast<std::size_t>(n - v)] / scale;
  };
  r.hat_row = [alpha](Index n, std::vector<double>& out) {
    const std::vector<double> c = cesaro_coefficient_row(alpha, n + 1);
    const double An = c[static_cast<std::size_t>(n)];
    if (n == 0) {
      out[0] = 1.0 / An;
      return;
    }
    out[0] = 0.0;
    for (Index v = 1; v < n; ++v) {
      out[static_cast<std::size_t>(v)] =
          c[static_cast<std::size_t>(n - 1 - v)] *
          (static_cast<double>(v) * alpha) /
          (static_cast<double>(n) * static_cast<double>(n - v) * An);
    }
    out[static_cast<std::size_t>(n)] = 1.0 / An;
  };
  return TriangularMethod(std::move(r));
}

/// Dense lower-triangular rows given explicitly (row n holds n+1 entries).
inline TriangularMethod method_from_rows(std::string name,
                                         std::vector<std::vector<double>> rows) {
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].size() != n + 1) {
      throw std::invalid_argument("method '" + name + "': row " +
                                  std::to_string(n) + " must hold " +
                                  std::to_string(n + 1) + " entries, got " +
                                  std::to_string(rows[n].size()));
    }
    if (rows[n][n] == 0.0) {
      throw std::domain_error("method '" + name + "': zero diagonal entry at row " +
                              std::to_string(n));
    }
  }
  auto data = std::make_shared<std::vector<std::vector<double>>>(std::move(rows));
  TriangularMethod::Recipe r;
  r.name = std::move(name);
  r.max_rows = static_cast<Index>(data->size());
  r.entry = [data](Index n, Index v) {
    return (*data)[static_cast<std::size_t>(n)][static_cast<std::size_t>(v)];
  };
  r.row = [data](Index n, std::vector<double>& out) {
    out = (*data)[static_cast<std::size_t>(n)];
  };
  return TriangularMethod(std::move(r));
}

}  // namespace absum
