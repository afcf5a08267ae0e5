// SPDX-License-Identifier: Apache-2.0
//
// Quadrature: an adaptive Gauss-Kronrod 15(7) integrator for general
// integrands (all nodes interior, so jump endpoints are never sampled) and a
// fixed composite 10-point Gauss-Legendre rule used by the bulk Fourier
// sweeps.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "absum/compensated.hpp"

namespace absum {

/// Raised when an integral cannot be brought under the requested tolerance;
/// carries the value reached and its error estimate.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what + " (achieved " + std::to_string(value) +
                           " +/- " + std::to_string(error_estimate) + ")"),
        value_(value),
        error_estimate_(error_estimate) {}
  double value() const { return value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

namespace quad_detail {

// QUADPACK 15-point Kronrod abscissae/weights with the embedded 7-point
// Gauss rule (odd-indexed abscissae).
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kron = 0.0, gauss = 0.0;
  const double fc = f(center);
  kron += kKronrodW[7] * fc;
  gauss += kGaussW[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodX[i];
    const double fsum = f(center - dx) + f(center + dx);
    kron += kKronrodW[i] * fsum;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kron * half;
  // |Kronrod - Gauss| as the (conservative) panel error estimate.
  p.error = std::abs((kron - gauss) * half);
  if (!std::isfinite(p.value) || !std::isfinite(p.error))
    p.error = std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace quad_detail

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  int max_panels = 4000;
  std::vector<double> breakpoints;  ///< interior seed points (jumps, kinks)
};

/// Adaptive GK15 on [a, b].  Seeds one panel per breakpoint gap and splits
/// the worst panel until the summed error estimate meets abs_tol.
template <typename F>
QuadratureResult integrate_adaptive(const F& f, double a, double b,
                                    const AdaptiveOptions& opt = {}) {
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::vector<double> edges{a};
  for (double t : opt.breakpoints)
    if (t > a && t < b) edges.push_back(t);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  std::priority_queue<quad_detail::Panel> panels;
  double total_error = 0.0;
  long evals = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    auto p = quad_detail::gk15(f, edges[i - 1], edges[i]);
    evals += 15;
    total_error += p.error;
    panels.push(p);
  }
  while (total_error > opt.abs_tol &&
         static_cast<int>(panels.size()) < opt.max_panels) {
    quad_detail::Panel worst = panels.top();
    panels.pop();
    total_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      total_error += worst.error;  // interval exhausted at this precision
      panels.push(worst);
      break;
    }
    auto left = quad_detail::gk15(f, worst.a, mid);
    auto right = quad_detail::gk15(f, mid, worst.b);
    evals += 30;
    total_error += left.error + right.error;
    panels.push(left);
    panels.push(right);
  }
  CompensatedSum acc;
  while (!panels.empty()) {
    acc += panels.top().value;
    panels.pop();
  }
  result.value = acc.value();
  result.error_estimate = total_error;
  result.evaluations = evals;
  result.converged = total_error <= opt.abs_tol;
  return result;
}

/// As integrate_adaptive but throws AccuracyError on non-convergence.
template <typename F>
double integrate_or_throw(const F& f, double a, double b,
                          const AdaptiveOptions& opt = {},
                          const std::string& what = "integral") {
  QuadratureResult r = integrate_adaptive(f, a, b, opt);
  if (!r.converged) {
    throw AccuracyError("quadrature did not converge for " + what, r.value,
                        r.error_estimate);
  }
  return r.value;
}

namespace quad_detail {

// 10-point Gauss-Legendre on [-1, 1].
inline constexpr double kGL10X[5] = {
    0.148874338981631210884826001130, 0.433395394129247190799265943166,
    0.679409568299024406234327365115, 0.865063366688984510732096688423,
    0.973906528517171720077964012084};
inline constexpr double kGL10W[5] = {
    0.295524224714752870173892994651, 0.269266719309996355091226921569,
    0.219086362515982043995534934228, 0.149451349150580593145776339658,
    0.066671344308688137593568809893};

}  // namespace quad_detail

/// Nodes and weights of a composite 10-point Gauss-Legendre rule over the
/// given panel edges.  With at least one panel per oscillation wavelength
/// the rule integrates f(t) sin(nt) essentially to machine precision.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  static CompositeRule over(const std::vector<double>& edges) {
    CompositeRule rule;
    rule.nodes.reserve((edges.size() - 1) * 10);
    rule.weights.reserve((edges.size() - 1) * 10);
    for (std::size_t i = 1; i < edges.size(); ++i) {
      const double center = 0.5 * (edges[i - 1] + edges[i]);
      const double half = 0.5 * (edges[i] - edges[i - 1]);
      for (int j = 4; j >= 0; --j) {
        rule.nodes.push_back(center - half * quad_detail::kGL10X[j]);
        rule.weights.push_back(half * quad_detail::kGL10W[j]);
      }
      for (int j = 0; j < 5; ++j) {
        rule.nodes.push_back(center + half * quad_detail::kGL10X[j]);
        rule.weights.push_back(half * quad_detail::kGL10W[j]);
      }
    }
    return rule;
  }

  template <typename F>
  double apply(const F& f) const {
    CompensatedSum acc;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      acc += weights[i] * f(nodes[i]);
    return acc.value();
  }
};

}  // namespace absum
