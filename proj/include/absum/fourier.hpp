// SPDX-License-Identifier: Apache-2.0
//
// Trigonometric Fourier series: coefficients by quadrature (an adaptive
// reference path and a bulk composite-rule sweep for large coefficient
// tables), the symmetrised oscillation phi and its fractional integral mean,
// a total-variation diagnostic on (0, pi), and the end-to-end summability
// experiment for factored Fourier series.

#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absum/cesaro.hpp"
#include "absum/growth.hpp"
#include "absum/hypotheses.hpp"
#include "absum/indices.hpp"
#include "absum/ledger.hpp"
#include "absum/periodic.hpp"
#include "absum/quadrature.hpp"
#include "absum/sequence.hpp"
#include "absum/triangular.hpp"
#include "absum/weights.hpp"

namespace absum {

/// (a_n, b_n) of f by adaptive quadrature:
/// a_n = (1/pi) integral f(t) cos(nt) dt, b_n likewise with sin.
/// Panels are seeded at the registered breakpoints and at roughly one per
/// three oscillation wavelengths; b_0 = 0 by convention.
inline std::pair<double, double> fourier_coefficient(const PeriodicFunction& f,
                                                     Index n,
                                                     double tol = 1e-10) {
  if (n < 0) throw std::invalid_argument("fourier_coefficient: n >= 0");
  const double pi = std::numbers::pi;
  AdaptiveOptions opt;
  opt.abs_tol = tol * pi;
  opt.max_panels = 16000;
  opt.breakpoints = f.breakpoints();
  const Index seeds = std::max<Index>(1, n / 3);
  for (Index i = 1; i < seeds; ++i)
    opt.breakpoints.push_back(-pi + 2.0 * pi * static_cast<double>(i) /
                                        static_cast<double>(seeds));
  const double nd = static_cast<double>(n);
  const double a = integrate_or_throw(
                       [&](double t) { return f(t) * std::cos(nd * t); }, -pi,
                       pi, opt, "a_" + std::to_string(n)) /
                   pi;
  if (n == 0) return {a, 0.0};
  const double b = integrate_or_throw(
                       [&](double t) { return f(t) * std::sin(nd * t); }, -pi,
                       pi, opt, "b_" + std::to_string(n)) /
                   pi;
  return {a, b};
}

struct CoefficientTable {
  std::vector<double> a;  ///< a_0 .. a_n_max
  std::vector<double> b;  ///< b_0 (= 0) .. b_n_max
  Index n_max() const { return static_cast<Index>(a.size()) - 1; }
};

/// All coefficients up to n_max in one sweep: a fixed composite
/// 10-point Gauss-Legendre grid with ~1.25 panels per wavelength of the
/// highest harmonic (aligned to the breakpoints of f), plus rotation
/// recurrences for cos(n t_i), sin(n t_i) re-seeded every block to cap
/// phase drift.
inline CoefficientTable fourier_table(const PeriodicFunction& f, Index n_max) {
  const double pi = std::numbers::pi;
  const double panels_per_wavelength = 1.25;
  const Index total_panels = std::max<Index>(
      64, static_cast<Index>(std::ceil(panels_per_wavelength *
                                       static_cast<double>(n_max + 8))));

  std::vector<double> pieces{-pi};
  for (double t : f.breakpoints())
    if (t > -pi && t < pi) pieces.push_back(t);
  pieces.push_back(pi);
  std::sort(pieces.begin(), pieces.end());

  std::vector<double> edges;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    const double lo = pieces[i - 1];
    const double hi = pieces[i];
    const Index m = std::max<Index>(
        1, static_cast<Index>(std::ceil((hi - lo) / (2.0 * pi) *
                                        static_cast<double>(total_panels))));
    for (Index j = 0; j < m; ++j)
      edges.push_back(lo + (hi - lo) * static_cast<double>(j) /
                               static_cast<double>(m));
  }
  edges.push_back(pi);

  const CompositeRule rule = CompositeRule::over(edges);
  const std::size_t m = rule.nodes.size();
  std::vector<double> g(m), cos_step(m), sin_step(m);
  for (std::size_t i = 0; i < m; ++i) {
    g[i] = rule.weights[i] * f(rule.nodes[i]) / pi;
    cos_step[i] = std::cos(rule.nodes[i]);
    sin_step[i] = std::sin(rule.nodes[i]);
  }

  CoefficientTable table;
  table.a.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  table.b.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  std::vector<CompensatedSum> acc_a(table.a.size()), acc_b(table.b.size());
  constexpr Index kResyncBlock = 1024;
  for (std::size_t i = 0; i < m; ++i) {
    const double gi = g[i];
    acc_a[0] += gi;
    const double c1 = cos_step[i];
    const double s1 = sin_step[i];
    double c = 1.0, s = 0.0;
    for (Index n = 1; n <= n_max; ++n) {
      if (n % kResyncBlock == 0) {
        const double arg = static_cast<double>(n) * rule.nodes[i];
        c = std::cos(arg);
        s = std::sin(arg);
      } else {
        const double cn = c * c1 - s * s1;
        s = s * c1 + c * s1;
        c = cn;
      }
      acc_a[static_cast<std::size_t>(n)] += gi * c;
      acc_b[static_cast<std::size_t>(n)] += gi * s;
    }
  }
  for (std::size_t n = 0; n < table.a.size(); ++n) {
    table.a[n] = acc_a[n].value();
    table.b[n] = acc_b[n].value();
  }
  table.b[0] = 0.0;
  return table;
}

/// Memoized coefficients of f at an evaluation point x: the terms
/// C_n(x) = a_n cos(nx) + b_n sin(nx) and their order-one mean t_n(x).
/// The constant term is removed by subtracting the computed mean a_0/2.
class FourierState {
 public:
  FourierState(PeriodicFunction f, double x, Index initial_n_max = 256)
      : f_(std::move(f)),
        x_(x),
        table_(std::make_shared<CoefficientTable>(
            fourier_table(f_, std::max<Index>(initial_n_max, 16)))) {}

  const PeriodicFunction& function() const { return f_; }
  double x() const { return x_; }

  double a(Index n) const { return coefficient(n).first; }
  double b(Index n) const { return coefficient(n).second; }

  /// a_0/2, the removed constant term.
  double mean() const { return table_->a[0] / 2.0; }

  /// f with its mean subtracted (the series' zero-constant normalisation).
  PeriodicFunction normalized() const {
    const double m = mean();
    PeriodicFunction base = f_;
    return PeriodicFunction([base, m](double t) { return base(t) - m; },
                            base.hint(), base.breakpoints(),
                            base.name() + "-mean");
  }

  double C(Index n) const {
    const auto [an, bn] = coefficient(n);
    const double nd = static_cast<double>(n);
    return an * std::cos(nd * x_) + bn * std::sin(nd * x_);
  }

  /// C_n(x) as a sequence from n = 1.  Shared across copies, so repeated
  /// queries reuse the memoized prefix.
  LazySequence term_sequence() const {
    if (!terms_) {
      auto self = *this;
      terms_ = std::make_shared<LazySequence>(
          1, [self](Index n) { return self.C(n); },
          "C_n(" + f_.name() + ")");
    }
    return *terms_;
  }

  /// t_n(x), the order-one mean of (n C_n(x)), from n = 1.
  LazySequence mean_sequence() const {
    if (!means_) means_ = std::make_shared<LazySequence>(c1_mean_of(term_sequence()));
    return *means_;
  }

  double t_of_x(Index n) const { return mean_sequence()[n]; }

 private:
  std::pair<double, double> coefficient(Index n) const {
    if (n < 0) throw std::invalid_argument("FourierState: n >= 0");
    if (n > table_->n_max()) {
      const Index grown = std::max(n, table_->n_max() * 2);
      *table_ = fourier_table(f_, grown);
    }
    return {table_->a[static_cast<std::size_t>(n)],
            table_->b[static_cast<std::size_t>(n)]};
  }

  PeriodicFunction f_;
  double x_;
  std::shared_ptr<CoefficientTable> table_;
  mutable std::shared_ptr<LazySequence> terms_;
  mutable std::shared_ptr<LazySequence> means_;
};

/// phi(t) = (f(x+t) + f(x-t)) / 2.
inline std::function<double(double)> phi(const PeriodicFunction& f, double x) {
  return [f, x](double t) { return 0.5 * (f(x + t) + f(x - t)); };
}

/// Breakpoints of phi(., x) inside (0, pi), derived from those of f.
inline std::vector<double> phi_breakpoints(const PeriodicFunction& f,
                                           double x) {
  std::vector<double> out;
  const double pi = std::numbers::pi;
  for (double b : f.breakpoints()) {
    for (double candidate :
         {PeriodicFunction::reduce(b - x), PeriodicFunction::reduce(x - b)}) {
      for (double t : {candidate, candidate + 2.0 * pi, candidate - 2.0 * pi})
        if (t > 0.0 && t < pi) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// phi_alpha(t) = (alpha/t^alpha) integral_0^t (t-u)^{alpha-1} phi(u) du for
/// alpha > 0 and t in (0, pi].  alpha = 1 reduces to the running integral
/// mean; for other alpha the substitution u = t (1 - w^{1/alpha}) removes the
/// endpoint singularity:
///   phi_alpha(t) = integral_0^1 phi(t (1 - w^{1/alpha})) dw.
inline std::function<double(double)> phi_alpha(const PeriodicFunction& f,
                                               double x, double alpha,
                                               double tol = 1e-10) {
  if (!(alpha > 0.0)) throw std::domain_error("phi_alpha: alpha must be > 0");
  auto ph = phi(f, x);
  auto breaks = phi_breakpoints(f, x);
  if (alpha == 1.0) {
    return [ph, breaks, tol](double t) {
      if (!(t > 0.0)) throw std::domain_error("phi_alpha: t must be positive");
      AdaptiveOptions opt;
      opt.abs_tol = tol * t;
      opt.breakpoints = breaks;
      return integrate_or_throw(ph, 0.0, t, opt, "phi_1") / t;
    };
  }
  return [ph, breaks, alpha, tol](double t) {
    if (!(t > 0.0)) throw std::domain_error("phi_alpha: t must be positive");
    AdaptiveOptions opt;
    opt.abs_tol = tol;
    std::vector<double> wbreaks;
    for (double u : breaks)
      if (u < t) wbreaks.push_back(std::pow((t - u) / t, alpha));
    opt.breakpoints = std::move(wbreaks);
    return integrate_or_throw(
        [&](double w) { return ph(t * (1.0 - std::pow(w, 1.0 / alpha))); },
        0.0, 1.0, opt, "phi_alpha");
  };
}

/// Total variation of g on (0, pi) over nested grids of the given sizes
/// (strictly interior nodes); consistent when the variation stabilises
/// across refinements.
template <typename G>
GrowthReport bv_diagnostic(const G& g, const std::vector<double>& grid_sizes,
                           const GrowthThresholds& thr = {},
                           std::string label = "g") {
  if (grid_sizes.size() < 2)
    throw std::invalid_argument("bv_diagnostic: need at least two grid sizes");
  for (std::size_t i = 1; i < grid_sizes.size(); ++i) {
    if (!(grid_sizes[i] > grid_sizes[i - 1]))
      throw std::invalid_argument("bv_diagnostic: grid sizes must increase");
  }
  const double pi = std::numbers::pi;
  std::vector<double> variations;
  for (double size : grid_sizes) {
    const Index m = static_cast<Index>(size);
    if (m < 2) throw std::invalid_argument("bv_diagnostic: grid size >= 2");
    CompensatedSum var;
    double prev = g(pi * 1.0 / static_cast<double>(m + 1));
    for (Index i = 2; i <= m; ++i) {
      const double here = g(pi * static_cast<double>(i) /
                            static_cast<double>(m + 1));
      var += std::abs(here - prev);
      prev = here;
    }
    variations.push_back(var.value());
  }
  return grade_refinements("total variation of " + label + " on (0,pi)",
                           variations, thr);
}

struct FourierExperiment {
  HypothesisLedger hypotheses;  ///< conditions, lemma, BV and t_n reports
  SummabilityLedger ledger;     ///< |A,p_n|_k ledger of sum C_n(x) lambda_n
};

/// Runs the full factored-Fourier-series experiment: hypothesis conditions
/// with a := C_.(x), the lemma consequences, BV diagnostics for phi and
/// phi_1, the boundedness scan of t_n(x), and the summability ledger of
/// sum C_n(x) lambda_n under the method A.
inline FourierExperiment fourier_summability_experiment(
    const PeriodicFunction& f, double x, const LazySequence& lambda,
    const LazySequence& X, const WeightSystem& w, const TriangularMethod& A,
    double k, HypothesisVariant variant, Index N,
    const GrowthThresholds& thr = {}, double quad_tol = 1e-10) {
  FourierState state(f, x, N);
  const LazySequence terms = state.term_sequence();

  FourierExperiment out;
  out.hypotheses = check_hypotheses(terms, lambda, X, w, k, variant, N, thr);
  auto [lemma1, lemma2] = check_lemma(lambda, X, N, thr);
  out.hypotheses.push("l1", std::move(lemma1));
  out.hypotheses.push("l2", std::move(lemma2));

  const PeriodicFunction normalized = state.normalized();
  const std::vector<double> grids{512, 1024, 2048, 4096};
  out.hypotheses.push(
      "phi-bv", bv_diagnostic(phi(normalized, x), grids, thr, "phi"));
  out.hypotheses.push(
      "phi1-bv",
      bv_diagnostic(phi_alpha(normalized, x, 1.0, std::max(quad_tol, 1e-12)),
                    grids, thr, "phi_1"));

  const LazySequence t = state.mean_sequence();
  std::vector<double> t_history;
  t_history.reserve(static_cast<std::size_t>(N));
  for (Index n = 1; n <= N; ++n) t_history.push_back(std::abs(t[n]));
  out.hypotheses.push("tn-bounded",
                      grade_ratio_history("t_n(x) = O(1) given phi of bounded "
                                          "variation",
                                          t_history, 1, thr));

  out.ledger = index_matrix(factored_series(terms, lambda), A, w, k, N);
  return out;
}

}  // namespace absum
