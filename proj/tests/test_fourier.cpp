// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <vector>

#include "absum/fourier.hpp"
#include "absum/methods.hpp"
#include "absum/periodic.hpp"
#include "absum/quadrature.hpp"
#include "support.hpp"

using namespace absum;
using testsupport::rel_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("fourier coefficients by adaptive quadrature") {
  SECTION("sin t picks out b_1") {
    PeriodicFunction f = PeriodicFunction::harmonic(1);
    const auto [a1, b1] = fourier_coefficient(f, 1);
    CHECK(std::abs(b1 - 1.0) < 1e-10);
    CHECK(std::abs(a1) < 1e-10);
    for (Index n : {0, 2, 3, 9}) {
      const auto [an, bn] = fourier_coefficient(f, n);
      CHECK(std::abs(an) < 1e-10);
      CHECK(std::abs(bn) < 1e-10);
    }
  }
  SECTION("sawtooth matches the analytic coefficients") {
    PeriodicFunction f = PeriodicFunction::sawtooth();
    for (Index n : {1, 2, 7, 33, 64}) {
      const auto [an, bn] = fourier_coefficient(f, n);
      const double expected = 2.0 * (n % 2 == 0 ? -1.0 : 1.0) / double(n);
      CHECK(std::abs(an) < 1e-9);
      CHECK(std::abs(bn - expected) < 1e-9);
    }
  }
  SECTION("even functions have vanishing sine coefficients") {
    PeriodicFunction f(
        [](double t) { return std::cos(t) + 0.25 * std::cos(3.0 * t); },
        SmoothnessHint::smooth, {}, "even");
    for (Index n : {1, 2, 3, 5}) {
      const auto [an, bn] = fourier_coefficient(f, n);
      (void)an;
      CHECK(std::abs(bn) < 1e-10);
    }
    CHECK(std::abs(fourier_coefficient(f, 1).first - 1.0) < 1e-10);
    CHECK(std::abs(fourier_coefficient(f, 3).first - 0.25) < 1e-10);
  }
}

TEST_CASE("bulk coefficient tables agree with the adaptive route") {
  for (const PeriodicFunction& f :
       {PeriodicFunction::sawtooth(), PeriodicFunction::harmonic(3),
        PeriodicFunction::triangle()}) {
    CoefficientTable table = fourier_table(f, 128);
    for (Index n : {0, 1, 2, 17, 64, 128}) {
      const auto [an, bn] = fourier_coefficient(f, n, 1e-11);
      CHECK(std::abs(table.a[std::size_t(n)] - an) < 1e-9);
      CHECK(std::abs(table.b[std::size_t(n)] - bn) < 1e-9);
    }
  }
}

TEST_CASE("symmetrised oscillation phi") {
  SECTION("sawtooth near the centre has constant phi") {
    PeriodicFunction f = PeriodicFunction::sawtooth();
    auto ph = phi(f, 0.7);
    for (double t : {0.1, 0.5, 1.2}) CHECK(rel_diff(ph(t), 0.7) < 1e-15);
  }
  SECTION("even function at the origin reproduces itself") {
    PeriodicFunction f(
        [](double t) { return std::cos(t) * std::cos(t); },
        SmoothnessHint::smooth, {}, "cos^2");
    auto ph = phi(f, 0.0);
    for (double t : {0.2, 1.0, 2.5}) CHECK(rel_diff(ph(t), f(t)) < 1e-15);
  }
  SECTION("cosine factorises as cos(x) cos(t)") {
    PeriodicFunction f([](double t) { return std::cos(t); },
                       SmoothnessHint::smooth, {}, "cos");
    for (double x : {0.3, 1.1, 2.0}) {
      auto ph = phi(f, x);
      for (double t : {0.2, 0.9, 2.8}) {
        CHECK(rel_diff(ph(t), std::cos(x) * std::cos(t)) < 1e-14);
      }
    }
  }
}

TEST_CASE("fractional integral mean phi_alpha") {
  SECTION("a constant function is a fixed point for every order") {
    PeriodicFunction f([](double) { return 3.0; }, SmoothnessHint::smooth, {},
                       "const");
    for (double alpha : {0.5, 1.0, 2.0}) {
      auto mean = phi_alpha(f, 0.5, alpha);
      for (double t : {0.1, 1.0, kPi}) CHECK(rel_diff(mean(t), 3.0) < 1e-9);
    }
  }
  SECTION("triangle wave at the origin: phi(u) = u") {
    PeriodicFunction f = PeriodicFunction::triangle();
    auto mean1 = phi_alpha(f, 0.0, 1.0);
    auto mean_half = phi_alpha(f, 0.0, 0.5);
    for (double t : {0.3, 1.0, 2.0}) {
      CHECK(rel_diff(mean1(t), t / 2.0) < 1e-9);          // (1/t) int u du
      CHECK(rel_diff(mean_half(t), t / 1.5) < 1e-8);      // t / (1 + alpha)
    }
    // independent quadrature oracle: u = t0 - y^2 removes the endpoint
    // singularity of (t0-u)^{-1/2} u, leaving the polynomial 2(t0 - y^2)
    const double t0 = 1.3;
    AdaptiveOptions opt;
    opt.abs_tol = 1e-13;
    const double regularised = integrate_or_throw(
        [&](double y) { return 2.0 * (t0 - y * y); }, 0.0, std::sqrt(t0), opt);
    const double oracle = 0.5 / std::sqrt(t0) * regularised;
    CHECK(rel_diff(mean_half(t0), oracle) < 1e-9);
  }
  SECTION("order one equals a trapezoid oracle on a kinked profile") {
    PeriodicFunction f = PeriodicFunction::triangle();
    const double x = 0.8;
    auto mean1 = phi_alpha(f, x, 1.0, 1e-11);
    auto ph = phi(f, x);
    for (double t : {0.5, 1.7, 3.0}) {
      // phi is piecewise linear, so a kink-aligned trapezoid rule is exact.
      const std::vector<double> kinks = phi_breakpoints(f, x);
      std::vector<double> grid{0.0, t};
      for (double b : kinks)
        if (b < t) grid.push_back(b);
      std::sort(grid.begin(), grid.end());
      double integral = 0.0;
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const double lo = grid[i - 1], hi = grid[i];
        integral += 0.5 * (ph(lo) + ph(hi)) * (hi - lo);
      }
      CHECK(std::abs(mean1(t) - integral / t) < 1e-10);
    }
  }
}

TEST_CASE("total variation diagnostic") {
  const std::vector<double> grids{128, 256, 512, 1024};
  SECTION("monotone functions stabilise at the endpoint gap") {
    auto g = [](double t) { return std::atan(3.0 * t); };
    GrowthReport rep = bv_diagnostic(g, grids);
    CHECK(rep.verdict == Verdict::consistent_with_bounded);
    CHECK(std::abs(rep.sup_ratio - (std::atan(3.0 * kPi) - 0.0)) < 1e-2);
  }
  SECTION("a single jump contributes exactly its height") {
    auto g = [](double t) { return t > 1.0 ? 2.5 : 0.0; };
    GrowthReport rep = bv_diagnostic(g, grids);
    CHECK(rep.verdict == Verdict::consistent_with_bounded);
    CHECK(rep.sup_ratio == 2.5);
  }
  SECTION("sin(1/t) oscillates without bound") {
    auto g = [](double t) { return std::sin(1.0 / t); };
    GrowthReport rep = bv_diagnostic(g, grids);
    CHECK(rep.verdict == Verdict::diverging);
  }
}

TEST_CASE("fourier state") {
  SECTION("single-harmonic series at the quarter period") {
    FourierState state(PeriodicFunction::harmonic(1), kPi / 2.0, 64);
    LazySequence t = state.mean_sequence();
    for (Index n : {1, 5, 50}) {
      CHECK(std::abs(t[n] - 1.0 / double(n + 1)) < 1e-9);
    }
  }
  SECTION("zero function has zero means") {
    FourierState state(
        PeriodicFunction([](double) { return 0.0; }, SmoothnessHint::smooth,
                         {}, "zero"),
        1.0, 32);
    LazySequence t = state.mean_sequence();
    CHECK(std::abs(t[20]) < 1e-12);
  }
  SECTION("odd function at the origin has zero terms") {
    FourierState state(PeriodicFunction::sawtooth(), 0.0, 64);
    LazySequence t = state.mean_sequence();
    CHECK(std::abs(t[30]) < 1e-9);
  }
  SECTION("the constant term is removed by normalisation") {
    PeriodicFunction f([](double t) { return 1.0 + std::sin(t); },
                       SmoothnessHint::smooth, {}, "1+sin");
    FourierState state(f, 0.3, 32);
    CHECK(rel_diff(state.mean(), 1.0) < 1e-9);
    PeriodicFunction tilde = state.normalized();
    CHECK(std::abs(tilde(0.0)) < 1e-9);
    CHECK(rel_diff(state.b(1), 1.0) < 1e-9);  // coefficients unaffected
  }
  SECTION("terms satisfy the shift identity") {
    PeriodicFunction f = PeriodicFunction::sawtooth();
    const double x = 1.0;
    FourierState state(f, x, 64);
    for (Index n : {1, 3, 10, 40}) {
      AdaptiveOptions opt;
      opt.abs_tol = 1e-11;
      opt.breakpoints = f.breakpoints();
      const Index seeds = std::max<Index>(1, n / 3);
      for (Index i = 1; i < seeds; ++i)
        opt.breakpoints.push_back(-kPi + 2.0 * kPi * double(i) / double(seeds));
      const double direct =
          integrate_or_throw(
              [&](double t) { return f(t) * std::cos(double(n) * (t - x)); },
              -kPi, kPi, opt) /
          kPi;
      CHECK(std::abs(state.C(n) - direct) < 1e-8);
    }
  }
}

TEST_CASE("parseval spot check") {
  PeriodicFunction f([](double t) { return std::exp(std::sin(t)); },
                     SmoothnessHint::smooth, {}, "exp(sin)");
  CoefficientTable table = fourier_table(f, 512);
  CompensatedSum sum;
  for (Index n = 1; n <= 512; ++n) {
    sum += table.a[std::size_t(n)] * table.a[std::size_t(n)] +
           table.b[std::size_t(n)] * table.b[std::size_t(n)];
  }
  AdaptiveOptions opt;
  opt.abs_tol = 1e-12;
  const double energy =
      integrate_or_throw([&](double t) { return f(t) * f(t); }, -kPi, kPi,
                         opt) /
      kPi;
  const double expected = energy - table.a[0] * table.a[0] / 2.0;
  CHECK(std::abs(sum.value() - expected) < 1e-6);
}

TEST_CASE("named function library") {
  SECTION("square wave odd harmonics") {
    PeriodicFunction f = PeriodicFunction::square();
    CoefficientTable table = fourier_table(f, 16);
    for (Index n : {1, 3, 5}) {
      CHECK(std::abs(table.b[std::size_t(n)] - 4.0 / (kPi * double(n))) < 1e-9);
    }
    CHECK(std::abs(table.b[2]) < 1e-9);
    CHECK(std::abs(table.a[3]) < 1e-9);
  }
  SECTION("triangle wave odd cosine harmonics") {
    PeriodicFunction f = PeriodicFunction::triangle();
    CoefficientTable table = fourier_table(f, 16);
    CHECK(std::abs(table.a[0] - kPi) < 1e-9);  // mean pi/2, a_0 = pi
    for (Index n : {1, 3, 5}) {
      CHECK(std::abs(table.a[std::size_t(n)] +
                     4.0 / (kPi * double(n) * double(n))) < 1e-9);
    }
    CHECK(std::abs(table.a[2]) < 1e-9);
    CHECK(std::abs(table.b[3]) < 1e-9);
  }
  SECTION("sampled functions interpolate linearly and wrap") {
    PeriodicFunction f = PeriodicFunction::from_samples(
        {{-kPi, 0.0}, {0.0, 1.0}, {kPi, 0.0}});
    CHECK(rel_diff(f(kPi / 2.0), 0.5) < 1e-14);
    CHECK(rel_diff(f(-kPi / 2.0), 0.5) < 1e-14);
    CHECK(rel_diff(f(0.0), 1.0) < 1e-14);
    CHECK(rel_diff(f(2.0 * kPi), 1.0) < 1e-12);  // periodic reduction
  }
  SECTION("sampled functions load from CSV") {
    const auto path =
        std::filesystem::temp_directory_path() / "absum_samples.csv";
    {
      std::ofstream out(path);
      out << "# t, f(t)\n";
      out << "-3.141592653589793,0\n0,2\n3.141592653589793,0\n";
    }
    PeriodicFunction f = PeriodicFunction::from_csv(path.string());
    CHECK(rel_diff(f(0.0), 2.0) < 1e-14);
    CHECK(rel_diff(f(kPi / 2.0), 1.0) < 1e-12);
  }
}

TEST_CASE("fourier summability experiment") {
  LazySequence lambda(1, [](Index n) { return 1.0 / double(n + 1); });
  LazySequence X(1, [](Index n) { return std::log(double(n + 2)); });
  WeightSystem w = unit_weights();

  SECTION("zero factor gives an identically zero ledger") {
    FourierExperiment exp = fourier_summability_experiment(
        PeriodicFunction::sawtooth(), 1.0, LazySequence::constant(0.0, 1), X,
        w, weighted_mean_method(w), 1.0, HypothesisVariant::quasi_f, 200);
    CHECK(exp.ledger.total() == 0.0);
  }
  SECTION("sawtooth under weighted mean and under cesaro(1)") {
    for (const TriangularMethod& A :
         {weighted_mean_method(w), cesaro_method(1.0)}) {
      FourierExperiment exp = fourier_summability_experiment(
          PeriodicFunction::sawtooth(), 1.0, lambda, X, w, A, 1.0,
          HypothesisVariant::quasi_f, 400);
      CHECK(exp.hypotheses.overall() == Verdict::consistent_with_bounded);
      CHECK(exp.ledger.flattening_report().verdict ==
            Verdict::consistent_with_bounded);
    }
  }
}
