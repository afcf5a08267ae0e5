// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Tolerances are pinned here, next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <numbers>
#include <string>
#include <vector>

#include "absum/absum.hpp"

using namespace absum;

namespace {

double rel_diff(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

double scaled_dev(double x, double y) {
  return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<double> random_values(unsigned seed, std::size_t count, double lo,
                                  double hi) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (double& x : out) x = dist(gen);
  return out;
}

LazySequence random_decaying(unsigned seed, std::size_t count) {
  std::vector<double> values = random_values(seed, count, -1.0, 1.0);
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] /= static_cast<double>(i + 1);
  return LazySequence::from_values(std::move(values), 1);
}

std::vector<LazySequence> fixed_test_series() {
  std::vector<LazySequence> out;
  out.emplace_back(1, [](Index n) { return 1.0 / (double(n) * double(n)); },
                   "1/n^2");
  out.emplace_back(1, [](Index n) {
    return (n % 2 == 0 ? -1.0 : 1.0) / std::pow(double(n), 3.0);
  }, "(-1)^(n+1)/n^3");
  out.emplace_back(1, [](Index n) { return std::pow(double(n), -1.5); },
                   "1/n^1.5");
  out.emplace_back(1, [](Index n) {
    return (2.0 + (n % 2 == 0 ? 1.0 : -1.0)) / (2.0 * double(n) * double(n));
  }, "(2+(-1)^n)/(2n^2)");
  out.emplace_back(1, [](Index n) {
    return (3.0 + std::sin(double(n))) / (double(n) * double(n));
  }, "(3+sin n)/n^2");
  return out;
}

// ---------------------------------------------------------------- C1 ----

Criterion reduction_equivalence() {
  Criterion c;
  const Index N = 2000;
  WeightSystem growing =
      make_weights(LazySequence(0, [](Index n) { return double(n + 1); }));
  WeightSystem unit = unit_weights();
  TriangularMethod mean_growing = weighted_mean_method(growing);
  TriangularMethod mean_unit = weighted_mean_method(unit);

  for (const LazySequence& a : fixed_test_series()) {
    for (double k : {1.0, 1.5, 2.0}) {
      SummabilityLedger via_matrix = index_matrix(a, mean_growing, growing, k, N);
      SummabilityLedger direct = index_weighted(a, growing, k, N);
      for (Index n = 1; n <= N; ++n) {
        c.require(rel_diff(via_matrix.term_at(n), direct.term_at(n)) <= 1e-12,
                  "matrix vs weighted terms differ for " + a.name() + " at n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
      }
      SummabilityLedger unit_matrix = index_matrix(a, mean_unit, unit, k, N);
      SummabilityLedger unit_direct = index_weighted(a, unit, k, N);
      SummabilityLedger cesaro = index_cesaro(a, 1.0, k, N);
      for (Index n = 1; n <= N; ++n) {
        c.require(
            rel_diff(unit_matrix.term_at(n), unit_direct.term_at(n)) <= 1e-12,
            "unit-weight matrix vs weighted terms differ for " + a.name());
        // P_n/p_n = n+1 aligned with the order-one normalisation n
        c.require(rel_diff(index_term(double(n), unit_direct.delta_at(n), k),
                           cesaro.term_at(n)) <= 1e-12,
                  "unit-weight terms depart from the order-one index for " +
                      a.name() + " at n=" + std::to_string(n));
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- C2 ----

Criterion companion_closed_forms() {
  Criterion c;
  const Index N = 1000;
  std::vector<LazySequence> families;
  families.emplace_back(0, [](Index) { return 1.0; }, "1");
  families.emplace_back(0, [](Index n) { return double(n + 1); }, "n+1");
  families.emplace_back(0, [](Index n) { return 1.0 / std::sqrt(double(n + 1)); },
                        "1/sqrt(n+1)");
  for (LazySequence& p : families) {
    WeightSystem w = make_weights(p);
    TriangularMethod::Recipe raw;
    raw.name = "raw-mean(" + p.name() + ")";
    raw.entry = [w](Index n, Index v) { return w.p(v) / w.P(n); };
    TriangularMethod generic{std::move(raw)};
    for (Index n = 0; n <= N; ++n) {
      auto bar = generic.bar_row(n);
      auto hat = generic.hat_row(n);
      for (Index v = 0; v <= n; ++v) {
        const std::size_t i = static_cast<std::size_t>(v);
        const double bar_expected = (w.P(n) - w.P(v - 1)) / w.P(n);
        const double hat_expected =
            n == 0 ? w.p(0) / w.P(0)
                   : (v == 0 ? 0.0
                             : w.p(n) * w.P(v - 1) / (w.P(n) * w.P(n - 1)));
        c.require(scaled_dev((*bar)[i], bar_expected) <= 1e-13,
                  "bar row departs from the closed form (weights " + p.name() +
                      ", n=" + std::to_string(n) + ", v=" + std::to_string(v) +
                      ")");
        c.require(scaled_dev((*hat)[i], hat_expected) <= 1e-13,
                  "hat row departs from the closed form (weights " + p.name() +
                      ", n=" + std::to_string(n) + ", v=" + std::to_string(v) +
                      ")");
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- C3 ----

Criterion decomposition_identity() {
  Criterion c;
  const Index N = 5000;
  WeightSystem unit = unit_weights();
  WeightSystem growing =
      make_weights(LazySequence(0, [](Index n) { return double(n + 1); }));
  WeightSystem rooted = make_weights(
      LazySequence(0, [](Index n) { return std::sqrt(double(n + 1)); }));
  WeightSystem wobbly = make_weights(LazySequence(
      0, [](Index n) { return 1.0 + std::abs(std::sin(double(n))); }));

  auto harmonic = [](Index n) { return 1.0 / double(n + 1); };
  auto log_factor = [](Index n) { return 1.0 / std::log(double(n + 2)); };
  auto oscillating = [](Index n) {
    return (2.0 + (n % 2 == 0 ? 1.0 : -1.0)) / (3.0 * double(n + 1));
  };

  struct Triple {
    TriangularMethod method;
    LazySequence series;
    LazySequence factor;
  };
  std::vector<Triple> triples;
  triples.push_back({weighted_mean_method(unit), random_decaying(101, 5001),
                     LazySequence(1, harmonic)});
  triples.push_back({weighted_mean_method(growing), random_decaying(102, 5001),
                     LazySequence(1, log_factor)});
  triples.push_back({weighted_mean_method(rooted), random_decaying(103, 5001),
                     LazySequence::constant(1.0, 1)});
  triples.push_back({weighted_mean_method(wobbly), random_decaying(104, 5001),
                     LazySequence(1, harmonic)});
  triples.push_back({cesaro_method(0.5), random_decaying(105, 5001),
                     LazySequence(1, harmonic)});
  triples.push_back({cesaro_method(0.5), random_decaying(106, 5001),
                     LazySequence(1, log_factor)});
  triples.push_back({cesaro_method(0.5),
                     LazySequence(1, [](Index n) {
                       return (n % 2 == 0 ? 1.0 : -1.0) / std::sqrt(double(n));
                     }),
                     LazySequence(1, harmonic)});
  triples.push_back({cesaro_method(0.75), random_decaying(107, 5001),
                     LazySequence(1, oscillating)});
  triples.push_back({cesaro_method(1.0), random_decaying(108, 5001),
                     LazySequence(1, harmonic)});
  triples.push_back({identity_method(), random_decaying(109, 5001),
                     LazySequence(1, harmonic)});

  int index = 0;
  for (const Triple& triple : triples) {
    ++index;
    decompose_range(triple.method, triple.series, triple.factor, N,
                    [&](const DecompositionRow& row) {
                      const double bound =
                          1e-10 * std::max(1.0, std::abs(row.delta_I));
                      c.require(std::abs(row.residual) <= bound,
                                "residual " + std::to_string(row.residual) +
                                    " at n=" + std::to_string(row.n) +
                                    " in triple " + std::to_string(index));
                    });
  }
  return c;
}

// ---------------------------------------------------------------- C4 ----

Criterion column_difference_lemma() {
  Criterion c;
  const Index N = 1000;
  WeightSystem unit = unit_weights();
  WeightSystem growing =
      make_weights(LazySequence(0, [](Index n) { return double(n + 1); }));
  std::vector<TriangularMethod> methods;
  methods.push_back(weighted_mean_method(unit));
  methods.push_back(weighted_mean_method(growing));
  methods.push_back(cesaro_method(0.5));
  methods.push_back(cesaro_method(1.0));
  for (const TriangularMethod& A : methods) {
    auto [identity, bounds] = column_difference_checks(A, N);
    c.require(identity.sup_ratio <= 1e-13,
              A.name() + ": hat-column identity deviates by " +
                  std::to_string(identity.sup_ratio));
    c.require(bounds.sup_ratio <= 1e-13,
              A.name() + ": difference bound violated by " +
                  std::to_string(bounds.sup_ratio));
  }
  return c;
}

// ---------------------------------------------------------------- C5 ----

Criterion cesaro_identity() {
  Criterion c;
  const Index N = 2000;
  std::vector<LazySequence> series;
  series.emplace_back(1, [](Index n) { return n % 2 == 0 ? -1.0 : 1.0; },
                      "(-1)^(n+1)");
  series.emplace_back(1, [](Index n) {
    return (n % 2 == 0 ? -1.0 : 1.0) * (1.0 + 1.0 / std::sqrt(double(n)));
  }, "(-1)^(n+1)(1+1/sqrt n)");
  for (const LazySequence& a : series) {
    for (double alpha : {0.5, 1.0}) {
      for (double k : {1.0, 2.0}) {
        SummabilityLedger ledger = index_cesaro(a, alpha, k, N);
        for (Index n = 1; n <= N; ++n) {
          const std::size_t i = static_cast<std::size_t>(n - 1);
          c.require(rel_diff(ledger.terms[i], ledger.alt_terms[i]) <= 1e-11,
                    "forms differ for " + a.name() + " at n=" +
                        std::to_string(n) + ", alpha=" + std::to_string(alpha) +
                        ", k=" + std::to_string(k));
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------- C6 ----

Criterion desk_verification() {
  Criterion c;
  const Index N = 10000;
  LazySequence prescribed(1, [](Index n) {
    return (2.0 + (n % 2 == 0 ? 1.0 : -1.0)) / 3.0;
  });
  LazySequence a = c1_mean_invert(prescribed);
  LazySequence lambda(1, [](Index n) { return 1.0 / double(n + 1); });
  LazySequence X(1, [](Index n) { return std::log(double(n + 2)); });
  WeightSystem w = unit_weights();
  TriangularMethod A = weighted_mean_method(w);

  HypothesisLedger hyp =
      check_hypotheses(a, lambda, X, w, 1.0, HypothesisVariant::quasi_f, N);
  for (const auto& entry : hyp.entries) {
    c.require(entry.report.verdict == Verdict::consistent_with_bounded,
              "condition " + entry.id + " graded " +
                  std::string(to_string(entry.report.verdict)));
  }
  auto [lemma1, lemma2] = check_lemma(lambda, X, N);
  c.require(lemma1.verdict == Verdict::consistent_with_bounded,
            "first lemma consequence failed");
  c.require(lemma2.verdict == Verdict::consistent_with_bounded,
            "second lemma consequence failed");

  BoundedSums sums = bounded_sums(A, a, lambda, w, 1.0, N);
  for (std::size_t r = 0; r < 4; ++r) {
    GrowthReport rep = sums.parts[r].flattening_report();
    c.require(rep.verdict == Verdict::consistent_with_bounded,
              "part ledger I" + std::to_string(r + 1) + " graded " +
                  std::string(to_string(rep.verdict)));
    c.require(rep.tail_slope < 0.02,
              "part ledger I" + std::to_string(r + 1) + " tail slope " +
                  std::to_string(rep.tail_slope));
  }
  GrowthReport combined = sums.combined.flattening_report();
  c.require(combined.verdict == Verdict::consistent_with_bounded,
            "combined ledger graded " + std::string(to_string(combined.verdict)));
  c.require(combined.tail_slope < 0.02,
            "combined ledger tail slope " + std::to_string(combined.tail_slope));

  HypothesisLedger negative = check_hypotheses(
      a, LazySequence::constant(1.0, 1), X, w, 1.0, HypothesisVariant::quasi_f,
      N);
  const GrowthReport* c1 = negative.find("c1");
  c.require(c1 != nullptr && c1->verdict == Verdict::diverging,
            "negative control: c1 was not flagged as diverging");
  return c;
}

// ---------------------------------------------------------------- C7 ----

Criterion fourier_end_to_end() {
  Criterion c;
  const Index N = 10000;
  PeriodicFunction f = PeriodicFunction::sawtooth();
  FourierState state(f, 1.0, N);

  for (Index n = 1; n <= 256; ++n) {
    const double expected = 2.0 * (n % 2 == 0 ? -1.0 : 1.0) / double(n);
    c.require(std::abs(state.b(n) - expected) <= 1e-8,
              "b_" + std::to_string(n) + " departs from the analytic value");
    c.require(std::abs(state.a(n)) <= 1e-8,
              "a_" + std::to_string(n) + " should vanish");
  }

  GrowthReport bv = bv_diagnostic(phi_alpha(state.normalized(), 1.0, 1.0, 1e-9),
                                  {512, 1024, 2048, 4096}, {}, "phi_1");
  c.require(bv.verdict == Verdict::consistent_with_bounded,
            "phi_1 variation did not stabilise (graded " +
                std::string(to_string(bv.verdict)) + ")");

  LazySequence t = state.mean_sequence();
  double sup_100 = 0.0, sup_1000 = 0.0, sup_10000 = 0.0;
  for (Index n = 1; n <= N; ++n) {
    const double v = std::abs(t[n]);
    if (n <= 100) sup_100 = std::max(sup_100, v);
    if (n <= 1000) sup_1000 = std::max(sup_1000, v);
    sup_10000 = std::max(sup_10000, v);
  }
  c.require(sup_10000 <= sup_100 * 1.05,
            "sup|t_n| grew by more than 5% across three decades (" +
                std::to_string(sup_100) + " -> " + std::to_string(sup_1000) +
                " -> " + std::to_string(sup_10000) + ")");

  LazySequence lambda(1, [](Index n) { return 1.0 / double(n + 1); });
  WeightSystem w = unit_weights();
  TriangularMethod A = weighted_mean_method(w);
  SummabilityLedger ledger =
      index_matrix(factored_series(state.term_sequence(), lambda), A, w, 1.0, N);
  GrowthReport flat = ledger.flattening_report();
  c.require(flat.verdict == Verdict::consistent_with_bounded,
            "factored index ledger graded " +
                std::string(to_string(flat.verdict)));
  return c;
}

// ---------------------------------------------------------------- C8 ----

Criterion quasi_power_exactness() {
  Criterion c;
  const Index N = 500;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    std::vector<double> values = random_values(seed, 501, 0.05, 5.0);
    LazySequence X = LazySequence::from_values(values, 1);
    const double sigma = 0.05 + 0.045 * double(seed % 19);
    const double beta = 0.5 * double(seed % 4);
    QuasiPowerCheck fast = quasi_f_power_check(X, sigma, beta, N);
    double brute = 0.0;
    for (Index n = 2; n <= N; ++n) {
      const double fxn = quasi_power_weight(n, sigma, beta) * X[n];
      for (Index m = 2; m <= n; ++m) {
        brute = std::max(brute,
                         quasi_power_weight(m, sigma, beta) * X[m] / fxn);
      }
    }
    c.require(fast.k_min == brute,
              "seed " + std::to_string(seed) + ": running-max K " +
                  std::to_string(fast.k_min) + " != brute force " +
                  std::to_string(brute));
  }
  return c;
}

struct Entry {
  const char* id;
  const char* label;
  std::function<Criterion()> run;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Entry> entries{
      {"C1", "reduction equivalence of the three indices", reduction_equivalence, 10.0},
      {"C2", "companion closed forms for weighted means", companion_closed_forms, 0.0},
      {"C3", "decomposition identity residuals", decomposition_identity, 60.0},
      {"C4", "column-difference identity and bounds", column_difference_lemma, 0.0},
      {"C5", "order-alpha index form equality", cesaro_identity, 0.0},
      {"C6", "desk verification of the factor theorem", desk_verification, 0.0},
      {"C7", "fourier series end to end", fourier_end_to_end, 120.0},
      {"C8", "quasi-power constant exactness", quasi_power_exactness, 0.0},
  };
  int failures = 0;
  for (const Entry& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    Criterion result;
    try {
      result = entry.run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (entry.budget_seconds > 0.0 && seconds > entry.budget_seconds) {
      result.pass = false;
      result.detail = "runtime " + std::to_string(seconds) +
                      "s exceeds the budget of " +
                      std::to_string(entry.budget_seconds) + "s";
    }
    if (result.pass) {
      std::printf("[PASS] %s: %s (%.2fs)\n", entry.id, entry.label, seconds);
    } else {
      ++failures;
      std::printf("[FAIL] %s: %s (%.2fs) -- %s\n", entry.id, entry.label,
                  seconds, result.detail.c_str());
    }
  }
  return failures;
}
