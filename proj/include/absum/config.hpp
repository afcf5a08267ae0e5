// SPDX-License-Identifier: Apache-2.0
//
// Declarative experiment configuration: TOML subset in, canonical TOML out,
// validation that names the offending field, and builders that resolve the
// named families against the sequence/method registries.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "absum/csv.hpp"
#include "absum/expr.hpp"
#include "absum/growth.hpp"
#include "absum/hypotheses.hpp"
#include "absum/methods.hpp"
#include "absum/periodic.hpp"
#include "absum/sequence.hpp"
#include "absum/tomlmini.hpp"
#include "absum/weights.hpp"

namespace absum::cli {

struct SeriesSpec {
  // expression: a_n = expr(n); c1-inverse: a_n recovered from the prescribed
  // order-one mean expr(n); table: terms from a CSV file; fourier: terms
  // C_n(x) of the named periodic function.
  std::string kind = "expression";
  std::string expr = "1/(n+1)^2";
  Index start = 1;
  std::string file;
  std::string function = "sawtooth";
  double x = 1.0;

  bool operator==(const SeriesSpec&) const = default;
};

struct ExperimentConfig {
  std::string name = "experiment";
  SeriesSpec series;
  std::string factor = "1/(n+1)";
  std::string majorant = "log(n+2)";
  std::string weights = "1";
  std::string method = "weighted_mean";
  double k = 1.0;
  double sigma = 0.5;
  double beta = 0.0;
  Index N = 1000;
  std::string variant = "quasi-f";
  std::vector<std::string> checks{"hypotheses", "index"};
  std::string out_dir = "reports";
  double quad_tol = 1e-10;

  bool operator==(const ExperimentConfig&) const = default;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> kChecks{
      "matrix-conditions", "hypotheses", "lemma",
      "index",             "decomposition", "fourier"};
  return kChecks;
}

// ----------------------------------------------------------- validation --

namespace detail {

inline void fail(const std::string& field, const std::string& message) {
  throw std::invalid_argument(field + ": " + message);
}

inline void check_expr(const std::string& field, const std::string& text) {
  try {
    (void)expr::parse(text);
  } catch (const expr::ParseError& err) {
    fail(field, std::string("invalid expression: ") + err.what());
  }
}

struct ParsedMethod {
  std::string kind;   // weighted_mean | cesaro | identity | custom
  std::string inner;  // weight expression or file
  double alpha = 1.0;
};

inline ParsedMethod parse_method_spec(const std::string& spec) {
  ParsedMethod out;
  const std::size_t open = spec.find('(');
  std::string head = spec;
  if (open != std::string::npos) {
    if (spec.back() != ')')
      throw std::invalid_argument("method: expected closing ')' in '" + spec + "'");
    head = spec.substr(0, open);
    out.inner = spec.substr(open + 1, spec.size() - open - 2);
  }
  out.kind = head;
  if (head == "cesaro") {
    if (out.inner.empty())
      throw std::invalid_argument("method: cesaro(alpha) needs an order");
    char* end = nullptr;
    out.alpha = std::strtod(out.inner.c_str(), &end);
    if (end != out.inner.c_str() + out.inner.size())
      throw std::invalid_argument("method: cannot parse cesaro order '" +
                                  out.inner + "'");
    if (!(out.alpha > 0.0 && out.alpha <= 1.0))
      throw std::invalid_argument(
          "method: cesaro order must lie in (0, 1], got " + out.inner);
  } else if (head == "weighted_mean") {
    if (!out.inner.empty()) check_expr("method", out.inner);
  } else if (head == "custom") {
    if (out.inner.empty())
      throw std::invalid_argument("method: custom(file) needs a CSV path");
  } else if (head != "identity") {
    throw std::invalid_argument(
        "method: unknown method '" + head +
        "' (expected weighted_mean, cesaro(alpha), identity, custom(file))");
  }
  return out;
}

}  // namespace detail

inline void validate(const ExperimentConfig& c) {
  using detail::fail;
  if (!(c.k >= 1.0))
    fail("parameters.k", "must be >= 1, got " + csv::format_double(c.k));
  if (!(c.sigma > 0.0 && c.sigma < 1.0))
    fail("parameters.sigma",
         "must lie in (0, 1), got " + csv::format_double(c.sigma));
  if (!(c.beta >= 0.0))
    fail("parameters.beta", "must be >= 0, got " + csv::format_double(c.beta));
  if (c.N < 2) fail("parameters.N", "must be >= 2, got " + std::to_string(c.N));
  if (c.variant != "almost-increasing" && c.variant != "quasi-sigma" &&
      c.variant != "quasi-f")
    fail("parameters.variant",
         "must be one of almost-increasing, quasi-sigma, quasi-f");

  if (c.series.kind == "expression" || c.series.kind == "c1-inverse") {
    detail::check_expr("series.expr", c.series.expr);
  } else if (c.series.kind == "table") {
    if (c.series.file.empty()) fail("series.file", "table series needs a CSV path");
  } else if (c.series.kind == "fourier") {
    const std::string& fn = c.series.function;
    const bool harmonic = fn.size() > 5 && fn.substr(0, 4) == "sin(" &&
                          fn.substr(fn.size() - 2) == "t)";
    if (fn != "sawtooth" && fn != "square" && fn != "triangle" &&
        fn != "custom" && !harmonic)
      fail("series.function",
           "unknown function '" + fn +
               "' (expected sawtooth, square, triangle, sin(mt), custom)");
    if (fn == "custom" && c.series.file.empty())
      fail("series.file", "custom function needs a sampled CSV path");
    if (!(c.series.x >= -3.14159265358979323846 &&
          c.series.x <= 3.14159265358979323846))
      fail("series.x", "evaluation point must lie in [-pi, pi]");
  } else {
    fail("series.kind", "unknown kind '" + c.series.kind +
                            "' (expected expression, c1-inverse, table, fourier)");
  }
  if (c.series.start != 0 && c.series.start != 1)
    fail("series.start", "must be 0 or 1");

  detail::check_expr("sequences.factor", c.factor);
  detail::check_expr("sequences.majorant", c.majorant);
  detail::check_expr("sequences.weights", c.weights);
  (void)detail::parse_method_spec(c.method);

  if (c.checks.empty()) fail("run.checks", "at least one check is required");
  for (const std::string& check : c.checks) {
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), check) == known.end())
      fail("run.checks", "unknown check '" + check + "'");
    if (check == "fourier" && c.series.kind != "fourier")
      fail("run.checks", "the fourier check needs series.kind = \"fourier\"");
  }
  const bool has_index =
      std::find(c.checks.begin(), c.checks.end(), "index") != c.checks.end();
  const bool has_fourier =
      std::find(c.checks.begin(), c.checks.end(), "fourier") != c.checks.end();
  if (has_index && has_fourier)
    fail("run.checks",
         "fourier already produces the index ledger; request one of the two");
  if (!(c.quad_tol > 0.0)) fail("run.quad_tol", "must be positive");
}

// ------------------------------------------------------------ rendering --

inline std::string render(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "name = \"" << toml::escape(c.name) << "\"\n\n";
  os << "[series]\n";
  os << "kind = \"" << toml::escape(c.series.kind) << "\"\n";
  if (c.series.kind == "expression" || c.series.kind == "c1-inverse") {
    os << "expr = \"" << toml::escape(c.series.expr) << "\"\n";
    os << "start = " << c.series.start << "\n";
  } else if (c.series.kind == "table") {
    os << "file = \"" << toml::escape(c.series.file) << "\"\n";
    os << "start = " << c.series.start << "\n";
  } else if (c.series.kind == "fourier") {
    os << "function = \"" << toml::escape(c.series.function) << "\"\n";
    if (c.series.function == "custom")
      os << "file = \"" << toml::escape(c.series.file) << "\"\n";
    os << "x = " << csv::format_double(c.series.x) << "\n";
  }
  os << "\n[sequences]\n";
  os << "factor = \"" << toml::escape(c.factor) << "\"\n";
  os << "majorant = \"" << toml::escape(c.majorant) << "\"\n";
  os << "weights = \"" << toml::escape(c.weights) << "\"\n";
  os << "\n[method]\n";
  os << "spec = \"" << toml::escape(c.method) << "\"\n";
  os << "\n[parameters]\n";
  os << "k = " << csv::format_double(c.k) << "\n";
  os << "sigma = " << csv::format_double(c.sigma) << "\n";
  os << "beta = " << csv::format_double(c.beta) << "\n";
  os << "N = " << c.N << "\n";
  os << "variant = \"" << toml::escape(c.variant) << "\"\n";
  os << "\n[run]\n";
  os << "checks = [";
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    if (i) os << ", ";
    os << '"' << toml::escape(c.checks[i]) << '"';
  }
  os << "]\n";
  os << "out = \"" << toml::escape(c.out_dir) << "\"\n";
  os << "quad_tol = " << csv::format_double(c.quad_tol) << "\n";
  return os.str();
}

// -------------------------------------------------------------- parsing --

inline ExperimentConfig parse_config(const std::string& text) {
  const toml::Table table = toml::parse(text);
  ExperimentConfig c;
  c.checks.clear();

  auto str = [&](const char* key, const std::string& fallback) {
    auto it = table.find(key);
    return it == table.end() ? fallback : it->second.as_string();
  };
  auto num = [&](const char* key, double fallback) {
    auto it = table.find(key);
    return it == table.end() ? fallback : it->second.as_number();
  };

  c.name = str("name", c.name);
  c.series.kind = str("series.kind", c.series.kind);
  c.series.expr = str("series.expr", c.series.expr);
  c.series.start = static_cast<Index>(num("series.start", 1));
  c.series.file = str("series.file", "");
  c.series.function = str("series.function", c.series.function);
  c.series.x = num("series.x", c.series.x);
  c.factor = str("sequences.factor", c.factor);
  c.majorant = str("sequences.majorant", c.majorant);
  c.weights = str("sequences.weights", c.weights);
  c.method = str("method.spec", c.method);
  c.k = num("parameters.k", c.k);
  c.sigma = num("parameters.sigma", c.sigma);
  c.beta = num("parameters.beta", c.beta);
  c.N = static_cast<Index>(num("parameters.N", static_cast<double>(c.N)));
  c.variant = str("parameters.variant", c.variant);
  if (auto it = table.find("run.checks"); it != table.end()) {
    for (const toml::Value& v : it->second.as_array())
      c.checks.push_back(v.as_string());
  } else {
    c.checks = {"hypotheses", "index"};
  }
  c.out_dir = str("run.out", c.out_dir);
  c.quad_tol = num("run.quad_tol", c.quad_tol);

  // Canonical form: fields foreign to the series kind stay at fixed values,
  // so parse(render(c)) is a fixpoint.
  if (c.series.kind == "fourier") {
    c.series.expr.clear();
    c.series.start = 1;
  } else {
    c.series.function = "sawtooth";
    c.series.x = 1.0;
  }
  if (c.series.kind != "table" && c.series.function != "custom")
    c.series.file.clear();
  return c;
}

// -------------------------------------------------------------- builders --

inline LazySequence build_expression_sequence(const std::string& text,
                                              Index start,
                                              const std::string& name) {
  return expr::to_sequence(text, start, name);
}

/// The series a_n of the experiment (all kinds except "fourier", which is
/// resolved by the runner because it needs the coefficient machinery).
inline LazySequence build_series(const SeriesSpec& spec) {
  if (spec.kind == "expression") {
    return build_expression_sequence(spec.expr, spec.start, spec.expr);
  }
  if (spec.kind == "c1-inverse") {
    LazySequence prescribed =
        build_expression_sequence(spec.expr, 1, "t:" + spec.expr);
    return c1_mean_invert(prescribed);
  }
  if (spec.kind == "table") {
    std::vector<double> values;
    for (const auto& row : csv::read_table(spec.file)) {
      for (double v : row) values.push_back(v);
    }
    return LazySequence::from_values(std::move(values), spec.start, spec.file);
  }
  throw std::invalid_argument("series.kind: cannot build '" + spec.kind +
                              "' here");
}

inline PeriodicFunction build_periodic(const SeriesSpec& spec) {
  const std::string& fn = spec.function;
  if (fn == "sawtooth") return PeriodicFunction::sawtooth();
  if (fn == "square") return PeriodicFunction::square();
  if (fn == "triangle") return PeriodicFunction::triangle();
  if (fn == "custom") return PeriodicFunction::from_csv(spec.file);
  // sin(mt)
  const int m = std::atoi(fn.c_str() + 4);
  return PeriodicFunction::harmonic(m == 0 ? 1 : m);
}

inline WeightSystem build_weights(const ExperimentConfig& c) {
  return make_weights(
      build_expression_sequence(c.weights, 0, "p:" + c.weights));
}

inline TriangularMethod build_method(const ExperimentConfig& c,
                                     const WeightSystem& w) {
  const detail::ParsedMethod parsed = detail::parse_method_spec(c.method);
  const Index budget = std::max<Index>(20000, c.N + 2);
  if (parsed.kind == "identity") return identity_method(budget);
  if (parsed.kind == "cesaro") return cesaro_method(parsed.alpha, budget);
  if (parsed.kind == "custom")
    return method_from_rows("custom(" + parsed.inner + ")",
                            csv::read_table(parsed.inner));
  if (parsed.inner.empty()) return weighted_mean_method(w, budget);
  WeightSystem own = make_weights(
      build_expression_sequence(parsed.inner, 0, "q:" + parsed.inner));
  return weighted_mean_method(own, budget);
}

inline HypothesisVariant build_variant(const ExperimentConfig& c) {
  if (c.variant == "almost-increasing")
    return HypothesisVariant::almost_increasing;
  if (c.variant == "quasi-sigma") return HypothesisVariant::quasi_sigma;
  return HypothesisVariant::quasi_f;
}

}  // namespace absum::cli
