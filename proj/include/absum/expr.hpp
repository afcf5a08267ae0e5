// SPDX-License-Identifier: Apache-2.0
//
// The sequence-family expression grammar used by experiment configs:
//
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' factor)?          (right associative)
//   primary := number | 'n' | 'pi' | 'e' | name '(' expr {',' expr} ')'
//            | '(' expr ')'
//
// with functions log (natural), exp, sin, cos, sqrt, abs, floor, pow, min,
// max.  Alternating families are written (-1)^n (integral exponents of
// negative bases follow IEEE pow).

#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "absum/sequence.hpp"

namespace absum::expr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " +
                           std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

enum class Op : std::uint8_t {
  constant, variable,
  add, sub, mul, div, pow_op, neg,
  log_fn, exp_fn, sin_fn, cos_fn, sqrt_fn, abs_fn, floor_fn,
  pow_fn, min_fn, max_fn
};

struct Node {
  Op op = Op::constant;
  double value = 0.0;
  int left = -1;
  int right = -1;
};

}  // namespace detail

/// A parsed expression in one variable n.
class Compiled {
 public:
  double eval(double n) const { return eval_node(root_, n); }
  const std::string& source() const { return source_; }

 private:
  friend Compiled parse(const std::string&);

  double eval_node(int index, double n) const {
    using detail::Op;
    const detail::Node& node = nodes_[static_cast<std::size_t>(index)];
    switch (node.op) {
      case Op::constant: return node.value;
      case Op::variable: return n;
      case Op::add: return eval_node(node.left, n) + eval_node(node.right, n);
      case Op::sub: return eval_node(node.left, n) - eval_node(node.right, n);
      case Op::mul: return eval_node(node.left, n) * eval_node(node.right, n);
      case Op::div: return eval_node(node.left, n) / eval_node(node.right, n);
      case Op::pow_op:
      case Op::pow_fn:
        return std::pow(eval_node(node.left, n), eval_node(node.right, n));
      case Op::neg: return -eval_node(node.left, n);
      case Op::log_fn: return std::log(eval_node(node.left, n));
      case Op::exp_fn: return std::exp(eval_node(node.left, n));
      case Op::sin_fn: return std::sin(eval_node(node.left, n));
      case Op::cos_fn: return std::cos(eval_node(node.left, n));
      case Op::sqrt_fn: return std::sqrt(eval_node(node.left, n));
      case Op::abs_fn: return std::abs(eval_node(node.left, n));
      case Op::floor_fn: return std::floor(eval_node(node.left, n));
      case Op::min_fn:
        return std::min(eval_node(node.left, n), eval_node(node.right, n));
      case Op::max_fn:
        return std::max(eval_node(node.left, n), eval_node(node.right, n));
    }
    return 0.0;
  }

  std::vector<detail::Node> nodes_;
  int root_ = -1;
  std::string source_;
};

namespace detail {

class Parser {
 public:
  Parser(const std::string& text, std::vector<Node>& nodes)
      : text_(text), nodes_(nodes) {}

  int run() {
    const int root = parse_expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input '" + text_.substr(pos_) + "'",
                       pos_);
    return root;
  }

 private:
  int make(Op op, double value = 0.0, int left = -1, int right = -1) {
    nodes_.push_back({op, value, left, right});
    return static_cast<int>(nodes_.size()) - 1;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  int parse_expr() {
    int left = parse_term();
    while (true) {
      if (consume('+')) {
        left = make(Op::add, 0.0, left, parse_term());
      } else if (consume('-')) {
        left = make(Op::sub, 0.0, left, parse_term());
      } else {
        return left;
      }
    }
  }

  int parse_term() {
    int left = parse_factor();
    while (true) {
      if (consume('*')) {
        left = make(Op::mul, 0.0, left, parse_factor());
      } else if (consume('/')) {
        left = make(Op::div, 0.0, left, parse_factor());
      } else {
        return left;
      }
    }
  }

  int parse_factor() {
    if (consume('-')) return make(Op::neg, 0.0, parse_factor());
    return parse_power();
  }

  int parse_power() {
    const int base = parse_primary();
    if (consume('^')) return make(Op::pow_op, 0.0, base, parse_factor());
    return base;
  }

  int parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = text_.c_str() + pos_;
      char* end = nullptr;
      const double value = std::strtod(begin, &end);
      if (end == begin) throw ParseError("malformed number", pos_);
      pos_ += static_cast<std::size_t>(end - begin);
      return make(Op::constant, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (peek() == '(') return parse_call(name, start);
      if (name == "n") return make(Op::variable);
      if (name == "pi") return make(Op::constant, 3.14159265358979323846);
      if (name == "e") return make(Op::constant, 2.71828182845904523536);
      throw ParseError("unknown identifier '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_call(const std::string& name, std::size_t at) {
    struct Fn {
      const char* name;
      Op op;
      int arity;
    };
    static constexpr Fn kFunctions[] = {
        {"log", Op::log_fn, 1},   {"exp", Op::exp_fn, 1},
        {"sin", Op::sin_fn, 1},   {"cos", Op::cos_fn, 1},
        {"sqrt", Op::sqrt_fn, 1}, {"abs", Op::abs_fn, 1},
        {"floor", Op::floor_fn, 1}, {"pow", Op::pow_fn, 2},
        {"min", Op::min_fn, 2},   {"max", Op::max_fn, 2}};
    for (const Fn& fn : kFunctions) {
      if (name == fn.name) {
        if (!consume('(')) throw ParseError("expected '(' after function", pos_);
        const int first = parse_expr();
        int second = -1;
        if (fn.arity == 2) {
          if (!consume(',')) throw ParseError("function '" + name + "' takes two arguments", pos_);
          second = parse_expr();
        }
        if (!consume(')')) throw ParseError("expected ')'", pos_);
        return make(fn.op, 0.0, first, second);
      }
    }
    throw ParseError("unknown function '" + name + "'", at);
  }

  const std::string& text_;
  std::vector<Node>& nodes_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Compiled parse(const std::string& text) {
  Compiled compiled;
  compiled.source_ = text;
  detail::Parser parser(text, compiled.nodes_);
  compiled.root_ = parser.run();
  return compiled;
}

/// Evaluates the expression once at n.
inline double eval(const std::string& text, double n) {
  return parse(text).eval(n);
}

/// Wraps a parsed expression as a lazy sequence from the given start index.
inline LazySequence to_sequence(const std::string& text, Index start,
                                std::string name = "") {
  auto compiled = std::make_shared<Compiled>(parse(text));
  if (name.empty()) name = text;
  return LazySequence(
      start,
      [compiled](Index n) { return compiled->eval(static_cast<double>(n)); },
      std::move(name));
}

}  // namespace absum::expr
