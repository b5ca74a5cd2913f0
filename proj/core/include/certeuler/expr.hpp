/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

/**
 * @file expr.hpp
 * @brief Polynomial right-hand sides: parsing, printing, exact evaluation,
 * interval enclosure and symbolic differentiation.
 *
 * Grammar (whitespace insignificant):
 *
 *     system  := expr (';' expr)*
 *     expr    := term (('+' | '-') term)*
 *     term    := unary ('*' unary)*
 *     unary   := '-' unary | power
 *     power   := primary ('^' integer)?
 *     primary := rational | 't' | 'x' index | '(' expr ')'
 *     rational:= integer ('/' integer)?
 *
 * Variable 0 is the time t; variables 1..n are x1..xn.
 */

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "certeuler/rational.hpp"

namespace certeuler {

struct Expr {
  enum class Kind { constant, variable, negate, add, sub, mul, pow };

  Kind kind = Kind::constant;
  Rational value;            // constant
  std::size_t variable = 0;  // variable (0 = t)
  std::uint32_t exponent = 0;  // pow
  std::vector<Expr> args;

  static Expr constant(Rational v);
  static Expr var(std::size_t index);
  static Expr unary(Kind kind, Expr a);
  static Expr binary(Kind kind, Expr a, Expr b);
  static Expr power(Expr a, std::uint32_t k);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// One expression per state component.
using RhsExpr = std::vector<Expr>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseLimits {
  std::size_t max_depth = 64;
  std::size_t max_nodes = 10000;
  std::uint32_t max_exponent = 64;
};

/// Parses exactly n semicolon-separated components over t, x1..xn.
[[nodiscard]] RhsExpr parse_rhs(std::string_view text, std::size_t n, const ParseLimits& limits = {});

/// Infix form that parse_rhs reads back to the same tree.
[[nodiscard]] std::string to_string(const Expr& e);
[[nodiscard]] std::string to_string(const RhsExpr& rhs);

[[nodiscard]] std::size_t node_count(const Expr& e);
[[nodiscard]] std::size_t depth(const Expr& e);

/// Exact value at point = (t, x1, ..., xn).
[[nodiscard]] Rational evaluate(const Expr& e, std::span<const Rational> point);

/// d e / d variable, with constant folding.
[[nodiscard]] Expr differentiate(const Expr& e, std::size_t variable);

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  [[nodiscard]] Rational magnitude() const { return max(abs(lo), abs(hi)); }
  [[nodiscard]] bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

[[nodiscard]] Interval operator+(const Interval& a, const Interval& b);
[[nodiscard]] Interval operator-(const Interval& a, const Interval& b);
[[nodiscard]] Interval operator-(const Interval& a);
[[nodiscard]] Interval operator*(const Interval& a, const Interval& b);
[[nodiscard]] Interval pow(const Interval& a, std::uint32_t k);

/// Enclosure of e over the box (one interval per variable, time first).
[[nodiscard]] Interval enclose(const Expr& e, std::span<const Interval> box);

}  // namespace certeuler
