/* SPDX-License-Identifier: Apache-2.0 */

#include "certeuler/expr.hpp"

#include <algorithm>
#include <cctype>

namespace certeuler {

Expr Expr::constant(Rational v) {
  Expr e;
  e.kind = Kind::constant;
  e.value = std::move(v);
  return e;
}

Expr Expr::var(std::size_t index) {
  Expr e;
  e.kind = Kind::variable;
  e.variable = index;
  return e;
}

Expr Expr::unary(Kind kind, Expr a) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(a));
  return e;
}

Expr Expr::binary(Kind kind, Expr a, Expr b) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(a));
  e.args.push_back(std::move(b));
  return e;
}

Expr Expr::power(Expr a, std::uint32_t k) {
  Expr e = unary(Kind::pow, std::move(a));
  e.exponent = k;
  return e;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, const ParseLimits& limits)
      : text_(text), n_(n), limits_(limits) {}

  RhsExpr parse_system() {
    RhsExpr out;
    out.push_back(parse_component());
    while (peek() == ';') {
      ++pos_;
      out.push_back(parse_component());
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (out.size() != n_) {
      fail("expected " + std::to_string(n_) + " component expression(s), found " +
           std::to_string(out.size()));
    }
    return out;
  }

 private:
  Expr parse_component() {
    const std::size_t start = pos_;
    Expr e = parse_expr(0);
    if (node_count(e) > limits_.max_nodes) {
      fail_at(start, "expression exceeds " + std::to_string(limits_.max_nodes) + " nodes");
    }
    return e;
  }

  Expr parse_expr(std::size_t level) {
    guard(level);
    Expr lhs = parse_term(level + 1);
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      Expr rhs = parse_term(level + 1);
      lhs = Expr::binary(c == '+' ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs),
                         std::move(rhs));
    }
  }

  Expr parse_term(std::size_t level) {
    guard(level);
    Expr lhs = parse_unary(level + 1);
    while (peek() == '*') {
      ++pos_;
      lhs = Expr::binary(Expr::Kind::mul, std::move(lhs), parse_unary(level + 1));
    }
    return lhs;
  }

  Expr parse_unary(std::size_t level) {
    guard(level);
    if (peek() == '-') {
      ++pos_;
      return Expr::unary(Expr::Kind::negate, parse_unary(level + 1));
    }
    return parse_power(level + 1);
  }

  Expr parse_power(std::size_t level) {
    guard(level);
    Expr base = parse_primary(level + 1);
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be a non-negative integer");
    }
    BigInt k{std::string(read_digits())};
    if (peek() == '/' || peek() == '.') fail("exponent must be a non-negative integer");
    if (k > limits_.max_exponent) {
      fail_at(start, "exponent exceeds " + std::to_string(limits_.max_exponent));
    }
    return Expr::power(std::move(base), static_cast<std::uint32_t>(k.get_ui()));
  }

  Expr parse_primary(std::size_t level) {
    guard(level);
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr(level + 1);
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num{std::string(read_digits())};
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected denominator after '/'");
        }
        const std::size_t at = pos_;
        BigInt den{std::string(read_digits())};
        if (den == 0) fail_at(at, "zero denominator");
        return Expr::constant(Rational(std::move(num), std::move(den)));
      }
      return Expr::constant(Rational(std::move(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "t") return Expr::var(0);
      if (name.size() > 1 && name[0] == 'x' &&
          std::all_of(name.begin() + 1, name.end(),
                      [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }) &&
          name[1] != '0') {
        std::size_t index = std::stoul(std::string(name.substr(1)));
        if (index >= 1 && index <= n_) return Expr::var(index);
      }
      fail_at(start, "unknown variable '" + std::string(name) + "' (expected t or x1..x" +
                         std::to_string(n_) + ")");
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void guard(std::size_t level) {
    if (level > limits_.max_depth * 4) fail("expression nested too deeply");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t n_;
  ParseLimits limits_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 1;
    case Expr::Kind::mul: return 2;
    case Expr::Kind::negate: return 3;
    case Expr::Kind::pow: return 4;
    case Expr::Kind::constant: return e.value.sign() < 0 ? 3 : 5;
    case Expr::Kind::variable: return 5;
  }
  return 0;
}

std::string wrap(const Expr& e, bool parens) {
  return parens ? "(" + to_string(e) + ")" : to_string(e);
}

bool is_const(const Expr& e, const Rational& v) {
  return e.kind == Expr::Kind::constant && e.value == v;
}

Expr fold_add(Expr a, Expr b) {
  if (a.kind == Expr::Kind::constant && b.kind == Expr::Kind::constant) {
    return Expr::constant(a.value + b.value);
  }
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  return Expr::binary(Expr::Kind::add, std::move(a), std::move(b));
}

Expr fold_neg(Expr a) {
  if (a.kind == Expr::Kind::constant) return Expr::constant(-a.value);
  return Expr::unary(Expr::Kind::negate, std::move(a));
}

Expr fold_sub(Expr a, Expr b) {
  if (a.kind == Expr::Kind::constant && b.kind == Expr::Kind::constant) {
    return Expr::constant(a.value - b.value);
  }
  if (is_const(b, 0)) return a;
  if (is_const(a, 0)) return fold_neg(std::move(b));
  return Expr::binary(Expr::Kind::sub, std::move(a), std::move(b));
}

Expr fold_mul(Expr a, Expr b) {
  if (a.kind == Expr::Kind::constant && b.kind == Expr::Kind::constant) {
    return Expr::constant(a.value * b.value);
  }
  if (is_const(a, 0) || is_const(b, 0)) return Expr::constant(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  return Expr::binary(Expr::Kind::mul, std::move(a), std::move(b));
}

Rational rational_pow(Rational base, std::uint32_t k) {
  Rational out(1);
  while (k > 0) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return out;
}

}  // namespace

RhsExpr parse_rhs(std::string_view text, std::size_t n, const ParseLimits& limits) {
  if (n == 0) throw std::invalid_argument("system dimension must be >= 1");
  bool blank = std::all_of(text.begin(), text.end(),
                           [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (blank) throw ParseError("empty expression", 1, 1);
  RhsExpr out = Parser(text, n, limits).parse_system();
  for (const auto& e : out) {
    if (depth(e) > limits.max_depth) {
      throw ParseError("expression deeper than " + std::to_string(limits.max_depth), 1, 1);
    }
  }
  return out;
}

std::string to_string(const Expr& e) {
  const int prec = precedence(e);
  switch (e.kind) {
    case Expr::Kind::constant:
      return e.value.sign() < 0 ? "-" + abs(e.value).to_string() : e.value.to_string();
    case Expr::Kind::variable: return e.variable == 0 ? "t" : "x" + std::to_string(e.variable);
    case Expr::Kind::negate: return "-" + wrap(e.args[0], precedence(e.args[0]) < prec);
    case Expr::Kind::pow:
      return wrap(e.args[0], precedence(e.args[0]) <= prec) + "^" + std::to_string(e.exponent);
    case Expr::Kind::add:
    case Expr::Kind::sub:
    case Expr::Kind::mul: {
      const char* op = e.kind == Expr::Kind::add ? " + " : e.kind == Expr::Kind::sub ? " - " : " * ";
      return wrap(e.args[0], precedence(e.args[0]) < prec) + op +
             wrap(e.args[1], precedence(e.args[1]) <= prec);
    }
  }
  return {};
}

std::string to_string(const RhsExpr& rhs) {
  std::string out;
  for (std::size_t i = 0; i < rhs.size(); ++i) out += (i ? "; " : "") + to_string(rhs[i]);
  return out;
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& a : e.args) n += node_count(a);
  return n;
}

std::size_t depth(const Expr& e) {
  std::size_t d = 0;
  for (const auto& a : e.args) d = std::max(d, depth(a));
  return d + 1;
}

Rational evaluate(const Expr& e, std::span<const Rational> point) {
  switch (e.kind) {
    case Expr::Kind::constant: return e.value;
    case Expr::Kind::variable: return point[e.variable];
    case Expr::Kind::negate: return -evaluate(e.args[0], point);
    case Expr::Kind::add: return evaluate(e.args[0], point) + evaluate(e.args[1], point);
    case Expr::Kind::sub: return evaluate(e.args[0], point) - evaluate(e.args[1], point);
    case Expr::Kind::mul: return evaluate(e.args[0], point) * evaluate(e.args[1], point);
    case Expr::Kind::pow: return rational_pow(evaluate(e.args[0], point), e.exponent);
  }
  return {};
}

Expr differentiate(const Expr& e, std::size_t variable) {
  switch (e.kind) {
    case Expr::Kind::constant: return Expr::constant(0);
    case Expr::Kind::variable: return Expr::constant(e.variable == variable ? 1 : 0);
    case Expr::Kind::negate: return fold_neg(differentiate(e.args[0], variable));
    case Expr::Kind::add:
      return fold_add(differentiate(e.args[0], variable), differentiate(e.args[1], variable));
    case Expr::Kind::sub:
      return fold_sub(differentiate(e.args[0], variable), differentiate(e.args[1], variable));
    case Expr::Kind::mul:
      return fold_add(fold_mul(differentiate(e.args[0], variable), e.args[1]),
                      fold_mul(e.args[0], differentiate(e.args[1], variable)));
    case Expr::Kind::pow: {
      if (e.exponent == 0) return Expr::constant(0);
      Expr inner = differentiate(e.args[0], variable);
      Expr reduced = e.exponent == 1 ? Expr::constant(1) : e.exponent == 2 ? e.args[0]
                                                                           : Expr::power(e.args[0], e.exponent - 1);
      return fold_mul(fold_mul(Expr::constant(Rational(static_cast<long>(e.exponent))),
                               std::move(reduced)),
                      std::move(inner));
    }
  }
  return Expr::constant(0);
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval pow(const Interval& a, std::uint32_t k) {
  if (k == 0) return {Rational(1), Rational(1)};
  Rational lo = rational_pow(a.lo, k);
  Rational hi = rational_pow(a.hi, k);
  if (k % 2 == 1) return {lo, hi};
  if (a.lo.sign() >= 0) return {lo, hi};
  if (a.hi.sign() <= 0) return {hi, lo};
  return {Rational(0), max(lo, hi)};
}

Interval enclose(const Expr& e, std::span<const Interval> box) {
  switch (e.kind) {
    case Expr::Kind::constant: return {e.value, e.value};
    case Expr::Kind::variable: return box[e.variable];
    case Expr::Kind::negate: return -enclose(e.args[0], box);
    case Expr::Kind::add: return enclose(e.args[0], box) + enclose(e.args[1], box);
    case Expr::Kind::sub: return enclose(e.args[0], box) - enclose(e.args[1], box);
    case Expr::Kind::mul: return enclose(e.args[0], box) * enclose(e.args[1], box);
    case Expr::Kind::pow: return pow(enclose(e.args[0], box), e.exponent);
  }
  return {};
}

}  // namespace certeuler
