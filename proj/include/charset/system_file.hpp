#pragma once

// Text format for polynomial systems:
//
//   # comment
//   vars: w x y z          (ascending order, w < x < y < z)
//   x^2 + y^2 + z^2 - w^2
//   x*y + z^2 - 1
//
// Expressions use + - * ^ and parentheses over integer literals and the
// declared variables; exponents are non-negative integer literals.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "charset/poly.hpp"

namespace charset {

struct PolynomialSystem {
  VariableOrder order;
  std::vector<Polynomial> polynomials;
};

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, std::size_t line, std::size_t column0, const VariableOrder& order)
      : s_(text), line_(line), col0_(column0), order_(order) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ >= s_.size()) fail("empty expression");
    Polynomial p = expr();
    skipSpace();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  std::size_t n() const { return order_.size(); }
  std::size_t column() const { return col0_ + pos_; }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, column(), msg); }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skipSpace();
      if (pos_ < s_.size() && s_[pos_] == '/') throw NonIntegerCoefficient(line_, column());
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skipSpace();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      return pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skipSpace();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        throw NonIntegerCoefficient(line_, col0_ + start);
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        fail("juxtaposition is not allowed; use '*'");
      return Polynomial::constant(n(), mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (c == '.') throw NonIntegerCoefficient(line_, column());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = order_.index(name);
      if (!idx) throw UndeclaredVariable(line_, col0_ + start, name);
      return Polynomial::variable(n(), *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
  const VariableOrder& order_;
};

inline std::string_view stripComment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline bool blank(std::string_view s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

/// Parses a single expression under the given order (line 1, column 1).
inline Polynomial parsePolynomial(std::string_view text, const VariableOrder& order) {
  return detail::ExpressionParser(text, 1, 1, order).parse();
}

inline PolynomialSystem parseSystem(std::string_view text) {
  std::optional<VariableOrder> order;
  std::vector<Polynomial> polys;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = detail::stripComment(text.substr(start, end - start));
    ++lineNo;
    start = end + 1;
    if (detail::blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    if (!order) {
      std::size_t i = 0;
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (line.substr(i, 5) != "vars:") throw SyntaxError(lineNo, i + 1, "expected 'vars:' declaration");
      std::istringstream names(std::string(line.substr(i + 5)));
      std::vector<std::string> vars;
      for (std::string v; names >> v;) {
        bool ok = std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_';
        for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw SyntaxError(lineNo, i + 1, "invalid variable name '" + v + "'");
        vars.push_back(v);
      }
      if (vars.empty()) throw SyntaxError(lineNo, i + 1, "no variables declared");
      try {
        order.emplace(std::move(vars));
      } catch (const InvalidArgument& e) {
        throw SyntaxError(lineNo, i + 1, e.what());
      }
    } else {
      polys.push_back(detail::ExpressionParser(line, lineNo, 1, *order).parse());
    }
    if (end == text.size()) break;
  }
  if (!order) throw SyntaxError(lineNo == 0 ? 1 : lineNo, 1, "missing 'vars:' declaration");
  return PolynomialSystem{std::move(*order), std::move(polys)};
}

/// Monomial as "w^2*x^3*y" (variables in ascending order); "1" for the unit.
inline std::string renderMonomial(const Monomial& m, const VariableOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += order.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Terms in descending lex order, e.g. "x^2*y - 3*z + 1".
inline std::string renderPolynomial(const Polynomial& p, const VariableOrder& order) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const mpz_class mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.isOne()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += renderMonomial(t.monomial, order);
    } else {
      out += mag.get_str() + '*' + renderMonomial(t.monomial, order);
    }
  }
  return out;
}

inline std::string renderSystem(const PolynomialSystem& sys) {
  std::string out = "vars:";
  for (const auto& n : sys.order.names()) out += ' ' + n;
  out += '\n';
  for (const auto& p : sys.polynomials) out += renderPolynomial(p, sys.order) + '\n';
  return out;
}

}  // namespace charset
