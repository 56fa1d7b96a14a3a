#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients. Variables are indexed 0..n-1 and ordered x_0 < ... < x_{n-1};
// terms are kept sorted descending under lex with x_{n-1} most significant.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "charset/errors.hpp"

namespace charset {

using Exponent = std::uint32_t;

class VariableOrder {
 public:
  explicit VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("variable order must not be empty");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(n).second) throw InvalidArgument("duplicate variable '" + n + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const VariableOrder&, const VariableOrder&) = default;

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t var, Exponent e = 1) {
    Monomial m(nvars);
    m.exps_.at(var) = e;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool isOne() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
  }

  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lex comparison, highest variable most significant.
  friend int lexCompare(const Monomial& a, const Monomial& b) {
    for (std::size_t i = a.exps_.size(); i-- > 0;) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  std::vector<Exponent> exps_;
};

struct Term {
  Monomial monomial;
  mpz_class coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.monomial == b.monomial && a.coeff == b.coeff;
  }
};

class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const mpz_class& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t var, Exponent e = 1) {
    Polynomial p(nvars);
    p.terms_.push_back({Monomial::variable(nvars, var, e), 1});
    return p;
  }

  static Polynomial term(const Monomial& m, const mpz_class& c) {
    Polynomial p(m.size());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from terms in any order; like monomials are combined
  /// and zero coefficients dropped.
  static Polynomial fromTerms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
      if (t.monomial.size() != nvars) throw InvalidArgument("monomial arity mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return lexCompare(a.monomial, b.monomial) > 0;
    });
    Polynomial p(nvars);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nops() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne()); }

  /// Heading term under lex. Requires a non-zero polynomial.
  const Term& leadingTerm() const { return terms_.front(); }

  Exponent degree(std::size_t var) const {
    Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  std::vector<Exponent> degrees() const {
    std::vector<Exponent> d(nvars_, 0);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], t.monomial[i]);
    return d;
  }

  /// Index of the leading variable; empty for constants. Since terms are
  /// sorted with the highest variable most significant, the heading term
  /// carries the leading variable.
  std::optional<std::size_t> leadingVariable() const {
    if (terms_.empty()) return std::nullopt;
    const auto& m = terms_.front().monomial;
    for (std::size_t i = nvars_; i-- > 0;)
      if (m[i] != 0) return i;
    return std::nullopt;
  }

  /// Class: 1-based index of the leading variable, 0 for constants.
  std::size_t cls() const {
    auto lv = leadingVariable();
    return lv ? *lv + 1 : 0;
  }

  Exponent leadingDegree() const {
    auto lv = leadingVariable();
    return lv ? terms_.front().monomial[*lv] : 0;
  }

  /// Coefficient of var^k, as a polynomial free of var.
  Polynomial coefficient(std::size_t var, Exponent k) const {
    Polynomial c(nvars_);
    for (const auto& t : terms_) {
      if (t.monomial[var] != k) continue;
      Monomial m = t.monomial;
      m[var] = 0;
      c.terms_.push_back({std::move(m), t.coeff});
    }
    // Dropping one exponent can reorder terms only when var is not the
    // most significant position that differs, so re-sort.
    c.sortTerms();
    return c;
  }

  Polynomial leadingCoefficient(std::size_t var) const { return coefficient(var, degree(var)); }

  Polynomial initial() const {
    auto lv = leadingVariable();
    if (!lv) return *this;
    return leadingCoefficient(*lv);
  }

  /// Dense coefficient list in var: result[k] is the coefficient of var^k.
  std::vector<Polynomial> coefficients(std::size_t var) const {
    std::vector<std::vector<Term>> buckets(degree(var) + 1);
    for (const auto& t : terms_) {
      Monomial m = t.monomial;
      Exponent k = m[var];
      m[var] = 0;
      buckets[k].push_back({std::move(m), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
      Polynomial c(nvars_);
      c.terms_ = std::move(b);
      c.sortTerms();
      out.push_back(std::move(c));
    }
    return out;
  }

  /// True when every term involves only var (and var actually occurs).
  bool isUnivariateIn(std::size_t var) const {
    if (isConstant()) return false;
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (i != var && t.monomial[i] != 0) return false;
    return true;
  }

  /// Non-negative gcd of the integer coefficients.
  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& t : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial operator+(const Polynomial& other) const { return combine(other, false); }
  Polynomial operator-(const Polynomial& other) const { return combine(other, true); }

  Polynomial operator*(const Polynomial& other) const {
    checkArity(other);
    if (isZero() || other.isZero()) return Polynomial(nvars_);
    if (other.terms_.size() == 1) return mulTerm(other.terms_[0]);
    if (terms_.size() == 1) return other.mulTerm(terms_[0]);
    // Each row long * t is already sorted; merge the rows pairwise.
    const Polynomial& shortP = terms_.size() <= other.terms_.size() ? *this : other;
    const Polynomial& longP = terms_.size() <= other.terms_.size() ? other : *this;
    std::vector<Polynomial> rows;
    rows.reserve(shortP.terms_.size());
    for (const auto& t : shortP.terms_) rows.push_back(longP.mulTerm(t));
    while (rows.size() > 1) {
      std::size_t out = 0;
      for (std::size_t i = 0; i < rows.size(); i += 2)
        rows[out++] = i + 1 < rows.size() ? rows[i].combine(rows[i + 1], false) : std::move(rows[i]);
      rows.resize(out);
    }
    return std::move(rows.front());
  }

  Polynomial operator*(const mpz_class& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Polynomial mulTerm(const Term& t) const {
    if (t.coeff == 0) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) r.terms_.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return r;
  }

  Polynomial mulMonomial(const Monomial& m) const { return mulTerm({m, 1}); }

  /// Divides every coefficient by c, which must divide each of them.
  Polynomial divExact(const mpz_class& c) const {
    Polynomial r(*this);
    for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void checkArity(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw InvalidArgument("polynomials over different variable orders");
  }

  void sortTerms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return lexCompare(a.monomial, b.monomial) > 0; });
  }

  Polynomial combine(const Polynomial& other, bool subtract) const {
    checkArity(other);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    auto i = terms_.begin();
    auto j = other.terms_.begin();
    while (i != terms_.end() || j != other.terms_.end()) {
      int c = i == terms_.end() ? -1 : j == other.terms_.end() ? 1 : lexCompare(i->monomial, j->monomial);
      if (c > 0) {
        r.terms_.push_back(*i++);
      } else if (c < 0) {
        r.terms_.push_back({j->monomial, subtract ? mpz_class(-j->coeff) : j->coeff});
        ++j;
      } else {
        mpz_class s = subtract ? mpz_class(i->coeff - j->coeff) : mpz_class(i->coeff + j->coeff);
        if (s != 0) r.terms_.push_back({i->monomial, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_;
  std::vector<Term> terms_;
};

inline Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

/// Primitive integer representative with positive lex-leading coefficient.
inline Polynomial normalize(const Polynomial& p) {
  if (p.isZero()) return p;
  mpz_class c = p.content();
  if (p.leadingTerm().coeff < 0) c = -c;
  return c == 1 ? p : p.divExact(c);
}

inline bool isNormalized(const Polynomial& p) {
  return p.isZero() || (p.content() == 1 && p.leadingTerm().coeff > 0);
}

/// Exact quotient a / b. Throws NotExact when b does not divide a in Z[x].
inline Polynomial exactDivide(const Polynomial& a, const Polynomial& b) {
  if (b.isZero()) throw ZeroDivisor();
  if (a.isZero()) return Polynomial(a.nvars());
  const Term& lb = b.leadingTerm();
  if (b.nops() == 1 && lb.monomial.isOne()) {
    for (const auto& t : a.terms())
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), lb.coeff.get_mpz_t())) throw NotExact();
    return a.divExact(lb.coeff);
  }
  std::vector<Term> quotient;
  Polynomial rest = a;
  while (!rest.isZero()) {
    const Term& lt = rest.leadingTerm();
    if (!lb.monomial.divides(lt.monomial) || !mpz_divisible_p(lt.coeff.get_mpz_t(), lb.coeff.get_mpz_t()))
      throw NotExact();
    Term q{lt.monomial / lb.monomial, 0};
    mpz_divexact(q.coeff.get_mpz_t(), lt.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
    rest -= b.mulTerm(q);
    quotient.push_back(std::move(q));
  }
  return Polynomial::fromTerms(a.nvars(), std::move(quotient));
}

enum class ArithKind { Add, Sub, Mul };
enum class Normalization { Raw, Normalized };

inline Polynomial arith(const Polynomial& a, const Polynomial& b, ArithKind kind,
                        Normalization mode = Normalization::Raw) {
  Polynomial r = kind == ArithKind::Add ? a + b : kind == ArithKind::Sub ? a - b : a * b;
  return mode == Normalization::Normalized ? normalize(r) : r;
}

namespace detail {

// Pseudo-remainder in var with the minimal number of multiplications by the
// initial of q. Returns the remainder and the multiplier count.
inline std::pair<Polynomial, unsigned> pseudoRemainder(const Polynomial& p, const Polynomial& q,
                                                       std::size_t var, Polynomial* quotient = nullptr) {
  if (q.isZero()) throw ZeroDivisor();
  const Exponent dq = q.degree(var);
  const Polynomial init = q.leadingCoefficient(var);
  Polynomial r = p;
  unsigned s = 0;
  if (quotient) *quotient = Polynomial(p.nvars());
  Exponent dr = r.degree(var);
  while (!r.isZero() && dr >= dq) {
    Polynomial lcr = r.leadingCoefficient(var);
    Polynomial shift = lcr.mulMonomial(Monomial::variable(p.nvars(), var, dr - dq));
    r = init * r - shift * q;
    if (quotient) *quotient = init * *quotient + shift;
    ++s;
    dr = r.degree(var);
  }
  return {std::move(r), s};
}

inline Polynomial gcdRec(const Polynomial& a, const Polynomial& b);

// Gcd over Q of the coefficients of p in var, normalized.
inline Polynomial contentIn(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& c : p.coefficients(var)) {
    if (c.isZero()) continue;
    g = g.isZero() ? normalize(c) : gcdRec(g, c);
    if (g.isConstant()) break;
  }
  return g;
}

inline Polynomial primitivePartIn(const Polynomial& p, std::size_t var) {
  return normalize(exactDivide(normalize(p), contentIn(p, var)));
}

// Normalized gcd over Q of two non-zero polynomials, by recursion on the
// highest variable with a primitive PRS.
inline Polynomial gcdRec(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  if (a.isConstant() || b.isConstant()) return Polynomial::constant(n, 1);
  const std::size_t v = std::max(*a.leadingVariable(), *b.leadingVariable());
  if (a.degree(v) == 0) return gcdRec(a, contentIn(b, v));
  if (b.degree(v) == 0) return gcdRec(contentIn(a, v), b);
  Polynomial ca = contentIn(a, v);
  Polynomial cb = contentIn(b, v);
  Polynomial c = gcdRec(ca, cb);
  Polynomial pa = normalize(exactDivide(normalize(a), ca));
  Polynomial pb = normalize(exactDivide(normalize(b), cb));
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Polynomial g(n);
  for (;;) {
    Polynomial r = pseudoRemainder(pa, pb, v).first;
    if (r.isZero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = Polynomial::constant(n, 1);
      break;
    }
    pa = std::move(pb);
    pb = primitivePartIn(r, v);
  }
  return normalize(c * primitivePartIn(g, v));
}

}  // namespace detail

/// Normalized greatest common divisor over Q; gcd(a, 0) = normalize(a).
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.isZero() && b.isZero()) throw ZeroInput("gcd");
  if (a.isZero()) return normalize(b);
  if (b.isZero()) return normalize(a);
  return detail::gcdRec(a, b);
}

inline mpq_class evaluate(const Polynomial& p, std::span<const mpq_class> point) {
  if (point.size() != p.nvars()) throw InvalidArgument("evaluation point has wrong arity");
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      mpq_class pw;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(point[i].get_mpq_t()), t.monomial[i]);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(point[i].get_mpq_t()), t.monomial[i]);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

inline std::size_t decimalDigits(const mpz_class& c) {
  mpz_class a = abs(c);
  return a.get_str(10).size();
}

/// Structural measurements of a polynomial. For the zero polynomial only
/// `zero` is meaningful.
struct Measure {
  bool zero = false;
  std::size_t cls = 0;
  std::optional<std::size_t> lv;
  Exponent ldeg = 0;
  Polynomial ini;
  std::vector<Exponent> degreeTuple;
  std::size_t nops = 0;
  Monomial leadMonomial;
  mpz_class leadCoeff;
  std::size_t maxDigits = 0;
};

inline Measure measure(const Polynomial& p) {
  Measure m;
  m.degreeTuple.assign(p.nvars(), 0);
  if (p.isZero()) {
    m.zero = true;
    m.ini = p;
    m.leadMonomial = Monomial(p.nvars());
    return m;
  }
  m.cls = p.cls();
  m.lv = p.leadingVariable();
  m.ldeg = p.leadingDegree();
  m.ini = p.initial();
  m.degreeTuple = p.degrees();
  m.nops = p.nops();
  m.leadMonomial = p.leadingTerm().monomial;
  m.leadCoeff = p.leadingTerm().coeff;
  for (const auto& t : p.terms()) m.maxDigits = std::max(m.maxDigits, decimalDigits(t.coeff));
  return m;
}

}  // namespace charset
