#pragma once

// Admissible reductions: each maps a reductend p and a reductor q to a pair
// [r1, r2] lying in the ideal <p, q>. UG, SD, D and SC lower p in the
// refinement order; P and SP do so when lv(p) = lv(q) and otherwise lower
// only the degree of p in lv(q).

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "charset/order.hpp"
#include "charset/poly.hpp"
#include "charset/prs.hpp"

namespace charset {

enum class ReductionKind { UG, P, SP, SD, D, SC };

inline std::string_view toString(ReductionKind k) {
  switch (k) {
    case ReductionKind::UG: return "UG";
    case ReductionKind::P: return "P";
    case ReductionKind::SP: return "SP";
    case ReductionKind::SD: return "SD";
    case ReductionKind::D: return "D";
    case ReductionKind::SC: return "SC";
  }
  return "?";
}

/// denominator * target = sum_i cofactors[i] * basis[i], exactly.
struct LinearCombination {
  std::vector<Polynomial> cofactors;
  mpz_class denominator = 1;

  static LinearCombination unit(std::size_t nvars, std::size_t size, std::size_t index) {
    LinearCombination c;
    c.cofactors.assign(size, Polynomial(nvars));
    c.cofactors.at(index) = Polynomial::constant(nvars, 1);
    return c;
  }

  static LinearCombination zero(std::size_t nvars, std::size_t size) {
    LinearCombination c;
    c.cofactors.assign(size, Polynomial(nvars));
    return c;
  }

  /// Combination for target / k.
  LinearCombination dividedBy(const mpz_class& k) const {
    LinearCombination c = *this;
    c.denominator *= k;
    if (c.denominator < 0) {
      c.denominator = -c.denominator;
      for (auto& f : c.cofactors) f = -f;
    }
    c.simplify();
    return c;
  }

  void simplify() {
    mpz_class g = denominator;
    for (const auto& f : cofactors) {
      if (g == 1) break;
      mpz_class cf = f.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cf.get_mpz_t());
    }
    if (g > 1) {
      denominator /= g;
      for (auto& f : cofactors) f = f.divExact(g);
    }
  }

  /// Re-expands the combination against the basis.
  Polynomial expand(std::span<const Polynomial> basis) const {
    if (basis.size() != cofactors.size()) throw InvalidArgument("combination arity mismatch");
    Polynomial s(basis.empty() ? 0 : basis[0].nvars());
    for (std::size_t i = 0; i < basis.size(); ++i) s += cofactors[i] * basis[i];
    return s;
  }

  bool certifies(const Polynomial& target, std::span<const Polynomial> basis) const {
    return expand(basis) == target * denominator;
  }
};

/// Combination for alpha * A + beta * B given combinations for A and B over
/// the same basis.
inline LinearCombination combine(const Polynomial& alpha, const LinearCombination& a, const Polynomial& beta,
                                 const LinearCombination& b) {
  if (a.cofactors.size() != b.cofactors.size()) throw InvalidArgument("combination arity mismatch");
  LinearCombination c;
  c.denominator = a.denominator * b.denominator;
  c.cofactors.reserve(a.cofactors.size());
  const Polynomial aScale = alpha * b.denominator;
  const Polynomial bScale = beta * a.denominator;
  for (std::size_t i = 0; i < a.cofactors.size(); ++i)
    c.cofactors.push_back(aScale * a.cofactors[i] + bScale * b.cofactors[i]);
  c.simplify();
  return c;
}

/// Cofactors expressing r1 and r2 over the pair (p, q).
struct ReductionCertificate {
  LinearCombination first;
  LinearCombination second;
};

struct ReductionRest {
  Polynomial r1;
  Polynomial r2;
  bool bFlag = false;
  std::optional<ReductionCertificate> certificate;
};

namespace detail {

// Lex-largest term of p whose monomial is divisible by lt(q).
inline std::optional<Term> divisibleTerm(const Polynomial& p, const Polynomial& q) {
  const Monomial& lt = q.leadingTerm().monomial;
  for (const auto& t : p.terms())
    if (lt.divides(t.monomial)) return t;
  return std::nullopt;
}

inline bool univariateSameVariable(const Polynomial& p, const Polynomial& q) {
  if (p.isConstant() || q.isConstant()) return false;
  const std::size_t v = *p.leadingVariable();
  return p.isUnivariateIn(v) && q.isUnivariateIn(v);
}

}  // namespace detail

/// Predicate under which rem(p, q, kind) reduces p instead of echoing the pair.
inline bool isDReducible(const Polynomial& p, const Polynomial& q, ReductionKind kind) {
  if (p.isConstant() || q.isConstant()) return false;
  switch (kind) {
    case ReductionKind::UG:
      return detail::univariateSameVariable(p, q);
    case ReductionKind::P:
    case ReductionKind::SP:
      return !isReduced(p, q);
    case ReductionKind::SD:
    case ReductionKind::D:
      return detail::divisibleTerm(p, q).has_value();
    case ReductionKind::SC:
      return p.leadingVariable() == q.leadingVariable() && p.leadingDegree() >= q.leadingDegree();
  }
  return false;
}

namespace detail {

struct OneStepDivision {
  Polynomial rest;  // pMul * p - qMul * q, not normalized
  mpz_class pMul;
  Polynomial qMul;
};

// Fraction-free one-step division on term t of p by q:
// (lc(q)/g) p - (c/g) (m/lt(q)) q with g = gcd(c, lc(q)).
inline OneStepDivision oneStepDivide(const Polynomial& p, const Polynomial& q, const Term& t) {
  const Term& lq = q.leadingTerm();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), t.coeff.get_mpz_t(), lq.coeff.get_mpz_t());
  OneStepDivision d;
  d.pMul = lq.coeff / g;
  d.qMul = Polynomial::term(t.monomial / lq.monomial, t.coeff / g);
  d.rest = p * d.pMul - d.qMul * q;
  return d;
}

// Extended Euclid for univariate polynomials in the same variable:
// returns g = gcd(p, q) normalized together with its combination over (p, q).
inline std::pair<Polynomial, LinearCombination> extendedGcd(const Polynomial& p, const Polynomial& q,
                                                            std::size_t x) {
  const std::size_t n = p.nvars();
  Polynomial r0 = p, r1 = q;
  LinearCombination c0 = LinearCombination::unit(n, 2, 0);
  LinearCombination c1 = LinearCombination::unit(n, 2, 1);
  while (!r1.isZero()) {
    Polynomial quo(n);
    auto [rem, s] = pseudoRemainder(r0, r1, x, &quo);
    // rem = ini^s r0 - quo r1
    LinearCombination c2 = combine(pow(r1.leadingCoefficient(x), s), c0, -quo, c1);
    mpz_class k = rem.content();
    if (!rem.isZero() && rem.leadingTerm().coeff < 0) k = -k;
    if (!rem.isZero()) {
      rem = rem.divExact(k);
      c2 = c2.dividedBy(k);
    }
    r0 = std::move(r1);
    c0 = std::move(c1);
    r1 = std::move(rem);
    c1 = std::move(c2);
  }
  mpz_class k = r0.content();
  if (r0.leadingTerm().coeff < 0) k = -k;
  return {r0.divExact(k), c0.dividedBy(k)};
}

inline LinearCombination normalizedCombination(const Polynomial& raw, LinearCombination c) {
  if (raw.isZero()) return LinearCombination::zero(raw.nvars(), c.cofactors.size());
  mpz_class k = raw.content();
  if (raw.leadingTerm().coeff < 0) k = -k;
  return k == 1 ? c : c.dividedBy(k);
}

inline ReductionRest computeRest(const Polynomial& p, const Polynomial& q, ReductionKind kind, bool wantCertificate) {
  const std::size_t n = p.nvars();
  ReductionRest out;
  auto echo = [&] {
    out.r1 = p;
    out.r2 = q;
    if (wantCertificate)
      out.certificate = ReductionCertificate{LinearCombination::unit(n, 2, 0), LinearCombination::unit(n, 2, 1)};
    return out;
  };
  const LinearCombination keepQ = normalizedCombination(q, LinearCombination::unit(n, 2, 1));
  const Polynomial qn = normalize(q);

  switch (kind) {
    case ReductionKind::UG: {
      if (!univariateSameVariable(p, q)) return echo();
      out.r1 = Polynomial(n);
      out.bFlag = true;
      if (wantCertificate) {
        auto [g, comb] = extendedGcd(p, q, *p.leadingVariable());
        out.r2 = std::move(g);
        out.certificate = ReductionCertificate{LinearCombination::zero(n, 2), std::move(comb)};
      } else {
        out.r2 = gcd(p, q);
      }
      return out;
    }
    case ReductionKind::P: {
      const std::size_t x = *q.leadingVariable();
      Polynomial quo(n);
      auto [rem, s] = pseudoRemainder(p, q, x, &quo);
      out.r1 = normalize(rem);
      out.r2 = qn;
      out.bFlag = q.initial().isConstant() || s == 0;
      if (wantCertificate) {
        auto c = combine(pow(q.initial(), s), LinearCombination::unit(n, 2, 0), -quo, LinearCombination::unit(n, 2, 1));
        out.certificate = ReductionCertificate{normalizedCombination(rem, std::move(c)), keepQ};
      }
      return out;
    }
    case ReductionKind::SP: {
      if (isReduced(p, q)) return echo();
      SpremResult sp = sprem(p, q);
      out.r1 = normalize(sp.rest);
      out.r2 = qn;
      out.bFlag = sp.fMul.isConstant();
      if (wantCertificate) {
        Polynomial gq = -sp.gMul.mulMonomial(Monomial::variable(n, sp.var, sp.shift));
        auto c = combine(sp.fMul, LinearCombination::unit(n, 2, 0), gq, LinearCombination::unit(n, 2, 1));
        out.certificate = ReductionCertificate{normalizedCombination(sp.rest, std::move(c)), keepQ};
      }
      return out;
    }
    case ReductionKind::SD:
    case ReductionKind::D: {
      auto t = divisibleTerm(p, q);
      if (!t) return echo();
      Polynomial r = p;
      LinearCombination c = LinearCombination::unit(n, 2, 0);
      do {
        OneStepDivision d = oneStepDivide(r, q, *t);
        if (wantCertificate) c = combine(Polynomial::constant(n, d.pMul), c, -d.qMul, LinearCombination::unit(n, 2, 1));
        if (wantCertificate) c = normalizedCombination(d.rest, std::move(c));
        r = normalize(d.rest);
        if (kind == ReductionKind::SD || r.isZero()) break;
        t = divisibleTerm(r, q);
      } while (t);
      out.r1 = std::move(r);
      out.r2 = qn;
      out.bFlag = true;
      if (wantCertificate) out.certificate = ReductionCertificate{std::move(c), keepQ};
      return out;
    }
    case ReductionKind::SC: {
      if (!isDReducible(p, q, ReductionKind::SC)) return echo();
      if (wantCertificate) throw Unsupported("certificates are not available for the SC reduction");
      const std::size_t x = *q.leadingVariable();
      SubresultantSequence seq = subresultantSequence(p, q, x);
      const Polynomial& last = seq.elements.back();
      if (last.degree(x) > 0) {
        out.r1 = Polynomial(n);
        out.r2 = normalize(last);
      } else {
        out.r1 = normalize(last);
        out.r2 = normalize(seq.elements[seq.elements.size() - 2]);
      }
      out.bFlag = false;
      return out;
    }
  }
  return echo();
}

}  // namespace detail

/// Reduction-rest [r1, r2] of p by q; non-reducible inputs come back as [p, q].
inline ReductionRest rem(const Polynomial& p, const Polynomial& q, ReductionKind kind) {
  if (p.isConstant() || q.isConstant()) throw ConstantReductor();
  ReductionRest r = detail::computeRest(p, q, kind, false);
  r.bFlag = false;
  return r;
}

/// Like rem, with bFlag set when p and q lie in the ideal <r1, r2>.
inline ReductionRest remPlus(const Polynomial& p, const Polynomial& q, ReductionKind kind) {
  if (p.isConstant() || q.isConstant()) throw ConstantReductor();
  return detail::computeRest(p, q, kind, false);
}

/// remPlus together with explicit cofactors over (p, q). Not available for SC.
inline ReductionRest remWithCertificate(const Polynomial& p, const Polynomial& q, ReductionKind kind) {
  if (kind == ReductionKind::SC) throw Unsupported("certificates are not available for the SC reduction");
  if (p.isConstant() || q.isConstant()) throw ConstantReductor();
  return detail::computeRest(p, q, kind, true);
}

}  // namespace charset
