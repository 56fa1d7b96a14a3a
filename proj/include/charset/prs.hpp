#pragma once

// Pseudo-division, one-step pseudo-division, the subresultant PRS and
// resultants (PRS-based and Sylvester-determinant based).

#include <optional>
#include <vector>

#include "charset/poly.hpp"
#include "charset/triangular_set.hpp"

namespace charset {

/// ini(q)^power * p = quotient * q + remainder.
struct PseudoDivisionResult {
  Polynomial remainder;
  Polynomial quotient;
  unsigned power = 0;
};

/// Pseudo-division of p by q in var. `power` is the number of
/// multiplications by the initial actually performed.
inline PseudoDivisionResult prem(const Polynomial& p, const Polynomial& q, std::size_t var) {
  if (q.isZero()) throw ZeroDivisor();
  PseudoDivisionResult r;
  auto [rem, s] = detail::pseudoRemainder(p, q, var, &r.quotient);
  r.remainder = std::move(rem);
  r.power = s;
  return r;
}

/// Classical pseudo-remainder with the full multiplier
/// lc(q,var)^(deg(p,var) - deg(q,var) + 1); zero when deg(p,var) < deg(q,var)
/// is not the case for this variant, which returns p unchanged then.
inline Polynomial premFull(const Polynomial& p, const Polynomial& q, std::size_t var) {
  auto [rem, s] = detail::pseudoRemainder(p, q, var);
  const Exponent dp = p.degree(var), dq = q.degree(var);
  if (p.isZero() || dp < dq) return rem;
  const unsigned full = dp - dq + 1;
  if (s < full) rem *= pow(q.leadingCoefficient(var), full - s);
  return rem;
}

/// prem(...prem(f, T_r, lv(T_r)) ..., T_1, lv(T_1)); no normalization.
inline Polynomial premChain(const Polynomial& f, const TriangularSet& t) {
  Polynomial r = f;
  for (std::size_t i = t.size(); i-- > 0 && !r.isZero();)
    r = detail::pseudoRemainder(r, t[i], *t[i].leadingVariable()).first;
  return r;
}

/// rest = fMul * p - gMul * q * x^shift, with x = lv(q).
struct SpremResult {
  Polynomial rest;
  Polynomial fMul;
  Polynomial gMul;
  Exponent shift = 0;
  std::size_t var = 0;
};

namespace detail {

// gcd over Z[x]: the normalized gcd over Q times the gcd of integer contents.
inline Polynomial integerGcd(const Polynomial& a, const Polynomial& b) {
  Polynomial g = gcd(a, b);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  return g * c;
}

}  // namespace detail

/// One-step pseudo-division clearing the top power of lv(q) in p.
inline SpremResult sprem(const Polynomial& p, const Polynomial& q) {
  if (q.isConstant()) throw ConstantReductor();
  const std::size_t x = *q.leadingVariable();
  const Exponent dp = p.degree(x);
  if (p.isZero() || dp < q.leadingDegree()) throw NotReducible();
  const Polynomial init = q.initial();
  const Polynomial lcp = p.leadingCoefficient(x);
  const Polynomial g = detail::integerGcd(init, lcp);
  SpremResult r;
  r.var = x;
  r.shift = dp - q.leadingDegree();
  r.fMul = exactDivide(init, g);
  r.gMul = exactDivide(lcp, g);
  r.rest = r.fMul * p - (r.gMul * q).mulMonomial(Monomial::variable(p.nvars(), x, r.shift));
  return r;
}

/// P_1 = p, P_2 = q, P_{i+2} = prem(P_i, P_{i+1}) / Q_{i+2}, stopping when
/// the next pseudo-remainder vanishes. divisors[k] and auxiliaries[k] hold
/// Q_{k+3} and H_{k+3}.
struct SubresultantSequence {
  std::size_t variable = 0;
  std::vector<Polynomial> elements;
  std::vector<Exponent> degrees;
  std::vector<Polynomial> divisors;
  std::vector<Polynomial> auxiliaries;
};

namespace detail {

inline Polynomial signedPower(const Polynomial& base, long e) {
  // e >= 0 only; callers handle negative exponents through exact division.
  return pow(base, static_cast<unsigned>(e));
}

inline SubresultantSequence subresultantSequence(const Polynomial& p, const Polynomial& q, std::size_t x) {
  const std::size_t n = p.nvars();
  SubresultantSequence seq;
  seq.variable = x;
  seq.elements = {p, q};
  seq.degrees = {p.degree(x), q.degree(x)};
  const Polynomial minusOne = Polynomial::constant(n, -1);
  for (;;) {
    const std::size_t k = seq.elements.size();  // computing P_{k+1} (1-based)
    const Polynomial& a = seq.elements[k - 2];
    const Polynomial& b = seq.elements[k - 1];
    if (b.degree(x) == 0) break;
    Polynomial r = premFull(a, b, x);
    if (r.isZero()) break;
    Polynomial divisor(n), aux(n);
    if (k == 2) {
      const long d = static_cast<long>(seq.degrees[0]) - seq.degrees[1] + 1;
      divisor = Polynomial::constant(n, d % 2 == 0 ? 1 : -1);
      aux = minusOne;
    } else {
      // i = k + 1 in 1-based indexing.
      const Polynomial negLc = -a.leadingCoefficient(x);  // -lc(P_{i-2})
      const long delta = static_cast<long>(seq.degrees[k - 3]) - seq.degrees[k - 2];  // d_{i-3} - d_{i-2}
      const Polynomial& prevAux = seq.auxiliaries.back();
      // H_i = (-lc(P_{i-2}))^delta * H_{i-1}^(1 - delta)
      if (delta >= 1) {
        aux = exactDivide(signedPower(negLc, delta), signedPower(prevAux, delta - 1));
      } else {
        aux = signedPower(negLc, delta) * signedPower(prevAux, 1 - delta);
      }
      // Q_i = -lc(P_{i-2}) * H_i^(d_{i-2} - d_{i-1})
      const long e = static_cast<long>(seq.degrees[k - 2]) - seq.degrees[k - 1];
      divisor = negLc * signedPower(aux, e);
    }
    Polynomial next = exactDivide(r, divisor);
    seq.degrees.push_back(next.degree(x));
    seq.elements.push_back(std::move(next));
    seq.divisors.push_back(std::move(divisor));
    seq.auxiliaries.push_back(std::move(aux));
  }
  return seq;
}

}  // namespace detail

/// Subresultant PRS of p and q in x; requires lv(p) = lv(q) = x and
/// ldeg(p) >= ldeg(q).
inline SubresultantSequence subresultantPRS(const Polynomial& p, const Polynomial& q, std::size_t x) {
  if (p.isZero() || q.isZero()) throw ZeroInput("subresultantPRS");
  if (p.leadingVariable() != x || q.leadingVariable() != x)
    throw InvalidArgument("subresultantPRS: both polynomials must have leading variable x");
  if (p.leadingDegree() < q.leadingDegree())
    throw InvalidArgument("subresultantPRS: ldeg(p) < ldeg(q)");
  return detail::subresultantSequence(p, q, x);
}

namespace detail {

// Resultant of f, g in x with deg f >= deg g >= 1, read off the subresultant
// PRS: the last element if it is free of x, scaled for degree defects.
inline Polynomial resultantOrdered(const Polynomial& f, const Polynomial& g, std::size_t x) {
  const std::size_t n = f.nvars();
  SubresultantSequence seq = subresultantSequence(f, g, x);
  const auto& el = seq.elements;
  const auto& d = seq.degrees;
  if (d.back() > 0) return Polynomial(n);
  // c tracks the leading coefficient of the last regular subresultant.
  Polynomial c = pow(el[1].leadingCoefficient(x), d[0] - d[1]);
  Polynomial s = c;
  c = -c;
  for (std::size_t j = 2; j < el.size(); ++j) {
    const long delta = static_cast<long>(d[j - 1]) - d[j];
    const Polynomial lc = el[j].leadingCoefficient(x);
    if (delta > 1) {
      c = exactDivide(pow(-lc, delta), pow(c, delta - 1));
    } else {
      c = -lc;
    }
    s = -c;
  }
  return s;
}

}  // namespace detail

/// Resultant in x computed from the subresultant PRS.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t x) {
  const std::size_t n = p.nvars();
  if (p.isZero() || q.isZero()) return Polynomial(n);
  const Exponent dp = p.degree(x), dq = q.degree(x);
  if (dp == 0 && dq == 0) throw InvalidArgument("resultant: both polynomials free of the variable");
  if (dq == 0) return pow(q, dp);
  if (dp == 0) return pow(p, dq);
  if (dp >= dq) return detail::resultantOrdered(p, q, x);
  Polynomial r = detail::resultantOrdered(q, p, x);
  return (static_cast<unsigned long>(dp) * dq) % 2 == 0 ? r : -r;
}

/// Determinant of the Sylvester matrix of p and q in x, by fraction-free
/// Bareiss elimination over the coefficient ring.
inline Polynomial sylvesterResultant(const Polynomial& p, const Polynomial& q, std::size_t x) {
  const std::size_t nv = p.nvars();
  if (p.isZero() || q.isZero()) return Polynomial(nv);
  const Exponent m = p.degree(x), n = q.degree(x);
  if (m == 0 && n == 0) throw InvalidArgument("resultant: both polynomials free of the variable");
  const auto pc = p.coefficients(x);
  const auto qc = q.coefficients(x);
  const std::size_t dim = m + n;
  std::vector<std::vector<Polynomial>> a(dim, std::vector<Polynomial>(dim, Polynomial(nv)));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) a[row][row + k] = pc[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) a[n + row][row + k] = qc[n - k];

  bool negate = false;
  Polynomial prev = Polynomial::constant(nv, 1);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (a[k][k].isZero()) {
      std::size_t r = k + 1;
      while (r < dim && a[r][k].isZero()) ++r;
      if (r == dim) return Polynomial(nv);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j)
        a[i][j] = exactDivide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Polynomial(nv);
    }
    prev = a[k][k];
  }
  Polynomial det = a[dim - 1][dim - 1];
  return negate ? -det : det;
}

/// Euclidean PRS: E_1 = p, E_2 = q, E_{i+2} = prem(E_i, E_{i+1}) until zero.
inline std::vector<Polynomial> euclideanPRS(const Polynomial& p, const Polynomial& q, std::size_t x) {
  std::vector<Polynomial> seq{p, q};
  while (seq.back().degree(x) > 0) {
    Polynomial r = premFull(seq[seq.size() - 2], seq.back(), x);
    if (r.isZero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

}  // namespace charset
