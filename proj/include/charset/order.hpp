#pragma once

#include <span>

#include "charset/poly.hpp"

namespace charset {

enum class RankOutcome { Lower, Higher, Same };
enum class RefineOutcome { Less, Greater, Equivalent };

/// Ranking by class, then leading degree.
inline RankOutcome rankCompare(const Polynomial& p, const Polynomial& q) {
  if (p.isZero() || q.isZero()) throw ZeroInput("rankCompare");
  const auto cp = p.cls(), cq = q.cls();
  if (cp != cq) return cp < cq ? RankOutcome::Lower : RankOutcome::Higher;
  const auto dp = p.leadingDegree(), dq = q.leadingDegree();
  if (dp != dq) return dp < dq ? RankOutcome::Lower : RankOutcome::Higher;
  return RankOutcome::Same;
}

/// Ranking of triangular sets given as element sequences. A longer set whose
/// prefix ranks the same as the shorter set is the lower one.
inline RankOutcome rankCompareSets(std::span<const Polynomial> t, std::span<const Polynomial> s) {
  const std::size_t m = std::min(t.size(), s.size());
  for (std::size_t i = 0; i < m; ++i) {
    auto r = rankCompare(t[i], s[i]);
    if (r != RankOutcome::Same) return r;
  }
  if (t.size() == s.size()) return RankOutcome::Same;
  return t.size() > s.size() ? RankOutcome::Lower : RankOutcome::Higher;
}

/// Refinement order: compare heading monomials under lex, stripping equal
/// heads; coefficients are ignored and zero is below everything.
inline RefineOutcome refineCompare(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.terms();
  const auto& b = q.terms();
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    int c = lexCompare(a[i].monomial, b[i].monomial);
    if (c != 0) return c < 0 ? RefineOutcome::Less : RefineOutcome::Greater;
  }
  if (a.size() == b.size()) return RefineOutcome::Equivalent;
  return a.size() < b.size() ? RefineOutcome::Less : RefineOutcome::Greater;
}

/// Lex comparison of [deg(.,x_1), ..., deg(.,x_n)] under the same lex as
/// monomials, so x_n is the most significant position.
inline RefineOutcome degreeTupleLexCompare(const Polynomial& p, const Polynomial& q) {
  const auto dp = p.degrees();
  const auto dq = q.degrees();
  for (std::size_t i = dp.size(); i-- > 0;) {
    if (dp[i] != dq[i]) return dp[i] < dq[i] ? RefineOutcome::Less : RefineOutcome::Greater;
  }
  return RefineOutcome::Equivalent;
}

}  // namespace charset
