#pragma once

#include <span>
#include <vector>

#include "charset/order.hpp"
#include "charset/poly.hpp"

namespace charset {

/// Non-constant polynomials with strictly increasing leading variables.
class TriangularSet {
 public:
  TriangularSet() = default;
  explicit TriangularSet(std::vector<Polynomial> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].isConstant()) throw InvalidArgument("triangular set element is constant");
      if (i > 0 && elements_[i - 1].cls() >= elements_[i].cls())
        throw InvalidArgument("triangular set leading variables must increase");
    }
  }

  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const TriangularSet&, const TriangularSet&) = default;

 private:
  std::vector<Polynomial> elements_;
};

enum class Flavor { Strong, Weak };

/// p is reduced w.r.t. q when deg(p, lv(q)) < ldeg(q).
inline bool isReduced(const Polynomial& p, const Polynomial& q) {
  if (q.isConstant()) throw ConstantReductor();
  return p.degree(*q.leadingVariable()) < q.leadingDegree();
}

inline bool isReduced(const Polynomial& p, std::span<const Polynomial> t) {
  for (const auto& q : t)
    if (!isReduced(p, q)) return false;
  return true;
}

/// Strong: every element reduced w.r.t. its predecessors.
/// Weak: every initial reduced w.r.t. the predecessors.
inline bool isAscending(const TriangularSet& t, Flavor flavor) {
  const auto& e = t.elements();
  for (std::size_t i = 1; i < e.size(); ++i) {
    const Polynomial& probe = flavor == Flavor::Strong ? e[i] : e[i].initial();
    if (!isReduced(probe, std::span(e.data(), i))) return false;
  }
  return true;
}

/// Either a contradictory set [a] with a non-zero constant a, or a
/// (weak) auto-reduced triangular set.
class AscendingSet {
 public:
  /// The empty (strong) chain.
  AscendingSet() = default;

  static AscendingSet contradictory(const Polynomial& constant) {
    if (!constant.isConstant() || constant.isZero())
      throw InvalidArgument("contradictory ascending set needs a non-zero constant");
    AscendingSet a;
    a.contradictory_ = true;
    a.constant_ = constant;
    return a;
  }

  static AscendingSet chain(TriangularSet t, Flavor flavor) {
    if (!isAscending(t, flavor)) throw InvalidArgument("triangular set is not ascending");
    AscendingSet a;
    a.set_ = std::move(t);
    a.flavor_ = flavor;
    return a;
  }

  bool isContradictory() const { return contradictory_; }
  const Polynomial& constant() const { return constant_; }
  const TriangularSet& set() const { return set_; }
  Flavor flavor() const { return flavor_; }

  /// Elements as a sequence; the contradictory set yields its constant.
  std::vector<Polynomial> elements() const {
    if (contradictory_) return {constant_};
    return set_.elements();
  }

  friend bool operator==(const AscendingSet&, const AscendingSet&) = default;

 private:
  bool contradictory_ = false;
  Polynomial constant_;
  TriangularSet set_;
  Flavor flavor_ = Flavor::Strong;
};

/// Ranks two ascending sets; a contradictory set ranks below every
/// non-contradictory one.
inline RankOutcome rankCompare(const AscendingSet& a, const AscendingSet& b) {
  if (a.isContradictory() || b.isContradictory()) {
    if (a.isContradictory() && b.isContradictory()) return RankOutcome::Same;
    return a.isContradictory() ? RankOutcome::Lower : RankOutcome::Higher;
  }
  return rankCompareSets(a.set().elements(), b.set().elements());
}

}  // namespace charset
