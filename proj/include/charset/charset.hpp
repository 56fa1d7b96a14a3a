#pragma once

// Characteristic-set computation by admissible reductions.
//
// charSet repeatedly calls autoSet, which drives pairwise reductions chosen
// by find until no triple is left, then takes a basic set of what remains.
// The pseudo-remainders of the maintained basis w.r.t. that set are fed back
// until they all vanish. With LoopCondition::Never the reduction loop never
// runs and the flow is the classical Ritt-Wu one.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "charset/order.hpp"
#include "charset/poly.hpp"
#include "charset/prs.hpp"
#include "charset/reduce.hpp"
#include "charset/triangular_set.hpp"

namespace charset {

enum class LoopCondition { FindExhaustion, Never, Bounded };
enum class SortStrategy { Refine, DegreeTuple };

struct Options {
  Flavor flavor = Flavor::Strong;
  LoopCondition cond = LoopCondition::FindExhaustion;
  std::size_t bound = 0;  // iterations allowed under LoopCondition::Bounded
  SortStrategy sort = SortStrategy::Refine;
  /// Track cofactors of every polynomial over the inputs. Implies that SC is
  /// not used, since its rests carry no certificate.
  bool certificates = false;
  /// Reductions available to find, among UG, SD, SC and SP. Their priority
  /// is fixed: UG > SD > SC > SP.
  std::vector<ReductionKind> reductions{ReductionKind::UG, ReductionKind::SD, ReductionKind::SC,
                                        ReductionKind::SP};
  std::size_t maxCharSetLoops = 1000;
  std::size_t maxAutoSetSteps = 200000;

  bool uses(ReductionKind k) const {
    if (certificates && k == ReductionKind::SC) return false;
    return std::find(reductions.begin(), reductions.end(), k) != reductions.end();
  }
};

struct FindTriple {
  Polynomial reductend;
  Polynomial reductor;
  ReductionKind kind;
};

enum class Status { Ok, Contradictory, IterationLimit };

struct TraceStep {
  std::size_t charSetLoop = 0;
  FindTriple triple;
  Polynomial r1;
  Polynomial r2;
  bool bFlag = false;
  bool basisReplaced = false;
  std::vector<Polynomial> basisAfter;
};

struct Trace {
  std::vector<TraceStep> steps;
  std::vector<AscendingSet> medials;  // one per charSet loop
};

struct CharSetResult {
  Status status = Status::Ok;
  AscendingSet gcs;
  std::vector<Polynomial> basis;
  Trace trace;
  std::size_t loops = 0;
  /// Raw inputs, the basis over which certificates are expressed.
  std::vector<Polynomial> inputs;
  /// With Options::certificates: one combination per element of gcs.
  std::optional<std::vector<LinearCombination>> certificates;
};

struct DecompositionBranches {
  AscendingSet mainChain;
  std::vector<Polynomial> initials;
  std::vector<std::vector<Polynomial>> sideBranches;
};

namespace detail {

inline bool contains(std::span<const Polynomial> set, const Polynomial& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

inline void insertUnique(std::vector<Polynomial>& set, const Polynomial& p) {
  if (!p.isZero() && !contains(set, p)) set.push_back(p);
}

inline void erase(std::vector<Polynomial>& set, const Polynomial& p) {
  set.erase(std::remove(set.begin(), set.end(), p), set.end());
}

inline std::vector<Polynomial> normalizedSet(std::span<const Polynomial> f) {
  std::vector<Polynomial> out;
  for (const auto& p : f) insertUnique(out, normalize(p));
  return out;
}

inline bool hasNonZeroConstant(std::span<const Polynomial> f) {
  return std::any_of(f.begin(), f.end(), [](const Polynomial& p) { return !p.isZero() && p.isConstant(); });
}

// Cofactor bookkeeping over the raw inputs.
class Tracker {
 public:
  Tracker() = default;
  explicit Tracker(std::vector<Polynomial> inputs) : on_(true), inputs_(std::move(inputs)) {
    const std::size_t n = inputs_.empty() ? 0 : inputs_[0].nvars();
    for (std::size_t i = 0; i < inputs_.size(); ++i) {
      if (inputs_[i].isZero()) continue;
      record(normalize(inputs_[i]),
             normalizedCombination(inputs_[i], LinearCombination::unit(n, inputs_.size(), i)));
    }
  }

  bool on() const { return on_; }
  const std::vector<Polynomial>& inputs() const { return inputs_; }

  void record(const Polynomial& p, LinearCombination c) {
    if (!on_ || p.isZero()) return;
    for (const auto& [q, _] : table_)
      if (q == p) return;
    table_.emplace_back(p, std::move(c));
  }

  const LinearCombination& of(const Polynomial& p) const {
    for (const auto& [q, c] : table_)
      if (q == p) return c;
    throw InvalidArgument("no certificate recorded for polynomial");
  }

 private:
  bool on_ = false;
  std::vector<Polynomial> inputs_;
  std::vector<std::pair<Polynomial, LinearCombination>> table_;
};

}  // namespace detail

/// Greedy basic set: repeatedly take the rank-minimal candidate (ties: fewest
/// terms, refinement-least, input position) and keep only candidates of
/// higher class that are reduced (weak: whose initial is reduced) w.r.t. it.
inline AscendingSet basicSet(std::span<const Polynomial> p, Flavor flavor = Flavor::Strong) {
  if (p.empty()) throw EmptyInput("basicSet");
  for (const auto& f : p)
    if (!f.isZero() && f.isConstant()) return AscendingSet::contradictory(f);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].isZero()) candidates.push_back(i);
  if (candidates.empty()) throw EmptyInput("basicSet");

  auto better = [&](std::size_t a, std::size_t b) {
    auto r = rankCompare(p[a], p[b]);
    if (r != RankOutcome::Same) return r == RankOutcome::Lower;
    if (p[a].nops() != p[b].nops()) return p[a].nops() < p[b].nops();
    auto c = refineCompare(p[a], p[b]);
    if (c != RefineOutcome::Equivalent) return c == RefineOutcome::Less;
    return a < b;
  };

  std::vector<Polynomial> chosen;
  while (!candidates.empty()) {
    std::size_t best = *std::min_element(candidates.begin(), candidates.end(), better);
    const Polynomial& b = p[best];
    chosen.push_back(b);
    std::vector<std::size_t> next;
    for (std::size_t c : candidates) {
      if (p[c].cls() <= b.cls()) continue;
      const Polynomial probe = flavor == Flavor::Strong ? p[c] : p[c].initial();
      if (isReduced(probe, b)) next.push_back(c);
    }
    candidates = std::move(next);
  }
  return AscendingSet::chain(TriangularSet(std::move(chosen)), flavor);
}

/// Selects the best reduction triple in a, or nothing when no polynomial is
/// reducible under the enabled reductions.
inline std::optional<FindTriple> find(std::span<const Polynomial> a, const Options& opts = {}) {
  if (a.size() < 2) return std::nullopt;
  const std::size_t n = a[0].nvars();

  if (opts.uses(ReductionKind::UG)) {
    std::vector<std::size_t> s;
    for (std::size_t v = n; v-- > 0 && s.size() < 2;) {
      s.clear();
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].isUnivariateIn(v)) s.push_back(i);
    }
    if (s.size() >= 2) {
      auto higher = [&](std::size_t x, std::size_t y) {  // x ranks above y as reductend
        const auto dx = a[x].leadingDegree(), dy = a[y].leadingDegree();
        if (dx != dy) return dx > dy;
        auto c = refineCompare(a[x], a[y]);
        if (c != RefineOutcome::Equivalent) return c == RefineOutcome::Greater;
        return x > y;
      };
      std::size_t p = s[0];
      for (std::size_t i : s)
        if (higher(i, p)) p = i;
      std::optional<std::size_t> q;
      for (std::size_t i : s) {
        if (i == p) continue;
        if (!q) {
          q = i;
          continue;
        }
        const auto& x = a[i];
        const auto& y = a[*q];
        bool better = x.nops() != y.nops()                         ? x.nops() < y.nops()
                      : x.leadingDegree() != y.leadingDegree()     ? x.leadingDegree() < y.leadingDegree()
                      : refineCompare(x, y) != RefineOutcome::Equivalent ? refineCompare(x, y) == RefineOutcome::Less
                                                                   : i < *q;
        if (better) q = i;
      }
      return FindTriple{a[p], a[*q], ReductionKind::UG};
    }
  }

  std::vector<std::size_t> order(a.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto c = opts.sort == SortStrategy::Refine ? refineCompare(a[x], a[y]) : degreeTupleLexCompare(a[x], a[y]);
    return c == RefineOutcome::Less;
  });

  auto reductorBetter = [&](std::size_t x, std::size_t y) {
    if (a[x].nops() != a[y].nops()) return a[x].nops() < a[y].nops();
    if (a[x].leadingDegree() != a[y].leadingDegree()) return a[x].leadingDegree() < a[y].leadingDegree();
    auto c = refineCompare(a[x], a[y]);
    if (c != RefineOutcome::Equivalent) return c == RefineOutcome::Less;
    return x < y;
  };

  for (ReductionKind kind : {ReductionKind::SD, ReductionKind::SC, ReductionKind::SP}) {
    if (!opts.uses(kind)) continue;
    const bool weakSP = kind == ReductionKind::SP && opts.flavor == Flavor::Weak;
    for (std::size_t k = order.size(); k-- > 1;) {
      const Polynomial& p = a[order[k]];
      const Polynomial ini = weakSP ? p.initial() : Polynomial();
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (j == order[k]) continue;
        bool reducible = weakSP ? (!ini.isConstant() && isDReducible(ini, a[j], ReductionKind::SP))
                                : isDReducible(p, a[j], kind);
        if (reducible && (!best || reductorBetter(j, *best))) best = j;
      }
      if (best) return FindTriple{p, a[*best], kind};
    }
  }
  return std::nullopt;
}

struct AutoSetResult {
  AscendingSet medial;
  std::vector<Polynomial> basis;
  std::size_t steps = 0;
  bool hitLimit = false;
};

namespace detail {

inline AutoSetResult autoSetImpl(std::span<const Polynomial> fIn, const Options& opts, Tracker& tracker,
                                 Trace* trace, std::size_t loop) {
  std::vector<Polynomial> f = normalizedSet(fIn);
  if (f.empty()) throw EmptyInput("autoSet");
  const std::size_t n = f[0].nvars();
  const Polynomial one = Polynomial::constant(n, 1);
  AutoSetResult out;
  if (hasNonZeroConstant(f)) {
    out.medial = AscendingSet::contradictory(one);
    out.basis = {one};
    return out;
  }
  std::vector<Polynomial> a = f;
  std::vector<Polynomial> g = f;
  bool contradiction = false;
  for (;;) {
    if (opts.cond == LoopCondition::Never) break;
    if (opts.cond == LoopCondition::Bounded && out.steps >= opts.bound) break;
    if (out.steps >= opts.maxAutoSetSteps) {
      out.hitLimit = true;
      break;
    }
    auto triple = find(a, opts);
    if (!triple) break;
    ++out.steps;
    const Polynomial& p = triple->reductend;
    const Polynomial& q = triple->reductor;
    ReductionRest rest = tracker.on() ? remWithCertificate(p, q, triple->kind) : remPlus(p, q, triple->kind);
    if (tracker.on()) {
      const auto& cp = tracker.of(p);
      const auto& cq = tracker.of(q);
      auto lift = [&](const LinearCombination& overPair) {
        return combine(overPair.cofactors[0], cp, overPair.cofactors[1], cq).dividedBy(overPair.denominator);
      };
      tracker.record(rest.r1, lift(rest.certificate->first));
      tracker.record(rest.r2, lift(rest.certificate->second));
    }
    TraceStep step;
    if (trace) {
      step.charSetLoop = loop;
      step.triple = *triple;
      step.r1 = rest.r1;
      step.r2 = rest.r2;
      step.bFlag = rest.bFlag;
    }
    const bool constantRest = (!rest.r1.isZero() && rest.r1.isConstant()) ||
                              (!rest.r2.isZero() && rest.r2.isConstant());
    if (constantRest) {
      a = {one};
      g = {one};
      contradiction = true;
    } else {
      const Polynomial pc = p, qc = q;
      erase(a, pc);
      erase(a, qc);
      insertUnique(a, rest.r1);
      insertUnique(a, rest.r2);
      if (rest.bFlag && contains(g, pc) && contains(g, qc)) {
        erase(g, pc);
        erase(g, qc);
        insertUnique(g, rest.r1);
        insertUnique(g, rest.r2);
        step.basisReplaced = true;
      }
    }
    if (trace) {
      step.basisAfter = g;
      trace->steps.push_back(std::move(step));
    }
    if (contradiction) break;
  }
  std::vector<Polynomial> pool = a;
  for (const auto& p : f) insertUnique(pool, p);
  out.medial = basicSet(pool, opts.flavor);
  out.basis = std::move(g);
  return out;
}

}  // namespace detail

/// Medial set of f together with a basis g of the same ideal.
inline AutoSetResult autoSet(std::span<const Polynomial> f, const Options& opts = {}) {
  if (f.empty()) throw EmptyInput("autoSet");
  Options o = opts;
  o.certificates = false;
  detail::Tracker none;
  return detail::autoSetImpl(f, o, none, nullptr, 0);
}

/// Generalized characteristic set of f.
inline CharSetResult charSet(std::span<const Polynomial> f, const Options& opts = {}) {
  if (f.empty()) throw EmptyInput("charSet");
  for (const auto& p : f)
    if (p.isZero()) throw ZeroInput("charSet");
  CharSetResult result;
  result.inputs.assign(f.begin(), f.end());
  detail::Tracker tracker = opts.certificates ? detail::Tracker(result.inputs) : detail::Tracker();

  std::vector<Polynomial> g = detail::normalizedSet(f);
  std::vector<Polynomial> r = g;
  while (!r.empty()) {
    if (result.loops >= opts.maxCharSetLoops) {
      result.status = Status::IterationLimit;
      break;
    }
    ++result.loops;
    AutoSetResult as = detail::autoSetImpl(g, opts, tracker, &result.trace, result.loops);
    result.trace.medials.push_back(as.medial);
    result.gcs = as.medial;
    result.basis = as.basis;
    if (as.hitLimit) {
      result.status = Status::IterationLimit;
      break;
    }
    if (as.medial.isContradictory()) {
      result.status = Status::Contradictory;
      break;
    }
    const TriangularSet& chain = as.medial.set();
    r.clear();
    for (const auto& b : as.basis) {
      if (detail::contains(chain.elements(), b)) continue;
      Polynomial rem = b;
      std::optional<LinearCombination> comb;
      if (tracker.on()) comb = tracker.of(b);
      for (std::size_t i = chain.size(); i-- > 0 && !rem.isZero();) {
        const Polynomial& t = chain[i];
        Polynomial quo(t.nvars());
        auto [next, s] = detail::pseudoRemainder(rem, t, *t.leadingVariable(), &quo);
        if (comb) comb = combine(pow(t.initial(), s), *comb, -quo, tracker.of(t));
        rem = std::move(next);
      }
      if (rem.isZero()) continue;
      Polynomial normalized = normalize(rem);
      if (comb) tracker.record(normalized, detail::normalizedCombination(rem, std::move(*comb)));
      detail::insertUnique(r, normalized);
    }
    for (const auto& p : chain) detail::insertUnique(g, p);
    for (const auto& p : r) detail::insertUnique(g, p);
  }

  if (tracker.on()) {
    std::vector<LinearCombination> certs;
    for (const auto& p : result.gcs.elements()) certs.push_back(tracker.of(p));
    result.certificates = std::move(certs);
  }
  return result;
}

/// True when every witness pseudo-reduces to zero w.r.t. c.
inline bool checkCharacteristic(const AscendingSet& c, std::span<const Polynomial> witnesses) {
  if (c.isContradictory()) throw InvalidArgument("checkCharacteristic: contradictory ascending set");
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [&](const Polynomial& w) { return premChain(w, c.set()).isZero(); });
}

/// Main branch (the chain with its initials) and one side system f + {I_i}
/// per initial.
inline DecompositionBranches zeroDecompositionBranches(const CharSetResult& result, std::span<const Polynomial> f) {
  if (result.gcs.isContradictory())
    throw InvalidArgument("zeroDecompositionBranches: contradictory result");
  DecompositionBranches d;
  d.mainChain = result.gcs;
  for (const auto& c : result.gcs.set()) {
    Polynomial init = normalize(c.initial());
    d.initials.push_back(init);
    std::vector<Polynomial> side(f.begin(), f.end());
    detail::insertUnique(side, init);
    d.sideBranches.push_back(std::move(side));
  }
  return d;
}

}  // namespace charset
