#include <algorithm>

#include <gtest/gtest.h>

#include "charset/charset.hpp"
#include "test_support.hpp"

namespace charset {
namespace {

using testing::RandomPolynomials;
using testing::Vars;

const Vars wxyz{"w", "x", "y", "z"};
const Vars xy{"x", "y"};

std::vector<Polynomial> spatial() { return wxyz({"x^2+y^2+z^2-w^2", "x*y+z^2-1", "x*y*z-x^2-y^2-z+1"}); }

bool sameSet(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto key = [](const Polynomial& p, const Polynomial& q) { return refineCompare(p, q) == RefineOutcome::Less ||
                                                                   (refineCompare(p, q) == RefineOutcome::Equivalent &&
                                                                    p.terms().front().coeff < q.terms().front().coeff); };
  std::sort(a.begin(), a.end(), key);
  std::sort(b.begin(), b.end(), key);
  return a == b;
}

TEST(BasicSet, Examples) {
  EXPECT_TRUE(basicSet(xy({"x", "3"})).isContradictory());
  auto b = basicSet(xy({"x-1", "y^2-x", "y^3+y"}));
  EXPECT_EQ(b.set().elements(), xy({"x-1", "y^3+y"}));
  auto w = basicSet(xy({"x-1", "y^2-x", "y^3+y"}), Flavor::Weak);
  EXPECT_EQ(w.set().elements(), xy({"x-1", "y^2-x"}));
  EXPECT_EQ(basicSet(xy({"y^2+x", "y+1"})).set().elements(), xy({"y+1"}));
  EXPECT_THROW(basicSet(std::vector<Polynomial>{}), EmptyInput);
  EXPECT_THROW(basicSet(std::vector<Polynomial>{Polynomial(2)}), EmptyInput);
}

TEST(BasicSet, WeakFlavorOnlyChecksInitials) {
  auto strong = basicSet(xy({"x^2-1", "y^2+x^3"}));
  EXPECT_EQ(strong.set().elements(), xy({"x^2-1"}));
  auto weak = basicSet(xy({"x^2-1", "y^2+x^3"}), Flavor::Weak);
  EXPECT_EQ(weak.set().elements(), xy({"x^2-1", "y^2+x^3"}));
  EXPECT_EQ(basicSet(xy({"x^2-1", "x^2*y+1"}), Flavor::Weak).set().elements(), xy({"x^2-1"}));
  EXPECT_EQ(weak.flavor(), Flavor::Weak);
}

TEST(BasicSet, NoAscendingSubsetRanksLower) {
  RandomPolynomials gen{3, 99};
  for (int i = 0; i < 200; ++i) {
    auto p = gen.system(6, 3, 3, 5);
    for (Flavor flavor : {Flavor::Strong, Flavor::Weak}) {
      auto b = basicSet(p, flavor);
      ASSERT_FALSE(testing::hasLowerAscendingSubset(p, b, flavor));
      if (!b.isContradictory()) ASSERT_TRUE(isAscending(b.set(), flavor));
    }
  }
}

TEST(Find, SpatialPicksSDOnFirstPair) {
  auto t = find(detail::normalizedSet(spatial()));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->reductend, wxyz("x^2+y^2+z^2-w^2"));
  EXPECT_EQ(t->reductor, wxyz("x*y+z^2-1"));
  EXPECT_EQ(t->kind, ReductionKind::SD);
}

TEST(Find, Examples) {
  EXPECT_FALSE(find(xy({"x", "y^2"})).has_value());
  EXPECT_FALSE(find(xy({"x"})).has_value());
  Vars x{"x"};
  auto t = find(x({"x^2-1", "x-1", "x^3-x"}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->reductend, x("x^3-x"));
  EXPECT_EQ(t->reductor, x("x-1"));
  EXPECT_EQ(t->kind, ReductionKind::UG);
}

TEST(Find, RespectsEnabledReductions) {
  Options o;
  o.reductions = {ReductionKind::SP};
  auto t = find(xy({"y^2+x", "x*y+1"}), o);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->kind, ReductionKind::SP);
  o.reductions = {};
  EXPECT_FALSE(find(xy({"y^2+x", "x*y+1"}), o).has_value());
  Options c;
  c.certificates = true;
  c.reductions = {ReductionKind::SC};
  EXPECT_FALSE(find(xy({"y^2+x", "x*y+1"}), c).has_value());
}

TEST(AutoSet, Examples) {
  Vars z{"z"};
  auto r = autoSet(z({"z^2+z", "z-1"}));
  EXPECT_TRUE(r.medial.isContradictory());
  EXPECT_EQ(r.basis, z({"1"}));

  Polynomial p = xy("y^2 + x");
  auto s = autoSet(std::vector<Polynomial>{p});
  EXPECT_EQ(s.medial.set().elements(), std::vector<Polynomial>{p});
  EXPECT_EQ(s.basis, std::vector<Polynomial>{p});
  EXPECT_EQ(s.steps, 0u);
  EXPECT_THROW(autoSet(std::vector<Polynomial>{}), EmptyInput);
}

TEST(AutoSet, BoundedConditionLimitsSteps) {
  Options o;
  o.cond = LoopCondition::Bounded;
  o.bound = 2;
  EXPECT_EQ(autoSet(spatial(), o).steps, 2u);
  o.bound = 0;
  EXPECT_EQ(autoSet(spatial(), o).steps, 0u);
  o.cond = LoopCondition::Never;
  auto r = autoSet(spatial(), o);
  EXPECT_EQ(r.steps, 0u);
  EXPECT_EQ(r.medial, basicSet(spatial()));
}

TEST(CharSet, SpatialOutputShape) {
  auto r = charSet(spatial());
  ASSERT_EQ(r.status, Status::Ok);
  const auto& e = r.gcs.set().elements();
  ASSERT_EQ(e.size(), 3u);
  std::vector<std::vector<Exponent>> degrees;
  for (const auto& p : e) degrees.push_back(measure(p).degreeTuple);
  EXPECT_EQ(degrees[0], (std::vector<Exponent>{8, 12, 0, 0}));
  EXPECT_EQ(degrees[1], (std::vector<Exponent>{4, 6, 1, 0}));
  EXPECT_EQ(degrees[2], (std::vector<Exponent>{4, 6, 0, 1}));
  EXPECT_EQ(e[0].nops(), 23u);
  EXPECT_EQ(e[1].nops(), 12u);
  EXPECT_EQ(e[2].nops(), 17u);
  EXPECT_TRUE(testing::basisReducesToZero(r));
}

TEST(CharSet, SpatialStabilizedBasis) {
  auto r = charSet(spatial());
  ASSERT_FALSE(r.trace.steps.empty());
  std::size_t lastReplaced = 0;
  for (std::size_t i = 0; i < r.trace.steps.size(); ++i)
    if (r.trace.steps[i].basisReplaced) lastReplaced = i;
  EXPECT_TRUE(sameSet(r.trace.steps[lastReplaced].basisAfter,
                      wxyz({"y^2-x*y+x^2-w^2+1", "x*y*z-z-x*y-w^2+2", "z^2+x*y-1"})));
}

TEST(CharSet, SpatialTraceKinds) {
  auto r = charSet(spatial());
  std::vector<ReductionKind> kinds;
  for (const auto& s : r.trace.steps)
    if (s.charSetLoop == 1) kinds.push_back(s.triple.kind);
  using K = ReductionKind;
  EXPECT_EQ(kinds, (std::vector<K>{K::SD, K::SD, K::SC, K::SD, K::SD, K::SD, K::SC, K::SP}));
}

TEST(CharSet, SmallExamples) {
  auto r = charSet(xy({"x-1"}));
  EXPECT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.gcs.set().elements(), xy({"x-1"}));
  EXPECT_EQ(r.loops, 1u);

  auto c = charSet(xy({"x", "x-1"}));
  EXPECT_EQ(c.status, Status::Contradictory);
  EXPECT_TRUE(c.gcs.isContradictory());

  EXPECT_THROW(charSet(std::vector<Polynomial>{}), EmptyInput);
  EXPECT_THROW(charSet(std::vector<Polynomial>{xy("x"), Polynomial(2)}), ZeroInput);
}

TEST(CharSet, IterationLimit) {
  Options o;
  o.cond = LoopCondition::Never;
  o.maxCharSetLoops = 2;
  auto r = charSet(spatial(), o);
  EXPECT_EQ(r.status, Status::IterationLimit);
  EXPECT_EQ(r.loops, 2u);
}

TEST(CharSet, ZeroBoundMatchesRittWu) {
  Options bounded;
  bounded.cond = LoopCondition::Bounded;
  bounded.bound = 0;
  Options never;
  never.cond = LoopCondition::Never;
  RandomPolynomials gen{3, 17};
  for (int i = 0; i < 40; ++i) {
    auto f = gen.system(3, 2, 3, 5);
    auto a = charSet(f, bounded);
    auto b = charSet(f, never);
    ASSERT_EQ(a.status, b.status);
    ASSERT_EQ(a.gcs, b.gcs);
  }
}

TEST(CharSet, DegreeTupleSortGivesValidResult) {
  Options o;
  o.sort = SortStrategy::DegreeTuple;
  auto r = charSet(spatial(), o);
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_TRUE(testing::basisReducesToZero(r));
  EXPECT_TRUE(testing::mediallyDecreasing(r.trace));
}

TEST(CharSet, WeakVariantIsInitialReduced) {
  Options o;
  o.flavor = Flavor::Weak;
  auto r = charSet(spatial(), o);
  ASSERT_EQ(r.status, Status::Ok);
  EXPECT_EQ(r.gcs.flavor(), Flavor::Weak);
  EXPECT_TRUE(isAscending(r.gcs.set(), Flavor::Weak));
  EXPECT_TRUE(testing::basisReducesToZero(r));
}

TEST(CharSet, CertificatesReExpandOverInputs) {
  Options o;
  o.certificates = true;
  auto r = charSet(spatial(), o);
  ASSERT_EQ(r.status, Status::Ok);
  ASSERT_TRUE(r.certificates.has_value());
  const auto elems = r.gcs.elements();
  ASSERT_EQ(r.certificates->size(), elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) EXPECT_TRUE((*r.certificates)[i].certifies(elems[i], r.inputs));
  EXPECT_TRUE(testing::basisReducesToZero(r));
}

TEST(CharSet, RandomSystemsSatisfyPostconditions) {
  RandomPolynomials gen{3, 2024};
  for (int i = 0; i < 60; ++i) {
    auto f = gen.system(3, 2, 3, 5);
    for (Flavor flavor : {Flavor::Strong, Flavor::Weak}) {
      Options o;
      o.flavor = flavor;
      o.maxCharSetLoops = 50;
      auto r = charSet(f, o);
      ASSERT_NE(r.status, Status::IterationLimit);
      ASSERT_TRUE(testing::mediallyDecreasing(r.trace));
      if (r.status == Status::Ok) {
        ASSERT_TRUE(testing::basisReducesToZero(r));
        ASSERT_TRUE(checkCharacteristic(r.gcs, f));
        ASSERT_TRUE(isAscending(r.gcs.set(), flavor));
      }
    }
  }
}

TEST(CharSet, CommonZerosOfInputsAnnihilateOutputs) {
  RandomPolynomials gen{3, 808};
  Options o;
  o.certificates = true;
  for (int i = 0; i < 40; ++i) {
    auto pt = gen.point();
    std::vector<Polynomial> f{gen.vanishingAt(pt), gen.vanishingAt(pt), gen.vanishingAt(pt)};
    auto r = charSet(f, o);
    ASSERT_EQ(r.status, Status::Ok);
    for (const auto& c : r.gcs.elements()) ASSERT_EQ(evaluate(c, pt), 0);
  }
}

TEST(CheckCharacteristic, Examples) {
  auto r = charSet(spatial());
  EXPECT_TRUE(checkCharacteristic(r.gcs, spatial()));
  auto chain = AscendingSet::chain(TriangularSet(xy({"y+1"})), Flavor::Strong);
  EXPECT_FALSE(checkCharacteristic(chain, xy({"y^2"})));
  EXPECT_TRUE(checkCharacteristic(chain, xy({"y^2-1"})));
  EXPECT_THROW(checkCharacteristic(AscendingSet::contradictory(xy("1")), xy({"x"})), InvalidArgument);
}

TEST(ZeroDecomposition, BranchesCarryInitials) {
  auto f = xy({"x*y-1", "x^2-2"});
  auto r = charSet(f);
  ASSERT_EQ(r.status, Status::Ok);
  auto d = zeroDecompositionBranches(r, f);
  EXPECT_EQ(d.mainChain, r.gcs);
  ASSERT_EQ(d.initials.size(), r.gcs.set().size());
  ASSERT_EQ(d.sideBranches.size(), d.initials.size());
  for (std::size_t i = 0; i < d.initials.size(); ++i) {
    EXPECT_EQ(d.initials[i], normalize(r.gcs.set()[i].initial()));
    EXPECT_NE(std::find(d.sideBranches[i].begin(), d.sideBranches[i].end(), d.initials[i]), d.sideBranches[i].end());
  }
  auto c = charSet(xy({"x", "x-1"}));
  EXPECT_THROW(zeroDecompositionBranches(c, xy({"x", "x-1"})), InvalidArgument);
}

}  // namespace
}  // namespace charset
