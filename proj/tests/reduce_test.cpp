#include <array>

#include <gtest/gtest.h>

#include "charset/reduce.hpp"
#include "test_support.hpp"

namespace charset {
namespace {

using testing::RandomPolynomials;
using testing::Vars;

const Vars wxyz{"w", "x", "y", "z"};
const Vars xy{"x", "y"};

bool reExpands(const ReductionRest& r, const Polynomial& p, const Polynomial& q) {
  std::array<Polynomial, 2> basis{p, q};
  return r.certificate && r.certificate->first.certifies(r.r1, basis) && r.certificate->second.certifies(r.r2, basis);
}

TEST(IsReduced, Examples) {
  EXPECT_TRUE(isReduced(xy("x"), xy("y^2")));
  EXPECT_FALSE(isReduced(xy("y^2+x"), xy("y+x")));
  EXPECT_TRUE(isReduced(xy("x*y+1"), xy("y^2")));
  EXPECT_THROW(isReduced(xy("x"), xy("5")), ConstantReductor);
  EXPECT_TRUE(isReduced(xy("x"), xy({"y^2", "x^2+1"})));
  EXPECT_FALSE(isReduced(xy("x^3"), xy({"y^2", "x^2+1"})));
}

TEST(IsReduced, SpatialOutputIsAscending) {
  CharSetResult r = charSet(wxyz({"x^2+y^2+z^2-w^2", "x*y+z^2-1", "x*y*z-x^2-y^2-z+1"}));
  const auto& e = r.gcs.set().elements();
  for (std::size_t i = 1; i < e.size(); ++i) {
    EXPECT_TRUE(isReduced(e[i].initial(), std::span(e.data(), i)));
    EXPECT_TRUE(isReduced(e[i], std::span(e.data(), i)));
  }
}

TEST(IsDReducible, Examples) {
  Polynomial f1 = wxyz("x^2+y^2+z^2-w^2"), f2 = wxyz("x*y+z^2-1"), f3 = wxyz("x*y*z-x^2-y^2-z+1");
  EXPECT_TRUE(isDReducible(f1, f2, ReductionKind::SD));
  EXPECT_FALSE(isDReducible(f3, f2, ReductionKind::SD));
  EXPECT_FALSE(isDReducible(f2, f3, ReductionKind::SD));
  EXPECT_FALSE(isDReducible(f1, f3, ReductionKind::SD));
  Vars x{"x"};
  EXPECT_TRUE(isDReducible(x("x^2-1"), x("x-1"), ReductionKind::UG));
  EXPECT_FALSE(isDReducible(xy("x^2-1"), xy("y-1"), ReductionKind::UG));
  EXPECT_FALSE(isDReducible(xy("x*y-1"), xy("y-1"), ReductionKind::UG));
  EXPECT_TRUE(isDReducible(xy("y^2+x"), xy("y+x"), ReductionKind::SP));
  EXPECT_TRUE(isDReducible(xy("y^2+x"), xy("y+x"), ReductionKind::P));
  EXPECT_TRUE(isDReducible(xy("y^2+x"), xy("x*y+1"), ReductionKind::SC));
  EXPECT_FALSE(isDReducible(xy("y+x"), xy("y^2+1"), ReductionKind::SC));
  EXPECT_FALSE(isDReducible(xy("y^2"), xy("3"), ReductionKind::SP));
}

TEST(Rem, SDOnFirstSpatialPair) {
  auto r = rem(wxyz("x^2+y^2+z^2-w^2"), wxyz("x*y+z^2-1"), ReductionKind::SD);
  EXPECT_EQ(r.r1, wxyz("x^2+y^2-x*y-w^2+1"));
  EXPECT_EQ(r.r2, wxyz("x*y+z^2-1"));
  EXPECT_FALSE(r.bFlag);
}

TEST(Rem, SCOnQuadraticByLinear) {
  Vars v{"a", "b", "c", "d", "e", "x"};
  auto r = rem(v("a*x^2+b*x+c"), v("d*x+e"), ReductionKind::SC);
  EXPECT_EQ(r.r1, v("d^2*c - e*d*b + a*e^2"));
  EXPECT_EQ(r.r2, v("d*x+e"));
}

TEST(Rem, SCWithCommonFactorGivesZeroAndGcdLikeTail) {
  Vars x{"x"};
  auto r = rem(x("x^2-3*x+2"), x("x^2-1"), ReductionKind::SC);
  EXPECT_TRUE(r.r1.isZero());
  EXPECT_EQ(r.r2, x("x-1"));
}

TEST(Rem, DIteratesToFixpoint) {
  Vars z{"z"};
  auto r = rem(z("z^2+z"), z("z-1"), ReductionKind::D);
  EXPECT_TRUE(r.r1.isConstant());
  EXPECT_FALSE(r.r1.isZero());
  EXPECT_EQ(r.r1, z("1"));
  EXPECT_EQ(r.r2, z("z-1"));
  auto s = rem(z("z^2+z"), z("z-1"), ReductionKind::SD);
  EXPECT_EQ(s.r1, z("z"));
}

TEST(Rem, FractionFreeSDUsesIntegerGcd) {
  Vars v{"x", "y"};
  // lc(q) = 4, coefficient 6: g = 2, rest = 2*p - 3*(y/y)*q.
  auto r = remWithCertificate(v("6*y + x"), v("4*y + 1"), ReductionKind::SD);
  EXPECT_EQ(r.r1, normalize(v("2*x - 3")));
  EXPECT_TRUE(reExpands(r, v("6*y + x"), v("4*y + 1")));
}

TEST(Rem, UGAndPKinds) {
  Vars x{"x"};
  auto ug = rem(x("x^2-1"), x("x^2+2*x+1"), ReductionKind::UG);
  EXPECT_TRUE(ug.r1.isZero());
  EXPECT_EQ(ug.r2, x("x+1"));
  auto p = rem(xy("y^2+x"), xy("y+x"), ReductionKind::P);
  EXPECT_EQ(p.r1, xy("x^2+x"));
  EXPECT_EQ(p.r2, xy("y+x"));
}

TEST(Rem, NonReducibleInputsEcho) {
  for (auto kind : {ReductionKind::UG, ReductionKind::SP, ReductionKind::SD, ReductionKind::D, ReductionKind::SC}) {
    auto r = rem(xy("x^2+1"), xy("y^2+x"), kind);
    EXPECT_EQ(r.r1, xy("x^2+1")) << toString(kind);
    EXPECT_EQ(r.r2, xy("y^2+x")) << toString(kind);
  }
  EXPECT_THROW(rem(xy("x"), xy("2"), ReductionKind::SD), ConstantReductor);
}

TEST(RemPlus, BFlags) {
  Polynomial f1 = wxyz("x^2+y^2+z^2-w^2"), f2 = wxyz("x*y+z^2-1");
  EXPECT_TRUE(remPlus(f1, f2, ReductionKind::SD).bFlag);
  EXPECT_TRUE(remPlus(f1, f2, ReductionKind::D).bFlag);
  EXPECT_FALSE(remPlus(xy("y^2+x"), xy("x*y+1"), ReductionKind::SC).bFlag);
  EXPECT_TRUE(remPlus(xy("y^2+x"), xy("y+x"), ReductionKind::SP).bFlag);
  EXPECT_FALSE(remPlus(xy("y^2+x"), xy("x*y+1"), ReductionKind::SP).bFlag);
  EXPECT_TRUE(remPlus(xy("y^2+x"), xy("y+x"), ReductionKind::P).bFlag);
  EXPECT_FALSE(remPlus(xy("y^2+x"), xy("x*y+1"), ReductionKind::P).bFlag);
  Vars x{"x"};
  EXPECT_TRUE(remPlus(x("x^2-1"), x("x-1"), ReductionKind::UG).bFlag);
}

TEST(RemWithCertificate, Examples) {
  Polynomial p = xy("y^2+x"), q = xy("y+x");
  auto sp = remWithCertificate(p, q, ReductionKind::SP);
  EXPECT_EQ(sp.r1, normalize(xy("x - x*y")));
  EXPECT_TRUE(reExpands(sp, p, q));
  // r1 = x*y - x = -(p - y*q)
  EXPECT_EQ(sp.certificate->first.cofactors[0] * p + sp.certificate->first.cofactors[1] * q,
            sp.r1 * sp.certificate->first.denominator);

  Polynomial f1 = wxyz("x^2+y^2+z^2-w^2"), f2 = wxyz("x*y+z^2-1");
  auto sd = remWithCertificate(f1, f2, ReductionKind::SD);
  EXPECT_TRUE(reExpands(sd, f1, f2));
  EXPECT_EQ(sd.certificate->first.cofactors[0], wxyz("1"));
  EXPECT_EQ(sd.certificate->first.cofactors[1], wxyz("-1"));

  Vars x{"x"};
  auto ug = remWithCertificate(x("x^2-1"), x("x-1"), ReductionKind::UG);
  EXPECT_TRUE(ug.r1.isZero());
  EXPECT_EQ(ug.r2, x("x-1"));
  EXPECT_TRUE(reExpands(ug, x("x^2-1"), x("x-1")));

  EXPECT_THROW(remWithCertificate(p, q, ReductionKind::SC), Unsupported);
}

class ReduceProperties : public ::testing::TestWithParam<ReductionKind> {
 protected:
  RandomPolynomials gen{3, 1234};

  // Random non-constant pair on which the reduction fires.
  std::pair<Polynomial, Polynomial> reduciblePair(ReductionKind kind) {
    for (;;) {
      Polynomial p, q;
      if (kind == ReductionKind::UG) {
        std::size_t v = static_cast<std::size_t>(gen.uniform(0, 2));
        p = gen.any(4, 4, 10);
        q = gen.any(3, 3, 10);
        Polynomial up(3), uq(3);
        for (const auto& t : p.terms()) up += Polynomial::term(Monomial::variable(3, v, t.monomial[v]), t.coeff);
        for (const auto& t : q.terms()) uq += Polynomial::term(Monomial::variable(3, v, t.monomial[v]), t.coeff);
        p = up;
        q = uq;
      } else if (kind == ReductionKind::SC) {
        std::size_t v = static_cast<std::size_t>(gen.uniform(0, 2));
        p = gen.withLeadingVariable(v, 4);
        q = gen.withLeadingVariable(v, 4);
      } else {
        p = gen.nonConstant();
        q = gen.nonConstant(3, 3);
      }
      if (p.isConstant() || q.isConstant() || p == q) continue;
      if (isDReducible(p, q, kind)) return {p, q};
    }
  }
};

// SC rests carry no certificate and never set the flag.
class CertifiedReduceProperties : public ReduceProperties {};

TEST_P(ReduceProperties, StrictDescent) {
  const ReductionKind kind = GetParam();
  for (int i = 0; i < 150; ++i) {
    auto [p, q] = reduciblePair(kind);
    auto r = remPlus(p, q, kind);
    const bool pseudo = kind == ReductionKind::P || kind == ReductionKind::SP;
    if (pseudo && p.leadingVariable() != q.leadingVariable()) {
      const std::size_t v = *q.leadingVariable();
      ASSERT_LE(r.r1.degree(v), p.degree(v));
      for (std::size_t k = v + 1; k < p.nvars(); ++k) ASSERT_LE(r.r1.degree(k), p.degree(k));
      if (kind == ReductionKind::P) ASSERT_TRUE(r.r1.isZero() || isReduced(r.r1, q));
    } else {
      ASSERT_EQ(refineCompare(r.r1, p), RefineOutcome::Less) << toString(kind);
    }
    ASSERT_NE(refineCompare(r.r2, q), RefineOutcome::Greater) << toString(kind);
    ASSERT_TRUE(isNormalized(r.r1));
    ASSERT_TRUE(isNormalized(r.r2));
  }
}

TEST_P(CertifiedReduceProperties, CertificatesReExpand) {
  const ReductionKind kind = GetParam();
  for (int i = 0; i < 300; ++i) {
    auto [p, q] = reduciblePair(kind);
    auto r = remWithCertificate(p, q, kind);
    ASSERT_TRUE(reExpands(r, p, q)) << toString(kind);
    auto plain = remPlus(p, q, kind);
    ASSERT_EQ(plain.r1, r.r1);
    ASSERT_EQ(plain.r2, r.r2);
    ASSERT_EQ(plain.bFlag, r.bFlag);
  }
}

TEST_P(CertifiedReduceProperties, BFlagMeansInputsAreRecoverable) {
  const ReductionKind kind = GetParam();
  for (int i = 0; i < 200; ++i) {
    auto [p, q] = reduciblePair(kind);
    auto r = remWithCertificate(p, q, kind);
    if (!r.bFlag) continue;
    if (kind == ReductionKind::UG) {
      ASSERT_NO_THROW(exactDivide(p * r.r2.leadingTerm().coeff, r.r2));
      ASSERT_NO_THROW(exactDivide(q * r.r2.leadingTerm().coeff, r.r2));
      continue;
    }
    // den * r1 = c1 * p + c2 * q with c1 a non-zero constant, so p lies in <r1, q>.
    if (r.r1.isZero()) {
      ASSERT_NO_THROW(exactDivide(p, normalize(q)));
      continue;
    }
    const auto& c = r.certificate->first;
    ASSERT_TRUE(c.cofactors[0].isConstant());
    ASSERT_FALSE(c.cofactors[0].isZero());
    ASSERT_EQ(c.cofactors[0] * p, r.r1 * c.denominator - c.cofactors[1] * q);
  }
}

TEST(Rem, PseudoReductionBelowLeadingVariableCanRaiseTheHeadTerm) {
  Vars v{"a", "b", "c"};
  Polynomial p = v("-2*a^3*c + 4*c - 4*a*b"), q = v("4*a^3*b");
  auto r = rem(p, q, ReductionKind::P);
  EXPECT_EQ(r.r1, v("a^6*c - 2*a^3*c"));
  EXPECT_EQ(refineCompare(r.r1, p), RefineOutcome::Greater);
  EXPECT_EQ(r.r1.degree(1), 0u);
}

INSTANTIATE_TEST_SUITE_P(AllKinds, ReduceProperties,
                         ::testing::Values(ReductionKind::UG, ReductionKind::P, ReductionKind::SP, ReductionKind::SD,
                                           ReductionKind::D, ReductionKind::SC),
                         [](const auto& info) { return std::string(toString(info.param)); });
INSTANTIATE_TEST_SUITE_P(CertifiedKinds, CertifiedReduceProperties,
                         ::testing::Values(ReductionKind::UG, ReductionKind::P, ReductionKind::SP, ReductionKind::SD,
                                           ReductionKind::D),
                         [](const auto& info) { return std::string(toString(info.param)); });

TEST(ReduceProperties2, SPReducibilityMatchesReducedness) {
  RandomPolynomials gen{3, 555};
  for (int i = 0; i < 300; ++i) {
    Polynomial p = gen.nonConstant(), q = gen.nonConstant();
    ASSERT_EQ(isDReducible(p, q, ReductionKind::SP), !isReduced(p, q));
    ASSERT_EQ(isDReducible(p, q, ReductionKind::P), !isReduced(p, q));
    if (!isReduced(p, q)) {
      auto r = rem(p, q, ReductionKind::P);
      ASSERT_TRUE(r.r1.isZero() || isReduced(r.r1, q));
    }
  }
}

}  // namespace
}  // namespace charset
