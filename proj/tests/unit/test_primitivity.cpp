#include <gtest/gtest.h>

#include <random>

#include "tordyn/cli/report.hpp"
#include "tordyn/dynamics/primitivity.hpp"

using namespace tordyn;

namespace {

const TorusMatrix kP1({{0, 1, 0}, {0, 0, 1}, {-1, 3, 0}});

bool mentions(const FibrationTrace& t, const std::string& s) {
  for (const auto& step : t.steps) {
    if (step.find(s) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(Certify, FamilyMemberOneByCriterionTwo) {
  const PrimitivityCertificate c = certify(degree_profile(kP1), MapKind::automorphism, 3);
  EXPECT_EQ(c.verdict, PrimitivityVerdict::primitive);
  EXPECT_EQ(c.rule, PrimitivityRule::criterion_2);
  ASSERT_EQ(c.traces.size(), 2u);
  EXPECT_TRUE(c.traces[0].infeasible && c.traces[1].infeasible);
}

TEST(Certify, SyntheticCriterionOne) {
  const PrimitivityCertificate c =
      certify(DegreeProfile::synthetic({1, 9, 3, 1}), MapKind::dominant_meromorphic, 3);
  EXPECT_EQ(c.verdict, PrimitivityVerdict::primitive);
  EXPECT_EQ(c.rule, PrimitivityRule::criterion_1);
}

TEST(Certify, AllOnesInconclusive) {
  const PrimitivityCertificate c = certify(DegreeProfile::synthetic({1, 1, 1, 1}), MapKind::automorphism, 3);
  EXPECT_EQ(c.verdict, PrimitivityVerdict::inconclusive);
  EXPECT_EQ(c.rule, PrimitivityRule::none);
  EXPECT_FALSE(c.diagnostics.empty());
}

TEST(Certify, DominantMeromorphicCannotUseCriterionTwo) {
  const PrimitivityCertificate c = certify(degree_profile(kP1), MapKind::dominant_meromorphic, 3);
  EXPECT_EQ(c.verdict, PrimitivityVerdict::inconclusive);
}

TEST(Certify, TopDegreeMustBeOne) {
  const PrimitivityCertificate c = certify(DegreeProfile::synthetic({1, 2, 3, 2}), MapKind::bimeromorphic, 3);
  EXPECT_EQ(c.verdict, PrimitivityVerdict::inconclusive);
}

TEST(Certify, DimensionMismatch) {
  EXPECT_THROW(certify(DegreeProfile::synthetic({1, 2, 1}), MapKind::automorphism, 3), InvalidInput);
}

TEST(Certify, Deterministic) {
  const auto profile = degree_profile(kP1);
  EXPECT_EQ(certificate_json(certify(profile, MapKind::automorphism, 3)).dump(),
            certificate_json(certify(profile, MapKind::automorphism, 3)).dump());
}

TEST(Fibration, TracesForFamilyMember) {
  const auto traces = analyze_fibration_cases(degree_profile(kP1));
  ASSERT_EQ(traces.size(), 2u);
  EXPECT_EQ(traces[0].dim_base, 1);
  EXPECT_TRUE(traces[0].infeasible);
  EXPECT_TRUE(mentions(traces[0], "lambda_1(g) = lambda_2(f|pi) = 1"));
  EXPECT_TRUE(mentions(traces[0], "hence lambda_1(f) = lambda_2(f)"));
  EXPECT_TRUE(mentions(traces[0], "contradiction"));
  EXPECT_EQ(traces[1].dim_base, 2);
  EXPECT_TRUE(traces[1].infeasible);
  EXPECT_TRUE(mentions(traces[1], "lambda_2(g) = lambda_1(f|pi) = 1"));
  EXPECT_TRUE(mentions(traces[1], "hence lambda_1(f) = lambda_2(f)"));
}

TEST(Fibration, AllOnesFeasible) {
  const auto traces = analyze_fibration_cases(DegreeProfile::synthetic({1, 1, 1, 1}));
  EXPECT_FALSE(traces[0].infeasible);
}

TEST(Fibration, OnlyDimensionThree) {
  EXPECT_THROW(analyze_fibration_cases(DegreeProfile::synthetic({1, 2, 2, 2, 1})), CapabilityError);
}

TEST(ImprimitivityBound, Examples) {
  EXPECT_EQ(imprimitivity_necessary_bound(degree_profile(kP1)).bound, Decision::holds);
  const auto fails = imprimitivity_necessary_bound(DegreeProfile::synthetic({1, 9, 3, 1}));
  EXPECT_EQ(fails.bound, Decision::violated);
  EXPECT_TRUE(fails.imprimitivity_excluded);
  const auto eq = imprimitivity_necessary_bound(DegreeProfile::synthetic({1, 1, 1, 1}));
  EXPECT_EQ(eq.bound, Decision::holds);
  EXPECT_FALSE(eq.imprimitivity_excluded);
}

// Property: rules agree with the trace analysis on generated dim-3 profiles with lambda_3 = 1.
TEST(CertifyProperties, TracesAgreeWithCertificate) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> v(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational l1 = make_rational(v(rng), v(rng) % 5 + 1), l2 = make_rational(v(rng), v(rng) % 5 + 1);
    const DegreeProfile p = DegreeProfile::synthetic({1, l1, l2, 1});
    const PrimitivityCertificate c = certify(p, MapKind::bimeromorphic, 3);
    if (l1 == l2) {
      EXPECT_EQ(c.verdict, PrimitivityVerdict::inconclusive);
      continue;
    }
    EXPECT_EQ(c.verdict, PrimitivityVerdict::primitive);
    if (l1 > l2) {
      EXPECT_EQ(c.rule, PrimitivityRule::criterion_1);
    } else {
      EXPECT_EQ(c.rule, PrimitivityRule::criterion_2);
      const auto traces = analyze_fibration_cases(p);
      EXPECT_TRUE(traces[0].infeasible && traces[1].infeasible);
    }
  }
}

TEST(CertifyProperties, NeverPrimitiveWhenDegreesCoincide) {
  for (long k = 1; k <= 20; ++k) {
    const DegreeProfile p = DegreeProfile::synthetic({1, Rational(k), Rational(k), 1});
    for (MapKind kind : {MapKind::automorphism, MapKind::bimeromorphic, MapKind::dominant_meromorphic}) {
      EXPECT_EQ(certify(p, kind, 3).verdict, PrimitivityVerdict::inconclusive);
    }
  }
  const DegreeProfile finite = degree_profile(TorusMatrix::scalar(3, RingElement::generator(RingTag::eisenstein)));
  EXPECT_EQ(certify(finite, MapKind::automorphism, 3).verdict, PrimitivityVerdict::inconclusive);
}
