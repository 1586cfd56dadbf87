#include <gtest/gtest.h>

#include <random>

#include "tordyn/dynamics/salem.hpp"

using namespace tordyn;

namespace {

const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

void expect_consistent(const ClassificationEvidence& e) {
  EXPECT_EQ(e.roots_inside + e.roots_on_circle + e.roots_outside, e.degree);
  if (e.verdict == SalemVerdict::salem) {
    EXPECT_TRUE(e.reciprocal);
    EXPECT_EQ(e.roots_inside, 1);
    EXPECT_EQ(e.real_roots_outside, 1);
  }
  if (e.verdict == SalemVerdict::pisot) {
    EXPECT_EQ(e.roots_inside, e.degree - 1);
  }
}

}  // namespace

TEST(Reciprocal, Examples) {
  EXPECT_TRUE(is_reciprocal(kLehmer));
  EXPECT_FALSE(is_reciprocal(IntPolynomial{1, -3, 0, 1}));
  EXPECT_TRUE(is_reciprocal(IntPolynomial{1, 0, 1}));
  EXPECT_THROW(is_reciprocal(IntPolynomial{1, 0, 2}), InvalidInput);
}

TEST(TracePolynomial, Examples) {
  EXPECT_EQ(trace_polynomial(IntPolynomial{1, 0, 1}), (IntPolynomial{0, 1}));
  EXPECT_EQ(trace_polynomial(IntPolynomial{1, 0, 0, 0, 1}), (IntPolynomial{-2, 0, 1}));
  const IntPolynomial q = trace_polynomial(kLehmer);
  EXPECT_EQ(q.degree(), 5);
  EXPECT_EQ(SturmSequence(q).count_in(Rational(-2), Rational(2)), 4);
  EXPECT_THROW(trace_polynomial(IntPolynomial{1, -3, 0, 1}), InvalidInput);
}

TEST(Classify, Lehmer) {
  const ClassificationEvidence e = classify(kLehmer);
  EXPECT_EQ(e.verdict, SalemVerdict::salem);
  EXPECT_FALSE(e.convention_dependent);
  EXPECT_EQ(e.roots_on_circle, 8);
  EXPECT_NEAR(e.largest_root.to_double(), 1.17628, 1e-5);
  expect_consistent(e);
}

TEST(Classify, GoldenRatioIsPisot) {
  const ClassificationEvidence e = classify(IntPolynomial{-1, -1, 1});
  EXPECT_EQ(e.verdict, SalemVerdict::pisot);
  EXPECT_FALSE(e.reciprocal);
  expect_consistent(e);
}

TEST(Classify, SquareOfFamilyRootIsNeither) {
  const ClassificationEvidence e = classify(IntPolynomial{-1, 9, -6, 1});
  EXPECT_EQ(e.verdict, SalemVerdict::neither);
  expect_consistent(e);
}

TEST(Classify, QuadraticReciprocalUnitIsFlagged) {
  const ClassificationEvidence e = classify(IntPolynomial{1, -3, 1});
  EXPECT_EQ(e.verdict, SalemVerdict::salem);
  EXPECT_TRUE(e.convention_dependent);
  EXPECT_FALSE(e.note.empty());
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify(IntPolynomial{1, 0, 2}), InvalidInput);           // not monic
  EXPECT_THROW(classify(IntPolynomial{-1, 0, 1}), InvalidInput);          // reducible
  EXPECT_THROW(classify(IntPolynomial{1, 1, 1}), InvalidInput);           // no real root
  EXPECT_THROW(classify(IntPolynomial{1, -3, 0, 1} * IntPolynomial{1, 1}), InvalidInput);
}

TEST(Classify, CountConsistencyOnRandomIrreducibles) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-4, 4);
  std::uniform_int_distribution<int> deg(2, 8);
  int classified = 0;
  for (int trial = 0; trial < 400 && classified < 60; ++trial) {
    const int d = deg(rng);
    std::vector<Integer> cs(static_cast<std::size_t>(d) + 1);
    for (auto& x : cs) x = c(rng);
    cs.back() = 1;
    const IntPolynomial p(std::move(cs));
    if (p.coeff(0) == 0 || !is_irreducible(p)) continue;
    const RootIsolation iso = isolate_real_roots(p);
    if (iso.size() == 0 || iso.intervals.back().hi <= 1) continue;
    try {
      expect_consistent(classify(p));
      ++classified;
    } catch (const InvalidInput&) {
      // largest real root may sit in (lo, 1]
    }
  }
  EXPECT_GE(classified, 30);
}
