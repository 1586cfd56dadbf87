#include <gtest/gtest.h>

#include <random>

#include "tordyn/cli/parse.hpp"
#include "tordyn/torus/matrix.hpp"

using namespace tordyn;

TEST(Ring, EisensteinArithmetic) {
  const RingElement w = RingElement::generator(RingTag::eisenstein);
  // w^2 = -1 - w, w^3 = 1
  EXPECT_EQ(w * w, RingElement(-1, -1, RingTag::eisenstein));
  EXPECT_TRUE((w * w * w).is_one());
  EXPECT_EQ(w.norm(), 1);
  EXPECT_TRUE(w.is_unit());
  EXPECT_EQ(w * w.conjugate(), RingElement(1, 0, RingTag::eisenstein));
  EXPECT_EQ(RingElement(2, -3, RingTag::eisenstein).to_string(), "2-3*w");
}

TEST(Ring, GaussianUnits) {
  const RingElement i = RingElement::generator(RingTag::gaussian);
  EXPECT_EQ(i * i, RingElement(-1, 0, RingTag::gaussian));
  EXPECT_TRUE(RingElement(1, 1, RingTag::gaussian).norm() == 2);
  EXPECT_FALSE(RingElement(1, 1, RingTag::gaussian).is_unit());
  EXPECT_EQ(i.inverse(), RingElement(0, -1, RingTag::gaussian));
}

TEST(Ring, ParseElements) {
  EXPECT_EQ(parse_ring_element("1+w", RingTag::eisenstein), RingElement(1, 1, RingTag::eisenstein));
  EXPECT_EQ(parse_ring_element("-w", RingTag::eisenstein), RingElement(0, -1, RingTag::eisenstein));
  EXPECT_EQ(parse_ring_element("3-2*i", RingTag::gaussian), RingElement(3, -2, RingTag::gaussian));
  EXPECT_THROW(parse_ring_element("1+i", RingTag::eisenstein), InvalidInput);
  EXPECT_THROW(parse_ring_element("w", RingTag::integer), InvalidInput);
}

TEST(Matrix, DeterminantAndAutomorphism) {
  const TorusMatrix p({{0, 1, 0}, {0, 0, 1}, {-1, 3, 0}});
  EXPECT_EQ(p.determinant(), RingElement(-1));
  EXPECT_TRUE(p.is_automorphism());
  EXPECT_FALSE(TorusMatrix({{2, 0}, {0, 1}}).is_automorphism());
  EXPECT_TRUE((p * p.inverse()).is_identity());
}

TEST(Matrix, EisensteinInverse) {
  const TorusMatrix m = parse_matrix("[[1,w],[0,-1-w]]", RingTag::eisenstein);
  EXPECT_TRUE(m.is_automorphism());
  EXPECT_TRUE((m * m.inverse()).is_identity());
}

TEST(Matrix, RealifyEisensteinGenerator) {
  const TorusMatrix w = TorusMatrix::scalar(1, RingElement::generator(RingTag::eisenstein));
  EXPECT_EQ(realify(w), (IntegerMatrix{{0, -1}, {1, -1}}));
  const TorusMatrix i = TorusMatrix::scalar(1, RingElement::generator(RingTag::gaussian));
  EXPECT_EQ(realify(i), (IntegerMatrix{{0, -1}, {1, 0}}));
}

TEST(Matrix, RealifyIsMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  for (RingTag tag : {RingTag::integer, RingTag::gaussian, RingTag::eisenstein}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<RingElement> a, b;
      for (int k = 0; k < 9; ++k) {
        const long ai = d(rng), bi = tag == RingTag::integer ? 0 : d(rng);
        const long ci = d(rng), di = tag == RingTag::integer ? 0 : d(rng);
        a.emplace_back(Integer(ai), Integer(bi), tag);
        b.emplace_back(Integer(ci), Integer(di), tag);
      }
      const TorusMatrix ma(3, tag, a), mb(3, tag, b);
      EXPECT_EQ(realify(ma * mb), realify(ma) * realify(mb));
    }
  }
}

TEST(Matrix, ExteriorPowerDeterminantIdentity) {
  // det of the top exterior power is det itself; k = 1 is the matrix
  const IntegerMatrix a{{2, 1, 0, 1}, {1, 1, 3, 0}, {0, 2, 1, 1}, {1, 0, 0, 2}};
  EXPECT_EQ(exterior_power(a, 1), a);
  EXPECT_EQ(exterior_power(a, 4)(0, 0), a.determinant());
  EXPECT_EQ(exterior_power(a, 2).size(), 6u);
  // Cauchy-Binet: wedge^2 is multiplicative
  const IntegerMatrix b{{1, 0, 2, 0}, {0, 1, 1, 1}, {3, 0, 1, 0}, {0, 2, 0, 1}};
  EXPECT_EQ(exterior_power(a * b, 2), exterior_power(a, 2) * exterior_power(b, 2));
}

TEST(Matrix, CharPolyOfCompanion) {
  const IntegerMatrix c{{0, 1, 0}, {0, 0, 1}, {-1, 3, 0}};
  EXPECT_EQ(char_poly(c), (IntPolynomial{1, -3, 0, 1}));
}

TEST(FiniteOrder, EisensteinScalar) {
  const TorusMatrix w = TorusMatrix::scalar(3, RingElement::generator(RingTag::eisenstein));
  const FiniteOrderResult r = finite_order(w);
  ASSERT_TRUE(r.order.has_value());
  EXPECT_EQ(*r.order, 3u);
  const TorusMatrix mw = TorusMatrix::scalar(3, -RingElement::generator(RingTag::eisenstein));
  EXPECT_EQ(*finite_order(mw).order, 6u);
}

TEST(FiniteOrder, HyperbolicIsInfinite) {
  const FiniteOrderResult r = finite_order(TorusMatrix({{0, 1, 0}, {0, 0, 1}, {-1, 3, 0}}));
  EXPECT_FALSE(r.order.has_value());
  EXPECT_TRUE(r.certified_infinite);
}

TEST(FiniteOrder, UnipotentIsInfinite) {
  const FiniteOrderResult r = finite_order(TorusMatrix({{1, 1}, {0, 1}}));
  EXPECT_FALSE(r.order.has_value());
  EXPECT_TRUE(r.certified_infinite);
}

TEST(FiniteOrder, NonUnitDeterminantRejected) {
  EXPECT_THROW(finite_order(TorusMatrix({{2, 0}, {0, 1}})), InvalidInput);
}

TEST(Parse, MatrixRoundTripProperty) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-50, 50);
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const RingTag tag = static_cast<RingTag>(trial % 3);
    const std::size_t n = static_cast<std::size_t>(size(rng));
    std::vector<RingElement> e;
    for (std::size_t k = 0; k < n * n; ++k) {
      e.emplace_back(Integer(d(rng)), Integer(tag == RingTag::integer ? 0 : d(rng)), tag);
    }
    const TorusMatrix m(n, tag, e);
    EXPECT_EQ(parse_matrix(m.to_string(), tag), m) << m.to_string();
  }
}

TEST(Parse, MatrixErrors) {
  EXPECT_THROW(parse_matrix("[[1,2],[3]]", RingTag::integer), InvalidInput);
  EXPECT_THROW(parse_matrix("[[1,2],[3,4]", RingTag::integer), InvalidInput);
  EXPECT_THROW(parse_matrix("[[1,x]]", RingTag::integer), InvalidInput);
  try {
    parse_matrix("[[1,2],[3,q]]", RingTag::integer);
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("position 10"), std::string::npos) << e.what();
  }
}
