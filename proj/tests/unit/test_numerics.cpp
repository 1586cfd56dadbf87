#include <gtest/gtest.h>

#include <random>

#include "tordyn/cli/parse.hpp"
#include "tordyn/numerics/disc_count.hpp"
#include "tordyn/numerics/factor.hpp"
#include "tordyn/numerics/max_modulus.hpp"

using namespace tordyn;

namespace {

const IntPolynomial kPhi1{1, -3, 0, 1};  // x^3 - 3x + 1
const IntPolynomial kLehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST(IntPolynomial, ArithmeticAndCanonicalForm) {
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial p = x * x * x - IntPolynomial::constant(3) * x + IntPolynomial::constant(1);
  EXPECT_EQ(p, kPhi1);
  EXPECT_EQ(p.to_canonical(), "[1,-3,0,1]");
  EXPECT_EQ(p.to_expression(), "x^3-3*x+1");
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.derivative(), (IntPolynomial{-3, 0, 3}));
  EXPECT_EQ(p.eval(Integer(2)), 3);
}

TEST(IntPolynomial, GcdAndSquarefree) {
  const IntPolynomial sq = kPhi1 * kPhi1;
  EXPECT_FALSE(is_squarefree(sq));
  EXPECT_EQ(squarefree_part(sq), kPhi1);
  EXPECT_EQ(gcd(sq, kPhi1 * IntPolynomial{1, 1}), kPhi1);
}

TEST(IntPolynomial, ResultantOfLinearFactors) {
  // Res(x - 2, x - 5) = -3 up to the sign convention: |value| is fixed
  const Integer r = resultant(IntPolynomial{-2, 1}, IntPolynomial{-5, 1});
  EXPECT_EQ(abs(r), 3);
}

TEST(RealRoots, ThreeRootsOfPhi) {
  const RootIsolation iso = isolate_real_roots(kPhi1);
  ASSERT_EQ(iso.size(), 3u);
  // one root in each of (-2,-1), (0,1), (1,2)
  const std::vector<std::pair<int, int>> windows{{-2, -1}, {0, 1}, {1, 2}};
  const SturmSequence sturm(kPhi1);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(sturm.count_in(iso.intervals[i].lo, iso.intervals[i].hi), 1);
    EXPECT_EQ(sturm.count_in(Rational(windows[i].first), Rational(windows[i].second)), 1);
    const double v = RealAlgebraic::real_root(kPhi1, i).to_double();
    EXPECT_GT(v, windows[i].first);
    EXPECT_LT(v, windows[i].second);
    EXPECT_EQ(iso.multiplicities[i], 1);
  }
}

TEST(RealRoots, NoRealRoots) { EXPECT_EQ(isolate_real_roots(IntPolynomial{1, 0, 1}).size(), 0u); }

TEST(RealRoots, RepeatedRoot) {
  const RootIsolation iso = isolate_real_roots(IntPolynomial{1, -2, 1});
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_EQ(iso.multiplicities[0], 2);
  EXPECT_LE(iso.intervals[0].lo, 1);
  EXPECT_GE(iso.intervals[0].hi, 1);
}

TEST(RealRoots, ZeroPolynomialRejected) { EXPECT_THROW(isolate_real_roots(IntPolynomial()), InvalidInput); }

TEST(RealRoots, IntervalsDisjointAndSortedOnRandomInput) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const IntPolynomial p = random_poly(rng, 9, 20);
    if (p.degree() < 1) continue;
    const RootIsolation iso = isolate_real_roots(p);
    for (std::size_t i = 1; i < iso.size(); ++i) EXPECT_LE(iso.intervals[i - 1].hi, iso.intervals[i].lo);
    int total = 0;
    for (int m : iso.multiplicities) total += m;
    EXPECT_LE(total, p.degree());
    EXPECT_EQ(static_cast<int>(iso.size()), SturmSequence(squarefree_part(p)).count_all());
  }
}

TEST(RealAlgebraic, RefineAndCompare) {
  const RealAlgebraic gamma = RealAlgebraic::real_root(kPhi1, 2);
  const RealAlgebraic tight = gamma.refined(decimal_tolerance(30));
  EXPECT_LE(tight.interval().width(), decimal_tolerance(30));
  EXPECT_NEAR(tight.to_double(), 1.5320888862379562, 1e-15);
  EXPECT_TRUE(gamma == tight);
  EXPECT_EQ(compare(gamma, Rational(2)), std::strong_ordering::less);
  EXPECT_EQ(compare(gamma, RealAlgebraic::real_root(kPhi1, 1)), std::strong_ordering::greater);
  EXPECT_EQ(RealAlgebraic::real_root(kPhi1, 0).sign(), -1);
}

TEST(RealAlgebraic, ProductOfConjugates) {
  // alpha^2 for the negative root alpha is a root of x^3 - 6x^2 + 9x - 1
  const RealAlgebraic alpha = RealAlgebraic::real_root(kPhi1, 0);
  const RealAlgebraic sq = minimized(multiply(alpha, alpha));
  EXPECT_EQ(sq.polynomial(), (IntPolynomial{-1, 9, -6, 1}));
  EXPECT_NEAR(sq.to_double(), 3.532088886237956, 1e-12);
}

TEST(Factor, IrreducibleCubic) {
  const Factorization f = factor_over_integers(kPhi1);
  EXPECT_TRUE(f.irreducible());
  EXPECT_EQ(f.expand(), kPhi1);
}

TEST(Factor, SquareOfCubic) {
  const Factorization f = factor_over_integers(kPhi1 * kPhi1);
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].multiplicity, 2);
  EXPECT_EQ(f.factors[0].poly, kPhi1);
}

TEST(Factor, CyclotomicSplitting) {
  const IntPolynomial p = IntPolynomial::monomial(1, 12) - IntPolynomial::constant(1);
  const Factorization f = factor_over_integers(p);
  EXPECT_EQ(f.factors.size(), 6u);  // Phi_d for d | 12
  EXPECT_EQ(f.expand(), p);
}

TEST(Factor, DegreeCap) {
  const IntPolynomial big = IntPolynomial::monomial(1, 30) - IntPolynomial::constant(2);
  try {
    factor_over_integers(big);
    FAIL() << "expected a capability error";
  } catch (const CapabilityError& e) {
    EXPECT_NE(std::string(e.what()).find("irreducibility undecided"), std::string::npos);
  }
}

TEST(Factor, ProductRecoversInputOnRandomPolynomials) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPolynomial a = random_poly(rng, 4, 6);
    const IntPolynomial b = random_poly(rng, 4, 6);
    const IntPolynomial p = a * b;
    if (p.degree() < 1) continue;
    const Factorization f = factor_over_integers(p);
    EXPECT_EQ(f.expand(), p);
    for (const auto& fac : f.factors) EXPECT_TRUE(is_irreducible(fac.poly));
  }
}

TEST(DiscCount, Lehmer) {
  const DiscCount c = count_roots_by_unit_circle(kLehmer);
  EXPECT_EQ(c.inside, 1);
  EXPECT_EQ(c.on_circle, 8);
  EXPECT_EQ(c.outside, 1);
}

TEST(DiscCount, GoldenRatio) {
  const DiscCount c = count_roots_by_unit_circle(IntPolynomial{-1, -1, 1});
  EXPECT_EQ(c.inside, 1);
  EXPECT_EQ(c.on_circle, 0);
  EXPECT_EQ(c.outside, 1);
}

TEST(DiscCount, CyclotomicAllOnCircle) {
  const DiscCount c = count_roots_by_unit_circle(IntPolynomial{1, 1, 1, 1, 1});
  EXPECT_EQ(c.on_circle, 4);
}

TEST(MaxModulus, ExactHandleForRealDominantRoot) {
  const MaxModulus m = max_modulus_root(kPhi1, decimal_tolerance(12));
  ASSERT_TRUE(m.exact.has_value());
  EXPECT_NEAR(m.value(), 1.8793852415718169, 1e-11);
  const MaxModulus l = max_modulus_root(kLehmer, decimal_tolerance(12));
  EXPECT_NEAR(l.value(), 1.1762808182599176, 1e-11);
}

TEST(MaxModulus, ComplexDominantPair) {
  const MaxModulus m = max_modulus_root(IntPolynomial{1, 0, 1}, decimal_tolerance(12));
  EXPECT_FALSE(m.exact.has_value());
  EXPECT_LE(m.enclosure.lo, 1);
  EXPECT_GE(m.enclosure.hi, 1);
  EXPECT_LE(m.enclosure.width(), decimal_tolerance(12));
}

TEST(MaxModulus, SpectrumCountsSumToDegree) {
  const IntPolynomial p = kLehmer * IntPolynomial{2, 0, 1};
  const auto spec = modulus_spectrum(p, decimal_tolerance(10));
  int total = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    total += spec[i].count;
    if (i > 0) {
      EXPECT_LE(spec[i].hi, spec[i - 1].hi);
    }
  }
  EXPECT_EQ(total, p.degree());
  const Interval top2 = top_moduli_product(spec, 2);
  EXPECT_NEAR(to_double(top2.midpoint()), 2.0, 1e-9);  // |±i sqrt 2|^2
}

TEST(Parse, PolynomialExamples) {
  EXPECT_EQ(parse_polynomial("x^3-3*x+1").to_canonical(), "[1,-3,0,1]");
  EXPECT_EQ(parse_polynomial("x").to_canonical(), "[0,1]");
  const IntPolynomial p = parse_polynomial("x^2-3*x^2");
  EXPECT_EQ(p.to_canonical(), "[0,0,-2]");
  EXPECT_EQ(p.leading(), -2);
  EXPECT_EQ(parse_polynomial("2(x+1)^2 - 3x"), (IntPolynomial{2, 1, 2}));
  EXPECT_EQ(parse_polynomial("[1, -3, 0, 1]"), kPhi1);
}

TEST(Parse, PolynomialErrorsCarryPosition) {
  for (const std::string bad : {"x^", "x**2", "1.5*x", "3/2", "x+", "(x+1", "y", ""}) {
    try {
      parse_polynomial(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const InvalidInput& e) {
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << e.what();
    }
  }
  try {
    parse_polynomial("x+0.5");
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("non-integer coefficient"), std::string::npos);
  }
}

TEST(Parse, PolynomialRoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial p = random_poly(rng, 12, 1000);
    EXPECT_EQ(parse_polynomial(p.to_expression()), p) << p.to_expression();
    EXPECT_EQ(parse_polynomial(p.to_canonical()), p) << p.to_canonical();
  }
}
