#pragma once

#include <string>

#include "tordyn/numerics/disc_count.hpp"
#include "tordyn/numerics/factor.hpp"

namespace tordyn {

enum class SalemVerdict { salem, pisot, neither };

inline const char* salem_verdict_name(SalemVerdict v) {
  switch (v) {
    case SalemVerdict::salem: return "salem";
    case SalemVerdict::pisot: return "pisot";
    case SalemVerdict::neither: return "neither";
  }
  return "?";
}

/// Palindromic coefficients: x^d p(1/x) = p(x).
inline bool is_reciprocal(const IntPolynomial& p) {
  if (p.is_zero() || p.leading() != 1) throw InvalidInput("is_reciprocal: polynomial must be monic");
  return p.reversed() == p && p.coeff(0) == p.leading();
}

/// For monic reciprocal p of degree 2d, the q of degree d with
/// p(x) = x^d q(x + 1/x).
inline IntPolynomial trace_polynomial(const IntPolynomial& p) {
  if (p.is_zero() || p.leading() != 1) throw InvalidInput("trace_polynomial: polynomial must be monic");
  if (p.degree() % 2 != 0) throw InvalidInput("trace_polynomial: degree must be even");
  if (!is_reciprocal(p)) throw InvalidInput("trace_polynomial: polynomial is not reciprocal");
  const int d = p.degree() / 2;
  // x^k + x^{-k} = V_k(x + 1/x), V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}
  IntPolynomial v_prev = IntPolynomial::constant(2);
  IntPolynomial v = IntPolynomial::x();
  IntPolynomial q = IntPolynomial::constant(p.coeff(d));
  for (int k = 1; k <= d; ++k) {
    q += v * p.coeff(d + k);
    IntPolynomial next = IntPolynomial::x() * v - v_prev;
    v_prev = std::move(v);
    v = std::move(next);
  }
  return q;
}

/// Root counts of p(x) = x^d q(x + 1/x) relative to the unit circle, read
/// off the real roots of q: y in (-2, 2) gives a conjugate pair on the
/// circle, y = +-2 the root +-1, |y| > 2 a real pair a, 1/a, non-real y a
/// quadruple off the circle.
inline DiscCount unit_circle_counts_reciprocal(const IntPolynomial& p) {
  const IntPolynomial q = trace_polynomial(p);
  DiscCount out;
  const auto parts = squarefree_decomposition(q);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const IntPolynomial& part = parts[i];
    if (part.degree() < 1) continue;
    const int mult = static_cast<int>(i) + 1;
    const SturmSequence s(part);
    int on = s.count_in(Rational(-2), Rational(2));
    if (part.sign_at(Rational(2)) == 0) --on;  // (-2, 2] counted 2
    int edge = 0;
    for (int v : {-2, 2}) {
      if (part.sign_at(Rational(v)) == 0) ++edge;
    }
    const int off = part.degree() - on - edge;
    // every y off the closed segment contributes one root inside and one outside
    out.on_circle += mult * (2 * on + 2 * edge);
    out.inside += mult * off;
    out.outside += mult * off;
  }
  return out;
}

struct ClassificationEvidence {
  IntPolynomial poly;
  int degree = 0;
  bool reciprocal = false;
  int real_roots_outside = 0;
  int roots_outside = 0;
  int roots_on_circle = 0;
  int roots_inside = 0;
  RealAlgebraic largest_root = RealAlgebraic::from_rational(0);
  SalemVerdict verdict = SalemVerdict::neither;
  bool convention_dependent = false;  // degree-2 Salem verdicts
  std::string note;
};

/// Salem / Pisot / neither for the largest real root of a monic
/// irreducible integer polynomial.
inline ClassificationEvidence classify(const IntPolynomial& p) {
  if (p.degree() < 1) throw InvalidInput("classify: polynomial must be non-constant");
  if (p.leading() != 1) throw InvalidInput("classify: polynomial must be monic (an algebraic integer)");
  if (!is_irreducible(p)) {
    throw InvalidInput("classify: polynomial is reducible; run factor_over_integers and classify a factor");
  }
  ClassificationEvidence ev;
  ev.poly = p;
  ev.degree = p.degree();
  const auto ivs = detail::isolate_squarefree(p);
  if (ivs.empty()) throw InvalidInput("classify: no real root greater than 1");
  ev.largest_root = RealAlgebraic(p, ivs.back());
  if (compare(ev.largest_root, Rational(1)) != std::strong_ordering::greater) {
    throw InvalidInput("classify: no real root greater than 1");
  }
  const SturmSequence s(p);
  ev.real_roots_outside = s.count_above(Rational(1)) + s.count_below_or_at(Rational(-1));
  if (p.sign_at(Rational(-1)) == 0) --ev.real_roots_outside;
  ev.reciprocal = is_reciprocal(p);
  const DiscCount c =
      ev.reciprocal && ev.degree % 2 == 0 ? unit_circle_counts_reciprocal(p) : count_roots_by_unit_circle(p);
  ev.roots_inside = c.inside;
  ev.roots_on_circle = c.on_circle;
  ev.roots_outside = c.outside;
  if (ev.reciprocal && c.on_circle == ev.degree - 2 && c.inside == 1 && c.outside == 1 && ev.real_roots_outside == 1) {
    ev.verdict = SalemVerdict::salem;
    if (ev.degree == 2) {
      ev.convention_dependent = true;
      ev.note = "degree 2: no further conjugates, so the definition holds vacuously; the usual convention asks for degree >= 4";
    }
  } else if (c.inside == ev.degree - 1) {
    ev.verdict = SalemVerdict::pisot;
  } else {
    ev.verdict = SalemVerdict::neither;
  }
  return ev;
}

}  // namespace tordyn
