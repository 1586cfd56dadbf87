#pragma once

#include "tordyn/numerics/real_roots.hpp"

namespace tordyn {

/// Root counts of a polynomial relative to a circle |z| = R.
struct DiscCount {
  int inside = 0;
  int on_circle = 0;
  int outside = 0;

  friend bool operator==(const DiscCount&, const DiscCount&) = default;
};

namespace detail {

// Gaussian-integer polynomial as real and imaginary integer parts.
struct GaussPoly {
  std::vector<Integer> re;
  std::vector<Integer> im;
};

inline GaussPoly gauss_mul(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly out;
  const std::size_t n = a.re.size() + b.re.size() - 1;
  out.re.assign(n, 0);
  out.im.assign(n, 0);
  for (std::size_t i = 0; i < a.re.size(); ++i) {
    for (std::size_t j = 0; j < b.re.size(); ++j) {
      out.re[i + j] += a.re[i] * b.re[j] - a.im[i] * b.im[j];
      out.im[i + j] += a.re[i] * b.im[j] + a.im[i] * b.re[j];
    }
  }
  return out;
}

/// Number of roots in the open upper half-plane of F = U + iV, assuming F
/// has no real roots.
inline int upper_half_plane_roots(const IntPolynomial& u, const IntPolynomial& v) {
  const int n = std::max(u.degree(), v.degree());
  if (n <= 0) return 0;
  // rotate by the conjugate leading coefficient so that deg V2 < deg U2
  const Integer a = u.coeff(n);
  const Integer b = v.coeff(n);
  const IntPolynomial u2 = u * a + v * b;
  const IntPolynomial v2 = v * a - u * b;
  const int index = SturmSequence(u2, v2).cauchy_index();
  // arg change over R is -pi * index; upper - lower = -index
  return (n - index) / 2;
}

}  // namespace detail

/// Counts the roots of a square-free polynomial inside, on, and outside the
/// circle |z| = radius, exactly. The circle is mapped to the real line by
/// z = R(1+it)/(1-it); roots on the circle become real common roots of the
/// real and imaginary parts, and the remaining roots are split between the
/// half-planes by a Cauchy index computed with Sturm sequences.
inline DiscCount count_roots_by_circle(const IntPolynomial& p, const Rational& radius) {
  if (p.is_zero()) throw InvalidInput("root counting: zero polynomial");
  if (radius <= 0) throw InvalidInput("root counting: radius must be positive");
  if (!is_squarefree(p)) {
    throw InvalidInput("root counting needs a square-free polynomial; reduce with squarefree_part first");
  }
  DiscCount out;
  const int deg = p.degree();
  if (deg < 1) return out;
  IntPolynomial q = p.scale_variable(radius);
  // z = -R corresponds to t = infinity
  if (q.sign_at(Rational(-1)) == 0) {
    q = exact_divide(q, IntPolynomial{1, 1});
    out.on_circle += 1;
  }
  const int d = q.degree();
  if (d >= 1) {
    std::vector<detail::GaussPoly> plus(static_cast<std::size_t>(d) + 1);
    std::vector<detail::GaussPoly> minus(static_cast<std::size_t>(d) + 1);
    plus[0] = {{1}, {0}};
    minus[0] = {{1}, {0}};
    const detail::GaussPoly one_plus_it{{1, 0}, {0, 1}};
    const detail::GaussPoly one_minus_it{{1, 0}, {0, -1}};
    for (int k = 1; k <= d; ++k) {
      plus[static_cast<std::size_t>(k)] = detail::gauss_mul(plus[static_cast<std::size_t>(k - 1)], one_plus_it);
      minus[static_cast<std::size_t>(k)] = detail::gauss_mul(minus[static_cast<std::size_t>(k - 1)], one_minus_it);
    }
    std::vector<Integer> re(static_cast<std::size_t>(d) + 1, 0);
    std::vector<Integer> im(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k) {
      const Integer c = q.coeff(k);
      if (c == 0) continue;
      const detail::GaussPoly term =
          detail::gauss_mul(plus[static_cast<std::size_t>(k)], minus[static_cast<std::size_t>(d - k)]);
      for (std::size_t i = 0; i < term.re.size(); ++i) {
        re[i] += c * term.re[i];
        im[i] += c * term.im[i];
      }
    }
    IntPolynomial u(std::move(re));
    IntPolynomial v(std::move(im));
    const IntPolynomial g = gcd(u, v).primitive_part();
    int pairs = 0;
    if (g.degree() >= 1) {
      const int real_common = SturmSequence(g).count_all();
      out.on_circle += real_common;
      // non-real common roots come in (z, R^2/conj z) pairs, one inside
      pairs = (g.degree() - real_common) / 2;
      u = exact_divide(u, g);
      v = exact_divide(v, g);
    }
    out.inside = pairs + detail::upper_half_plane_roots(u, v);
  }
  out.outside = deg - out.inside - out.on_circle;
  return out;
}

inline DiscCount count_roots_by_unit_circle(const IntPolynomial& p) { return count_roots_by_circle(p, Rational(1)); }

/// Number of roots of a square-free polynomial with |z| < 1.
inline int count_roots_in_open_unit_disc(const IntPolynomial& p) { return count_roots_by_unit_circle(p).inside; }

/// Counts with multiplicity for an arbitrary nonzero polynomial.
inline DiscCount count_roots_by_circle_with_multiplicity(const IntPolynomial& p, const Rational& radius) {
  DiscCount total;
  const auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    const DiscCount c = count_roots_by_circle(parts[i], radius);
    const int m = static_cast<int>(i) + 1;
    total.inside += m * c.inside;
    total.on_circle += m * c.on_circle;
    total.outside += m * c.outside;
  }
  return total;
}

}  // namespace tordyn
