#pragma once

#include <compare>
#include <optional>
#include <string>

#include "tordyn/numerics/real_roots.hpp"

namespace tordyn {

/// A real algebraic number: a square-free primitive integer polynomial
/// with exactly one root in an isolating interval. Rational numbers are
/// stored with a degree-1 polynomial and a point interval.
class RealAlgebraic {
 public:
  RealAlgebraic(const IntPolynomial& poly, const Interval& iv) : poly_(poly.primitive_part()), iv_(iv) {
    if (poly_.degree() < 1) throw InvalidInput("real algebraic number needs a non-constant polynomial");
    if (!is_squarefree(poly_)) throw InvalidInput("real algebraic number needs a square-free polynomial");
    if (iv_.lo > iv_.hi) throw InvalidInput("isolating interval has lo > hi");
    if (iv_.is_point()) {
      if (poly_.sign_at(iv_.lo) != 0) throw InvalidInput("point interval is not a root");
    } else {
      if (poly_.sign_at(iv_.lo) == 0 || poly_.sign_at(iv_.hi) == 0) {
        throw InvalidInput("isolating interval endpoint is a root");
      }
      if (SturmSequence(poly_).count_in(iv_.lo, iv_.hi) != 1) {
        throw InvalidInput("interval does not isolate exactly one root");
      }
    }
    normalize_rational();
  }

  static RealAlgebraic from_rational(const Rational& v) {
    IntPolynomial p(std::vector<Integer>{-v.get_num(), v.get_den()});
    return RealAlgebraic(p, Interval{v, v}, Unchecked{});
  }

  /// The k-th real root (ascending, 0-based) of p.
  static RealAlgebraic real_root(const IntPolynomial& p, std::size_t k) {
    const IntPolynomial q = squarefree_part(p);
    const auto ivs = detail::isolate_squarefree(q);
    if (k >= ivs.size()) throw InvalidInput("polynomial has fewer real roots than requested");
    return RealAlgebraic(q, ivs[k], Unchecked{});
  }

  const IntPolynomial& polynomial() const { return poly_; }
  const Interval& interval() const { return iv_; }

  bool is_rational() const { return iv_.is_point(); }

  std::optional<Rational> rational_value() const {
    if (iv_.is_point()) return iv_.lo;
    return std::nullopt;
  }

  RealAlgebraic refined(const Rational& tol) const {
    RealAlgebraic out = *this;
    detail::refine(out.poly_, out.iv_, tol);
    return out;
  }

  double to_double() const {
    if (iv_.is_point()) return tordyn::to_double(iv_.lo);
    // relative precision well beyond a double's
    Rational scale = abs(iv_.lo) + abs(iv_.hi);
    if (scale == 0) scale = 1;
    return refined(scale * pow2(-64)).iv_.value();
  }

  RealAlgebraic negated() const {
    return RealAlgebraic(poly_.negate_variable(), Interval{-iv_.hi, -iv_.lo}, Unchecked{});
  }

  int sign() const {
    RealAlgebraic a = *this;
    while (true) {
      if (a.iv_.lo >= 0) return a.iv_.is_point() && a.iv_.lo == 0 ? 0 : 1;
      if (a.iv_.hi <= 0) return a.iv_.is_point() && a.iv_.hi == 0 ? 0 : -1;
      if (a.poly_.sign_at(Rational(0)) == 0) {
        // zero lies inside; it is the unique root there
        return 0;
      }
      detail::bisect_once(a.poly_, a.iv_);
    }
  }

  RealAlgebraic abs_value() const { return sign() < 0 ? negated() : *this; }

  std::string to_string() const {
    return "root of " + poly_.to_canonical() + " in [" + iv_.lo.get_str() + ", " + iv_.hi.get_str() + "]";
  }

  friend std::strong_ordering compare(const RealAlgebraic& x, const RealAlgebraic& y) {
    if (x.is_rational() && y.is_rational()) return cmp(x.iv_.lo, y.iv_.lo) <=> 0;
    RealAlgebraic a = x;
    RealAlgebraic b = y;
    if (a.equal_value(b)) return std::strong_ordering::equal;
    // distinct values: refinement separates the intervals
    while (true) {
      if (a.strictly_below(b)) return std::strong_ordering::less;
      if (b.strictly_below(a)) return std::strong_ordering::greater;
      detail::bisect_once(a.poly_, a.iv_);
      detail::bisect_once(b.poly_, b.iv_);
    }
  }

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) == std::strong_ordering::equal;
  }

  friend std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b); }

  friend std::strong_ordering compare(const RealAlgebraic& a, const Rational& v) {
    return compare(a, RealAlgebraic::from_rational(v));
  }

  /// Exact product, computed from the resultant
  /// Res_y(p_a(y), y^deg(p_b) p_b(x/y)).
  friend RealAlgebraic multiply(const RealAlgebraic& x, const RealAlgebraic& y) {
    if (x.is_rational() && y.is_rational()) return from_rational(x.iv_.lo * y.iv_.lo);
    if (x.is_rational() || y.is_rational()) {
      const RealAlgebraic& r = x.is_rational() ? x : y;
      const RealAlgebraic& g = x.is_rational() ? y : x;
      const Rational v = r.iv_.lo;
      if (v == 0) return from_rational(0);
      IntPolynomial p = g.poly_.scale_variable(1 / v);
      Interval iv = v > 0 ? Interval{g.iv_.lo * v, g.iv_.hi * v} : Interval{g.iv_.hi * v, g.iv_.lo * v};
      return RealAlgebraic(p, iv, Unchecked{});
    }
    // neither factor is rational, so neither is zero
    const IntPolynomial pa = x.poly_.shift_down(x.poly_.zero_root_multiplicity());
    const IntPolynomial pb = y.poly_.shift_down(y.poly_.zero_root_multiplicity());
    const IntPolynomial prod = squarefree_part(product_resultant(pa, pb));
    RealAlgebraic a = x;
    RealAlgebraic b = y;
    const SturmSequence sturm(prod);
    while (true) {
      const Rational c1 = a.iv_.lo * b.iv_.lo;
      const Rational c2 = a.iv_.lo * b.iv_.hi;
      const Rational c3 = a.iv_.hi * b.iv_.lo;
      const Rational c4 = a.iv_.hi * b.iv_.hi;
      const Rational lo = std::min({c1, c2, c3, c4});
      const Rational hi = std::max({c1, c2, c3, c4});
      if (prod.sign_at(lo) != 0 && prod.sign_at(hi) != 0 && sturm.count_in(lo, hi) == 1) {
        return RealAlgebraic(prod, Interval{lo, hi}, Unchecked{});
      }
      detail::bisect_once(a.poly_, a.iv_);
      detail::bisect_once(b.poly_, b.iv_);
    }
  }

 private:
  struct Unchecked {};

  RealAlgebraic(IntPolynomial poly, Interval iv, Unchecked) : poly_(poly.primitive_part()), iv_(std::move(iv)) {
    normalize_rational();
  }

  void normalize_rational() {
    if (poly_.degree() == 1 && !iv_.is_point()) {
      const Rational v = make_rational(-poly_.coeff(0), poly_.coeff(1));
      iv_ = {v, v};
    }
  }

  bool strictly_below(const RealAlgebraic& o) const {
    if (iv_.hi < o.iv_.lo) return true;
    // a shared endpoint is excluded by at least one open interval
    return iv_.hi == o.iv_.lo && !(iv_.is_point() && o.iv_.is_point());
  }

  bool equal_value(const RealAlgebraic& o) const {
    if (iv_.is_point() && o.iv_.is_point()) return iv_.lo == o.iv_.lo;
    if (iv_.is_point()) {
      return o.iv_.lo < iv_.lo && iv_.lo < o.iv_.hi && o.poly_.sign_at(iv_.lo) == 0;
    }
    if (o.iv_.is_point()) return o.equal_value(*this);
    const IntPolynomial g = gcd(poly_, o.poly_);
    if (g.degree() < 1) return false;
    const Rational lo = std::max(iv_.lo, o.iv_.lo);
    const Rational hi = std::min(iv_.hi, o.iv_.hi);
    if (lo >= hi) return false;
    // endpoints are non-roots of both polynomials, hence of g
    return SturmSequence(g).count_in(lo, hi) > 0;
  }

  static IntPolynomial product_resultant(const IntPolynomial& pa, const IntPolynomial& pb) {
    const int da = pa.degree();
    const int db = pb.degree();
    const int n = da * db;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int k = 0; k <= n; ++k) {
      std::vector<Integer> g(static_cast<std::size_t>(db) + 1);
      Integer kp = 1;
      for (int j = 0; j <= db; ++j) {
        g[static_cast<std::size_t>(db - j)] = pb.coeff(j) * kp;
        kp *= k;
      }
      xs.emplace_back(k);
      ys.emplace_back(resultant(pa, IntPolynomial(std::move(g))));
    }
    // Newton divided differences, then expansion to monomial basis
    std::vector<Rational> dd = ys;
    for (int j = 1; j <= n; ++j) {
      for (int i = n; i >= j; --i) {
        dd[static_cast<std::size_t>(i)] =
            (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
            (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
      }
    }
    std::vector<Rational> poly(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = n; i >= 0; --i) {
      // poly <- poly*(x - xs[i]) + dd[i]
      std::vector<Rational> next(static_cast<std::size_t>(n) + 1, Rational(0));
      for (int j = 0; j < n; ++j) {
        next[static_cast<std::size_t>(j + 1)] += poly[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(j)] -= poly[static_cast<std::size_t>(j)] * xs[static_cast<std::size_t>(i)];
      }
      next[0] += dd[static_cast<std::size_t>(i)];
      poly = std::move(next);
    }
    Integer den = 1;
    for (const auto& c : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> coeffs;
    for (const auto& c : poly) coeffs.push_back(c.get_num() * (den / c.get_den()));
    return IntPolynomial(std::move(coeffs)).primitive_part();
  }

  IntPolynomial poly_;
  Interval iv_;
};

}  // namespace tordyn
