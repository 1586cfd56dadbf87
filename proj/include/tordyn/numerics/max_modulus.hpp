#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "tordyn/numerics/disc_count.hpp"
#include "tordyn/numerics/real_algebraic.hpp"

namespace tordyn {

using Complex = std::complex<long double>;

/// Numerical roots with a posteriori inclusion radii: every disc
/// |z - roots[i]| <= radii[i] contains a root (Gerschgorin-type bound),
/// and the union of discs contains all of them.
struct NumericRoots {
  std::vector<Complex> roots;
  std::vector<long double> radii;
};

/// Aberth-Ehrlich simultaneous iteration in long double, started on a circle
/// of Cauchy-bound radius. Intended for square-free input.
inline NumericRoots aberth_roots(const IntPolynomial& p, int max_iterations = 500) {
  NumericRoots out;
  const int n = p.degree();
  if (n < 1) return out;
  std::vector<long double> c(static_cast<std::size_t>(n) + 1);
  const long double lead = static_cast<long double>(p.leading().get_d());
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = static_cast<long double>(p.coeff(i).get_d()) / lead;
  auto eval = [&](Complex z, Complex& dp) {
    Complex v = 1;
    dp = 0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * z + v;
      v = v * z + c[static_cast<std::size_t>(i)];
    }
    return v;
  };
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  radius = std::min(radius + 1, 1e300L);
  // geometric mean of root moduli as a better start radius
  const long double c0 = std::abs(c[0]);
  if (c0 > 0) radius = std::min(radius, std::pow(c0, 1.0L / n) * 1.5L + 0.1L);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2.0L * 3.14159265358979323846L * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < max_iterations; ++iter) {
    long double max_step = 0;
    for (int k = 0; k < n; ++k) {
      Complex dp;
      const Complex v = eval(z[static_cast<std::size_t>(k)], dp);
      if (v == Complex(0)) continue;
      const Complex ratio = v / dp;
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(k)] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
    }
    if (max_step < 1e-19L) break;
  }
  out.roots = z;
  out.radii.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex dp;
    const Complex v = eval(z[static_cast<std::size_t>(k)], dp);
    Complex prod = 1;
    for (int j = 0; j < n; ++j) {
      if (j != k) prod *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
    }
    out.radii[static_cast<std::size_t>(k)] = prod == Complex(0) ? INFINITY : n * std::abs(v / prod);
  }
  return out;
}

/// Certified enclosure of the largest root modulus, optionally with the
/// exact real algebraic value when that maximum is attained by a real root.
struct MaxModulus {
  Interval enclosure;
  std::optional<RealAlgebraic> exact;

  double value() const { return exact ? exact->to_double() : enclosure.value(); }
};

namespace detail {

inline Rational dyadic_near(long double v, bool up) {
  return round_dyadic(from_long_double(v), 80, up);
}

/// Number of roots (square-free p) with |z| < R; R = 0 gives 0.
inline int roots_strictly_inside(const IntPolynomial& p, const Rational& r) {
  if (r <= 0) return 0;
  return count_roots_by_circle(p, r).inside;
}

/// Largest real modulus among the real roots of square-free q, as a
/// positive real algebraic number (root of q(x) or q(-x)).
inline std::optional<RealAlgebraic> largest_real_modulus(const IntPolynomial& q) {
  const auto ivs = isolate_squarefree(q);
  if (ivs.empty()) return std::nullopt;
  RealAlgebraic top(q, ivs.back());
  RealAlgebraic bottom(q, ivs.front());
  RealAlgebraic pos = top.abs_value();
  RealAlgebraic neg = bottom.abs_value();
  return compare(pos, neg) == std::strong_ordering::less ? neg : pos;
}

}  // namespace detail

/// Largest modulus over all complex roots of p, enclosed to width <= tol.
/// The enclosure is certified by exact disc counting; an exact handle is
/// attached when every root in the top annulus is real.
inline MaxModulus max_modulus_root(const IntPolynomial& p, const Rational& tol) {
  if (p.is_zero()) throw InvalidInput("max_modulus_root: zero polynomial");
  if (p.degree() < 1) throw InvalidInput("max_modulus_root: constant polynomial");
  if (tol <= 0) throw InvalidInput("max_modulus_root: tolerance must be positive");
  IntPolynomial q = squarefree_part(p);
  q = q.shift_down(q.zero_root_multiplicity());
  MaxModulus out;
  if (q.degree() < 1) {
    out.enclosure = {0, 0};
    out.exact = RealAlgebraic::from_rational(0);
    return out;
  }
  const int d = q.degree();

  // numeric estimate, then an exactly verified bracket [lo, hi):
  // count(|z| < lo) < d and count(|z| < hi) == d
  const NumericRoots approx = aberth_roots(q);
  long double est = 0;
  for (const auto& z : approx.roots) est = std::max(est, std::abs(z));
  Rational hi = pow2(cauchy_bound_exponent(q));
  Rational lo = 0;
  if (std::isfinite(static_cast<double>(est)) && est > 0) {
    const Rational h = detail::dyadic_near(est * (1 + 1e-15L), true);
    const Rational l = detail::dyadic_near(est * (1 - 1e-15L), false);
    if (h < hi && detail::roots_strictly_inside(q, h) == d) hi = h;
    if (l > 0 && l < hi && detail::roots_strictly_inside(q, l) < d) lo = l;
  }
  auto bisect_bracket = [&](const Rational& width) {
    while (hi - lo > width) {
      const Rational mid = (lo + hi) / 2;
      if (detail::roots_strictly_inside(q, mid) == d) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  };

  std::optional<RealAlgebraic> candidate = detail::largest_real_modulus(q);
  if (candidate) {
    const RealAlgebraic& c = *candidate;
    if (c.is_rational()) {
      const Rational v = *c.rational_value();
      const DiscCount at = count_roots_by_circle(q, v);
      if (at.outside == 0) {
        out.enclosure = {v, v};
        out.exact = c;
        return out;
      }
    } else {
      // all roots with |z| >= c.lo must be real for c to be the maximum
      RealAlgebraic r = c;
      const Rational floor_width = std::min(tol, pow2(-64)) / 1024;
      const SturmSequence s(q);
      while (true) {
        const Interval& iv = r.interval();
        const int annulus = d - detail::roots_strictly_inside(q, iv.lo);
        const int real_in_annulus = s.count_above(iv.lo) + s.count_below_or_at(-iv.lo);
        if (annulus == real_in_annulus) {
          out.exact = r.refined(tol);
          out.enclosure = out.exact->interval();
          return out;
        }
        if (iv.width() < floor_width || r.is_rational()) break;
        r = r.refined(iv.width() / 16);
      }
    }
  }
  bisect_bracket(tol);
  out.enclosure = {lo, hi};
  return out;
}

/// Roots whose moduli lie in [lo, hi), counted with multiplicity.
struct ModulusCluster {
  Rational lo;
  Rational hi;
  int count = 0;
};

namespace detail {

// Splits verified clusters of a square-free q (no zero roots) until each is
// at most `width` wide; counts come from exact disc counting.
inline void split_clusters(const IntPolynomial& q, std::vector<ModulusCluster> pending, const Rational& width,
                           std::vector<ModulusCluster>& out) {
  while (!pending.empty()) {
    ModulusCluster c = pending.back();
    pending.pop_back();
    if (c.count == 0) continue;
    if (c.hi - c.lo <= width) {
      out.push_back(c);
      continue;
    }
    const Rational mid = (c.lo + c.hi) / 2;
    const int below = roots_strictly_inside(q, mid) - roots_strictly_inside(q, c.lo);
    pending.push_back({c.lo, mid, below});
    pending.push_back({mid, c.hi, c.count - below});
  }
}

inline std::vector<ModulusCluster> squarefree_spectrum(const IntPolynomial& q, const Rational& width) {
  const int d = q.degree();
  std::vector<ModulusCluster> out;
  if (d < 1) return out;
  // numeric clusters, verified by counts at their ends
  const NumericRoots approx = aberth_roots(q);
  std::vector<long double> mods;
  for (const auto& z : approx.roots) mods.push_back(std::abs(z));
  std::sort(mods.begin(), mods.end());
  std::vector<ModulusCluster> seeds;
  bool numeric_ok = std::all_of(mods.begin(), mods.end(), [](long double m) { return std::isfinite(m) && m > 0; });
  if (numeric_ok) {
    std::size_t i = 0;
    while (i < mods.size()) {
      std::size_t j = i + 1;
      while (j < mods.size() && mods[j] <= mods[j - 1] * (1 + 1e-12L)) ++j;
      Rational lo = dyadic_near(mods[i] * (1 - 1e-14L), false);
      const Rational hi = dyadic_near(mods[j - 1] * (1 + 1e-14L), true);
      if (!seeds.empty() && lo <= seeds.back().hi) {
        seeds.back().hi = hi;
        seeds.back().count += static_cast<int>(j - i);
      } else {
        seeds.push_back({lo, hi, static_cast<int>(j - i)});
      }
      i = j;
    }
    int below = 0;
    for (const auto& c : seeds) {
      if (roots_strictly_inside(q, c.lo) != below) {
        numeric_ok = false;
        break;
      }
      below += c.count;
      if (roots_strictly_inside(q, c.hi) != below) {
        numeric_ok = false;
        break;
      }
    }
  }
  if (!numeric_ok) seeds = {{Rational(0), pow2(cauchy_bound_exponent(q)), d}};
  split_clusters(q, std::move(seeds), width, out);
  return out;
}

}  // namespace detail

/// All root moduli of p with multiplicity, as clusters of width <= width,
/// sorted by decreasing upper end. Zero roots form a [0, 0] cluster.
inline std::vector<ModulusCluster> modulus_spectrum(const IntPolynomial& p, const Rational& width) {
  if (p.is_zero()) throw InvalidInput("modulus_spectrum: zero polynomial");
  if (width <= 0) throw InvalidInput("modulus_spectrum: width must be positive");
  std::vector<ModulusCluster> out;
  const int zeros = p.zero_root_multiplicity();
  if (zeros > 0) out.push_back({Rational(0), Rational(0), zeros});
  const auto parts = squarefree_decomposition(p.shift_down(zeros));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (auto c : detail::squarefree_spectrum(parts[i].primitive_part(), width)) {
      c.count *= static_cast<int>(i) + 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const ModulusCluster& a, const ModulusCluster& b) {
    if (a.hi != b.hi) return a.hi > b.hi;
    return a.lo > b.lo;
  });
  return out;
}

/// Enclosure of the product of the k largest root moduli (with multiplicity):
/// the i-th largest modulus lies between the i-th largest cluster ends.
inline Interval top_moduli_product(const std::vector<ModulusCluster>& spectrum, int k) {
  std::vector<Rational> los;
  std::vector<Rational> his;
  for (const auto& c : spectrum) {
    for (int i = 0; i < c.count; ++i) {
      los.push_back(c.lo);
      his.push_back(c.hi);
    }
  }
  if (k < 0 || static_cast<std::size_t>(k) > his.size()) throw InvalidInput("top_moduli_product: k out of range");
  std::sort(los.begin(), los.end(), std::greater<>());
  std::sort(his.begin(), his.end(), std::greater<>());
  Interval out{Rational(1), Rational(1)};
  for (int i = 0; i < k; ++i) {
    out.lo *= los[static_cast<std::size_t>(i)];
    out.hi *= his[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace tordyn
