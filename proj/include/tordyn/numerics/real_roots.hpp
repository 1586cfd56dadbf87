#pragma once

#include <optional>
#include <vector>

#include "tordyn/numerics/int_polynomial.hpp"

namespace tordyn {

/// Signed remainder sequence p0, p1, -rem(p0, p1), ... with every term
/// rescaled by positive constants. With p1 = p0' this is the Sturm
/// sequence; with arbitrary p1 it computes Cauchy indices of p1/p0.
class SturmSequence {
 public:
  SturmSequence(const IntPolynomial& p0, const IntPolynomial& p1) {
    seq_.push_back(p0);
    if (p1.is_zero()) return;
    seq_.push_back(p1);
    while (true) {
      const IntPolynomial& a = seq_[seq_.size() - 2];
      const IntPolynomial& b = seq_.back();
      if (b.degree() <= 0) break;
      IntPolynomial r = positive_pseudo_remainder(a, b);
      if (r.is_zero()) break;
      // positive rescaling keeps sign information intact
      const Integer c = r.content();
      IntPolynomial next = -r;
      if (c > 1) {
        std::vector<Integer> v = next.coeffs();
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        next = IntPolynomial(std::move(v));
      }
      seq_.push_back(std::move(next));
    }
  }

  explicit SturmSequence(const IntPolynomial& p) : SturmSequence(p, p.derivative()) {}

  int variations_at(const Rational& v) const {
    int count = 0;
    int last = 0;
    for (const auto& q : seq_) {
      const int s = q.sign_at(v);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  int variations_at_infinity(bool positive) const {
    int count = 0;
    int last = 0;
    for (const auto& q : seq_) {
      if (q.is_zero()) continue;
      int s = sgn(q.leading());
      if (!positive && (q.degree() % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Cauchy index of p1/p0 over the real line.
  int cauchy_index() const { return variations_at_infinity(false) - variations_at_infinity(true); }

  /// Distinct real roots of p0 in (lo, hi] (Sturm sequence built from p0').
  int count_in(const Rational& lo, const Rational& hi) const { return variations_at(lo) - variations_at(hi); }

  int count_all() const { return cauchy_index(); }

  int count_above(const Rational& lo) const { return variations_at(lo) - variations_at_infinity(true); }

  int count_below_or_at(const Rational& hi) const { return variations_at_infinity(false) - variations_at(hi); }

  const std::vector<IntPolynomial>& terms() const { return seq_; }

 private:
  std::vector<IntPolynomial> seq_;
};

/// Rational interval. For isolating intervals, lo == hi marks an exactly
/// known rational root; otherwise the root lies in the open interval and
/// neither endpoint is a root.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  double value() const { return to_double(midpoint()); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Real roots of a polynomial as disjoint sorted isolating intervals with
/// multiplicities; the remaining degree is accounted to non-real roots.
struct RootIsolation {
  std::vector<Interval> intervals;
  std::vector<int> multiplicities;
  int nonreal_roots = 0;

  std::size_t size() const { return intervals.size(); }
};

namespace detail {

/// Isolating intervals for the distinct real roots of a square-free
/// primitive polynomial, in increasing order.
inline std::vector<Interval> isolate_squarefree(const IntPolynomial& q) {
  std::vector<Interval> out;
  if (q.degree() < 1) return out;
  const SturmSequence sturm(q);
  const Rational bound = pow2(cauchy_bound_exponent(q));
  struct Task {
    Rational lo;
    Rational hi;
    int count;
  };
  std::vector<Task> stack;
  const int total = sturm.count_in(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.count == 1) {
      out.push_back({t.lo, t.hi});
      continue;
    }
    Rational mid = (t.lo + t.hi) / 2;
    if (q.sign_at(mid) == 0) {
      // step off an exact root so both halves have non-root endpoints
      Rational delta = (t.hi - t.lo) / 4;
      while (true) {
        const Rational a = mid - delta;
        const Rational b = mid + delta;
        if (q.sign_at(a) != 0 && q.sign_at(b) != 0 && sturm.count_in(a, b) == 1) break;
        delta /= 2;
      }
      out.push_back({mid, mid});
      const Rational a = mid - delta;
      const Rational b = mid + delta;
      const int left = sturm.count_in(t.lo, a);
      const int right = sturm.count_in(b, t.hi);
      if (left > 0) stack.push_back({t.lo, a, left});
      if (right > 0) stack.push_back({b, t.hi, right});
      continue;
    }
    const int left = sturm.count_in(t.lo, mid);
    const int right = t.count - left;
    if (left > 0) stack.push_back({t.lo, mid, left});
    if (right > 0) stack.push_back({mid, t.hi, right});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

/// Halves an isolating interval of a simple root of q (q(hi) != 0).
inline void bisect_once(const IntPolynomial& q, Interval& iv) {
  if (iv.is_point()) return;
  const Rational mid = (iv.lo + iv.hi) / 2;
  const int sm = q.sign_at(mid);
  if (sm == 0) {
    iv = {mid, mid};
    return;
  }
  if (sm == q.sign_at(iv.hi)) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

/// Refines an isolating interval of a simple root of q until its width
/// is at most tol: bisection, accelerated by Newton steps whose landing
/// points are validated by a sign change.
inline void refine(const IntPolynomial& q, Interval& iv, const Rational& tol) {
  if (iv.is_point()) return;
  const IntPolynomial dq = q.derivative();
  int newton_failures = 0;
  while (iv.width() > tol) {
    if (newton_failures < 4 && iv.width() < Rational(1, 1 << 16)) {
      const Rational mid = iv.midpoint();
      const Rational qd = dq.eval(mid);
      if (qd != 0) {
        const Rational w = iv.width();
        Rational guess = mid - q.eval(mid) / qd;
        // landing box of width ~ w^2, dyadic endpoints
        const Rational half = w * w;
        const long neglog = static_cast<long>(mpz_sizeinbase(w.get_den_mpz_t(), 2)) -
                            static_cast<long>(mpz_sizeinbase(w.get_num_mpz_t(), 2));
        const unsigned bits = static_cast<unsigned>(std::max(0L, 2 * neglog + 8));
        Rational a = round_dyadic(guess - half, bits, false);
        Rational b = round_dyadic(guess + half, bits, true);
        if (a > iv.lo && b < iv.hi) {
          const int sa = q.sign_at(a);
          const int sb = q.sign_at(b);
          if (sa == 0) {
            iv = {a, a};
            return;
          }
          if (sb == 0) {
            iv = {b, b};
            return;
          }
          if (sa != sb) {
            iv = {a, b};
            continue;
          }
        }
      }
      ++newton_failures;
    }
    bisect_once(q, iv);
  }
}

}  // namespace detail

/// Isolates every distinct real root of p. Intervals are disjoint, sorted,
/// have dyadic endpoints, and each holds exactly one root (Sturm count 1).
inline RootIsolation isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("isolate_real_roots: zero polynomial");
  RootIsolation iso;
  if (p.degree() < 1) return iso;
  const std::vector<IntPolynomial> parts = squarefree_decomposition(p);
  IntPolynomial sqf = IntPolynomial::constant(1);
  for (const auto& q : parts) sqf *= q;
  sqf = sqf.primitive_part();
  iso.intervals = detail::isolate_squarefree(sqf);
  int real_total = 0;
  for (const auto& iv : iso.intervals) {
    int mult = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].degree() < 1) continue;
      bool has_root;
      if (iv.is_point()) {
        has_root = parts[i].sign_at(iv.lo) == 0;
      } else {
        const SturmSequence s(parts[i]);
        has_root = s.count_in(iv.lo, iv.hi) > 0;
      }
      if (has_root) {
        mult = static_cast<int>(i) + 1;
        break;
      }
    }
    iso.multiplicities.push_back(mult);
    real_total += mult;
  }
  iso.nonreal_roots = p.degree() - real_total;
  return iso;
}

}  // namespace tordyn
