#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tordyn/numerics/real_algebraic.hpp"

namespace tordyn {

/// Degree cap of factor_over_integers unless configured otherwise.
inline constexpr int kDefaultFactorDegreeBound = 24;

struct Factor {
  IntPolynomial poly;  // primitive, positive leading coefficient
  int multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// p = unit * prod factors[i].poly ^ factors[i].multiplicity.
struct Factorization {
  Integer unit = 1;  // signed content
  std::vector<Factor> factors;

  bool irreducible() const { return factors.size() == 1 && factors.front().multiplicity == 1; }

  IntPolynomial expand() const {
    IntPolynomial out = IntPolynomial::constant(unit);
    for (const auto& f : factors) out *= pow(f.poly, static_cast<unsigned>(f.multiplicity));
    return out;
  }
};

namespace detail {

// Dense polynomials over Z/pZ, p < 2^31, ascending coefficients, trimmed.
using ModPoly = std::vector<std::uint64_t>;

struct ModField {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  ModPoly reduce(const IntPolynomial& f) const {
    ModPoly out;
    const Integer pz(static_cast<unsigned long>(p));
    for (const auto& c : f.coeffs()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
      out.push_back(r.get_ui());
    }
    trim(out);
    return out;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
    trim(out);
    return out;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
  }

  // quotient and remainder of a by b (b nonzero)
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    ModPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    const std::uint64_t lc_inv = inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      const std::size_t shift = a.size() - b.size();
      const std::uint64_t c = mul(a.back(), lc_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = sub(a[i + shift], mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }

  ModPoly mod(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly monic(ModPoly a) const {
    if (a.empty()) return a;
    const std::uint64_t c = inv(a.back());
    for (auto& x : a) x = mul(x, c);
    return a;
  }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // extended gcd: s*a + t*b = g (monic)
  void xgcd(const ModPoly& a, const ModPoly& b, ModPoly& g, ModPoly& s, ModPoly& t) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly ns = sub(s0, mul(q, s1));
      ModPoly nt = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(ns);
      t0 = std::move(t1);
      t1 = std::move(nt);
    }
    const std::uint64_t c = inv(r0.back());
    for (auto& x : r0) x = mul(x, c);
    for (auto& x : s0) x = mul(x, c);
    for (auto& x : t0) x = mul(x, c);
    g = r0;
    s = s0;
    t = t0;
  }

  ModPoly powmod(ModPoly base, Integer e, const ModPoly& m) const {
    ModPoly r{1};
    base = mod(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mod(mul(r, base), m);
      e >>= 1;
      if (e > 0) base = mod(mul(base, base), m);
    }
    return r;
  }

  ModPoly derivative(const ModPoly& a) const {
    ModPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p));
    trim(out);
    return out;
  }

  // distinct-degree factorization of a monic square-free polynomial
  std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f) const {
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x{0, 1};
    ModPoly h = x;
    int d = 0;
    while (f.size() > 1) {
      ++d;
      if (2 * d > static_cast<int>(f.size()) - 1) {
        out.emplace_back(f, static_cast<int>(f.size()) - 1);
        break;
      }
      h = powmod(h, Integer(static_cast<unsigned long>(p)), f);
      ModPoly g = gcd(f, sub(h, x));
      if (g.size() > 1) {
        out.emplace_back(g, d);
        f = divmod(f, g).first;
        h = mod(h, f);
      }
    }
    return out;
  }

  // equal-degree splitting (Cantor-Zassenhaus), p odd
  void equal_degree(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) const {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
      out.push_back(f);
      return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
      ModPoly a(static_cast<std::size_t>(n), 0);
      for (auto& c : a) c = rng() % p;
      trim(a);
      if (a.size() <= 1) continue;
      ModPoly g = gcd(f, a);
      if (g.size() > 1 && g.size() < f.size()) {
        equal_degree(g, d, rng, out);
        equal_degree(divmod(f, g).first, d, rng, out);
        return;
      }
      ModPoly b = powmod(a, e, f);
      if (b.empty()) continue;
      b[0] = sub(b[0], 1);
      trim(b);
      g = gcd(f, b);
      if (g.size() > 1 && g.size() < f.size()) {
        equal_degree(g, d, rng, out);
        equal_degree(divmod(f, g).first, d, rng, out);
        return;
      }
    }
  }
};

// Integer polynomial helpers modulo m (coefficients kept in [0, m)).
inline IntPolynomial mod_reduce(const IntPolynomial& a, const Integer& m) {
  std::vector<Integer> out;
  for (const auto& c : a.coeffs()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    out.push_back(r);
  }
  return IntPolynomial(std::move(out));
}

// quotient/remainder by a monic polynomial modulo m
inline std::pair<IntPolynomial, IntPolynomial> mod_divmod_monic(const IntPolynomial& a, const IntPolynomial& b,
                                                                const Integer& m) {
  std::vector<Integer> r = mod_reduce(a, m).coeffs();
  const int db = b.degree();
  std::vector<Integer> q;
  if (static_cast<int>(r.size()) - 1 >= db) q.assign(r.size() - static_cast<std::size_t>(db), Integer(0));
  for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
    Integer c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) {
      Integer& t = r[static_cast<std::size_t>(k - db + i)];
      t -= c * b.coeff(i);
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(std::max(0, std::min(db, static_cast<int>(r.size())))));
  return {mod_reduce(IntPolynomial(std::move(q)), m), mod_reduce(IntPolynomial(std::move(r)), m)};
}

inline IntPolynomial lift_modpoly(const ModPoly& a) {
  std::vector<Integer> out;
  for (auto c : a) out.emplace_back(static_cast<unsigned long>(c));
  return IntPolynomial(std::move(out));
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// Produces the same relations modulo m^2.
inline void hensel_step(const IntPolynomial& f, IntPolynomial& g, IntPolynomial& h, IntPolynomial& s,
                        IntPolynomial& t, const Integer& m) {
  const Integer m2 = m * m;
  const IntPolynomial e = mod_reduce(f - g * h, m2);
  auto [q, r] = mod_divmod_monic(s * e, h, m2);
  IntPolynomial g2 = mod_reduce(g + t * e + q * g, m2);
  IntPolynomial h2 = mod_reduce(h + r, m2);
  const IntPolynomial b = mod_reduce(s * g2 + t * h2 - IntPolynomial::constant(1), m2);
  auto [c, d] = mod_divmod_monic(s * b, h2, m2);
  s = mod_reduce(s - d, m2);
  t = mod_reduce(t - t * b - c * g2, m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = prod(factors) mod p (f monic modulo the target, factors monic)
// to a factorization modulo `target` (a power of p reached by squaring).
inline std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f, const std::vector<ModPoly>& factors,
                                              const ModField& fp, const Integer& target) {
  if (factors.size() == 1) return {mod_reduce(f, target)};
  const std::size_t half = factors.size() / 2;
  ModPoly g0{1}, h0{1};
  for (std::size_t i = 0; i < half; ++i) g0 = fp.mul(g0, factors[i]);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = fp.mul(h0, factors[i]);
  ModPoly gg, s0, t0;
  fp.xgcd(g0, h0, gg, s0, t0);
  IntPolynomial g = lift_modpoly(g0);
  IntPolynomial h = lift_modpoly(h0);
  IntPolynomial s = lift_modpoly(s0);
  IntPolynomial t = lift_modpoly(t0);
  Integer m(static_cast<unsigned long>(fp.p));
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  g = mod_reduce(g, target);
  h = mod_reduce(h, target);
  std::vector<ModPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<ModPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  std::vector<IntPolynomial> out = hensel_lift(g, left, fp, target);
  std::vector<IntPolynomial> rest = hensel_lift(h, right, fp, target);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

inline IntPolynomial symmetric_mod(const IntPolynomial& a, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> out;
  for (const auto& c : a.coeffs()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    out.push_back(r);
  }
  return IntPolynomial(std::move(out));
}

inline bool is_prime_small(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Irreducible factors of a primitive square-free polynomial with positive
// leading coefficient (Zassenhaus: modular factorization, Hensel lifting,
// subset recombination).
inline std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const IntPolynomial fd = f.derivative();

  // pick the prime with the fewest modular factors among a handful
  std::uint64_t best_p = 0;
  std::vector<std::pair<ModPoly, int>> best_ddf;
  std::size_t best_count = 0;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 6; p += 2) {
    if (!is_prime_small(p)) continue;
    const ModField fp{p};
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), p) == 0) continue;
    const ModPoly fm = fp.reduce(f);
    if (fp.gcd(fm, fp.derivative(fm)).size() > 1) continue;
    ++tried;
    auto ddf = fp.distinct_degree(fp.monic(fm));
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += (g.size() - 1) / static_cast<std::size_t>(d);
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_ddf = std::move(ddf);
      best_count = count;
    }
    if (count == 1) break;
  }
  if (best_count == 1) return {f};

  const ModField fp{best_p};
  std::mt19937_64 rng(0x5eed5eedULL + best_p);
  std::vector<ModPoly> modular;
  for (const auto& [g, d] : best_ddf) fp.equal_degree(g, d, rng, modular);
  std::sort(modular.begin(), modular.end());

  // Mignotte-style coefficient bound for factors, times the leading coefficient
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = (norm << static_cast<unsigned>(n)) * abs(f.leading()) * 2 + 1;
  Integer target(static_cast<unsigned long>(best_p));
  while (target <= bound) target *= target;

  const Integer lc = f.leading();
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
  const IntPolynomial f_monic = mod_reduce(f * lc_inv, target);
  std::vector<IntPolynomial> lifted = hensel_lift(f_monic, modular, fp, target);

  std::vector<IntPolynomial> result;
  IntPolynomial rest = f;
  std::vector<IntPolynomial> remaining = lifted;
  std::size_t subset_size = 1;
  while (2 * subset_size <= remaining.size()) {
    bool found = false;
    const std::size_t r = remaining.size();
    std::vector<std::size_t> idx(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) idx[i] = i;
    while (true) {
      IntPolynomial cand = IntPolynomial::constant(rest.leading());
      for (auto i : idx) cand = mod_reduce(cand * remaining[i], target);
      cand = symmetric_mod(cand, target).primitive_part();
      if (cand.degree() >= 1 && divides(cand, rest)) {
        result.push_back(cand);
        rest = exact_divide(rest, cand).primitive_part();
        std::vector<IntPolynomial> keep;
        for (std::size_t i = 0; i < r; ++i) {
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
        }
        remaining = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t k = subset_size;
      while (k > 0 && idx[k - 1] == r - subset_size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (rest.degree() >= 1) result.push_back(rest.primitive_part());
  return result;
}

}  // namespace detail

/// Complete factorization over the integers: square-free decomposition,
/// then modular factorization with Hensel lifting and recombination.
/// Inputs above `degree_bound` are refused rather than guessed at.
inline Factorization factor_over_integers(const IntPolynomial& p, int degree_bound = kDefaultFactorDegreeBound) {
  if (p.is_zero()) throw InvalidInput("factor_over_integers: zero polynomial");
  if (p.degree() > degree_bound) {
    throw CapabilityError("factor_over_integers: degree " + std::to_string(p.degree()) + " exceeds bound " +
                          std::to_string(degree_bound) + "; irreducibility undecided");
  }
  Factorization out;
  out.unit = p.content();
  if (p.leading() < 0) out.unit = -out.unit;
  const std::vector<IntPolynomial> parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    for (auto& q : detail::factor_squarefree(parts[i].primitive_part())) {
      out.factors.push_back({q.primitive_part(), static_cast<int>(i) + 1});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

inline bool is_irreducible(const IntPolynomial& p, int degree_bound = kDefaultFactorDegreeBound) {
  // irreducibility over the rationals: the content is a unit there
  if (p.degree() < 1) return false;
  return factor_over_integers(p.primitive_part(), degree_bound).irreducible();
}

/// Same number, described by its minimal polynomial.
inline RealAlgebraic minimized(const RealAlgebraic& r, int degree_bound = kDefaultFactorDegreeBound) {
  if (r.is_rational()) return r;
  const Interval& iv = r.interval();
  for (const auto& f : factor_over_integers(r.polynomial(), degree_bound).factors) {
    if (SturmSequence(f.poly).count_in(iv.lo, iv.hi) == 1) return RealAlgebraic(f.poly, iv);
  }
  throw std::logic_error("minimized: no factor vanishes on the isolating interval");
}

}  // namespace tordyn
