#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tordyn/core/numbers.hpp"

namespace tordyn {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The zero polynomial has no stored
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

  static IntPolynomial monomial(const Integer& c, int k) {
    std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPolynomial(std::move(v));
  }

  static IntPolynomial x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const Integer& leading() const { return coeffs_.back(); }

  bool is_monic() const { return !is_zero() && leading() == 1; }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const Integer& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }

  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
      }
    }
    return IntPolynomial(std::move(out));
  }

  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
  }

  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Content removed and leading coefficient made positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
  }

  Integer eval(const Integer& v) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  Rational eval(const Rational& v) const {
    // homogeneous Horner over numerator/denominator keeps everything integral
    if (is_zero()) return 0;
    const Integer& n = v.get_num();
    const Integer& d = v.get_den();
    Integer acc = 0;
    Integer dpow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * n + *it * dpow;
      dpow *= d;
    }
    // acc = d^deg * p(v); dpow = d^(deg+1)
    return make_rational(acc * d, dpow);
  }

  /// Sign of p(v) without forming the rational value.
  int sign_at(const Rational& v) const {
    if (is_zero()) return 0;
    const Integer& n = v.get_num();
    const Integer& d = v.get_den();
    Integer acc = 0;
    Integer dpow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * n + *it * dpow;
      dpow *= d;
    }
    return sgn(acc);
  }

  long double eval_long_double(long double v) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + static_cast<long double>(it->get_d());
    return acc;
  }

  /// p(-x).
  IntPolynomial negate_variable() const {
    IntPolynomial out = *this;
    for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
    return out;
  }

  /// x^deg * p(1/x).
  IntPolynomial reversed() const {
    std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(out));
  }

  /// Primitive integer polynomial proportional (by a positive factor) to
  /// p(r*x) for rational r != 0.
  IntPolynomial scale_variable(const Rational& r) const {
    if (is_zero()) return {};
    const Integer& n = r.get_num();
    const Integer& d = r.get_den();
    const std::size_t deg = coeffs_.size() - 1;
    std::vector<Integer> out(coeffs_.size());
    Integer npow = 1;
    for (std::size_t i = 0; i <= deg; ++i) {
      Integer dpow;
      mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), deg - i);
      out[i] = coeffs_[i] * npow * dpow;
      npow *= n;
    }
    IntPolynomial p(std::move(out));
    const Integer g = p.content();
    for (auto& c : p.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
  }

  /// Multiplicity of the root 0.
  int zero_root_multiplicity() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
    return is_zero() ? 0 : k;
  }

  IntPolynomial shift_down(int k) const {
    if (k <= 0) return *this;
    if (k > degree()) return {};
    return IntPolynomial(std::vector<Integer>(coeffs_.begin() + k, coeffs_.end()));
  }

  /// Human-readable expression, e.g. "x^3-3*x+1".
  std::string to_expression(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Integer& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (c < 0) {
        os << '-';
      } else if (!first) {
        os << '+';
      }
      first = false;
      if (k == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    return os.str();
  }

  /// Canonical serialization: ascending coefficient list, e.g. "[1,-3,0,1]".
  std::string to_canonical() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += coeffs_[i].get_str();
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

/// Pseudo-remainder scaled by a positive factor: returns r with
/// c*a = q*b + r, c > 0, deg r < deg b.
inline IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("pseudo-division by the zero polynomial");
  std::vector<Integer> r = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  const Integer lb_abs = abs(lb);
  const int sign_b = sgn(lb);
  int dr = a.degree();
  while (dr >= db) {
    // r <- |lb|*r - sign(lb)*r_lead*x^(dr-db)*b
    const Integer lead = r[static_cast<std::size_t>(dr)];
    for (auto& c : r) c *= lb_abs;
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) {
      Integer t = lead * b.coeffs()[static_cast<std::size_t>(i)];
      if (sign_b > 0) {
        r[static_cast<std::size_t>(i + shift)] -= t;
      } else {
        r[static_cast<std::size_t>(i + shift)] += t;
      }
    }
    r.resize(static_cast<std::size_t>(dr));
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  return IntPolynomial(std::move(r));
}

/// Exact quotient a / b in Z[x]; throws if b does not divide a.
inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) return {};
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) throw InvalidInput("polynomial division is not exact");
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  for (int k = da - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw InvalidInput("polynomial division is not exact");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (const auto& c : r) {
    if (c != 0) throw InvalidInput("polynomial division is not exact");
  }
  return IntPolynomial(std::move(q));
}

inline bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  return positive_pseudo_remainder(a, b).is_zero();
}

/// Greatest common divisor in Z[x], primitive part times the gcd of the
/// contents, with positive leading coefficient.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Integer cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part() * cont;
}

/// Product of the distinct irreducible factors, primitive.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("square-free part of the zero polynomial");
  if (p.degree() <= 0) return IntPolynomial::constant(1);
  const IntPolynomial g = gcd(p, p.derivative()).primitive_part();
  return exact_divide(p.primitive_part(), g).primitive_part();
}

inline bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() <= 0;
}

/// Yun's square-free decomposition of the primitive part of p:
/// pp(p) = prod_i parts[i-1]^i with pairwise coprime square-free parts.
inline std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("square-free decomposition of the zero polynomial");
  std::vector<IntPolynomial> parts;
  IntPolynomial f = p.primitive_part();
  if (f.degree() <= 0) return parts;
  IntPolynomial a = gcd(f, f.derivative()).primitive_part();
  IntPolynomial b = exact_divide(f, a);
  IntPolynomial c = exact_divide(f.derivative(), a);
  IntPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d).primitive_part();
    parts.push_back(a);
    IntPolynomial nb = exact_divide(b, a);
    c = exact_divide(d, a);
    b = nb;
    d = c - b.derivative();
  }
  while (!parts.empty() && parts.back().degree() <= 0) parts.pop_back();
  for (auto& q : parts) q = q.primitive_part();
  return parts;
}

/// Determinant of a square integer matrix (row-major) by Bareiss
/// fraction-free elimination.
inline Integer bareiss_determinant(std::vector<Integer> m, std::size_t n) {
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k * n + k];
  }
  return sign > 0 ? m[n * n - 1] : Integer(-m[n * n - 1]);
}

/// Resultant via the Sylvester determinant.
inline Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.leading().get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<Integer> s(size * size);
  // rows hold descending coefficients
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r) * size + static_cast<std::size_t>(r + i)] = a.coeff(m - i);
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) {
      s[static_cast<std::size_t>(n + r) * size + static_cast<std::size_t>(r + i)] = b.coeff(n - i);
    }
  }
  return bareiss_determinant(std::move(s), size);
}

/// Cauchy root bound as a power of two: every complex root z of p
/// satisfies |z| < 2^k.
inline long cauchy_bound_exponent(const IntPolynomial& p) {
  if (p.degree() < 1) return 0;
  Integer lead = abs(p.leading());
  Integer top = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Integer c = abs(p.coeff(i));
    if (c > top) top = c;
  }
  // bound 1 + top/|lead| < 2^k
  Rational bound = make_rational(top, lead) + 1;
  long k = 0;
  while (pow2(k) <= bound) ++k;
  return k;
}

}  // namespace tordyn
