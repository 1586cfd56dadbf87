#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tordyn/core/numbers.hpp"

namespace tordyn {

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms are keyed by exponent vectors; the largest key in lex order
/// (variable 0 most significant) is the leading term.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const Rational& c) : nvars_(nvars) { add_term(Exponents(nvars, 0), c); }

  static MPoly var(std::size_t nvars, std::size_t i, unsigned e = 1) {
    MPoly p(nvars);
    Exponents ex(nvars, 0);
    ex[i] = e;
    p.add_term(ex, 1);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0); }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    a.adopt(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    a.adopt(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend MPoly operator-(const MPoly& a) {
    MPoly out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [e1, c1] : a.terms_) {
      for (const auto& [e2, c2] : b.terms_) {
        Exponents e(out.nvars_, 0);
        for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
        for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
        out.add_term(e, c1 * c2);
      }
    }
    return out;
  }
  friend MPoly operator*(MPoly a, const Rational& s) {
    if (s == 0) return MPoly(a.nvars_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  /// Coefficients of v^k, k = 0..deg_v, with v removed from the exponents.
  std::vector<MPoly> coefficients_in(std::size_t v) const {
    std::vector<MPoly> out(degree_in(v) + 1, MPoly(nvars_));
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[v] = 0;
      out[e[v]].add_term(f, c);
    }
    return out;
  }

  static MPoly from_coefficients(const std::vector<MPoly>& cs, std::size_t v, std::size_t nvars) {
    MPoly out(nvars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      for (const auto& [e, c] : cs[k].terms_) {
        Exponents f = e;
        f[v] += static_cast<unsigned>(k);
        out.add_term(f, c);
      }
    }
    return out;
  }

  /// Value at a rational point.
  Rational eval(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
      }
      sum += t;
    }
    return sum;
  }

  /// Replaces variable v by the polynomial q.
  MPoly substitute(std::size_t v, const MPoly& q) const {
    const auto cs = coefficients_in(v);
    MPoly out(nvars_);
    MPoly power(nvars_, 1);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      out = out + cs[k] * power;
      power = power * q;
    }
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names.at(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const bool negative = c < 0;
      const Rational mag = abs(c);
      if (!s.empty()) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      if (mono.empty()) {
        s += mag.get_str();
      } else if (mag == 1) {
        s += mono;
      } else {
        s += mag.get_str() + "*" + mono;
      }
    }
    return s;
  }

 private:
  static unsigned total(const Exponents& e) {
    unsigned t = 0;
    for (auto x : e) t += x;
    return t;
  }

  void adopt(const MPoly& b) {
    if (b.nvars_ > nvars_) {
      Terms widened;
      for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.resize(b.nvars_, 0);
        widened.emplace(f, c);
      }
      terms_ = std::move(widened);
      nvars_ = b.nvars_;
    }
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Exact quotient a / b, or nothing when b does not divide a.
inline std::optional<MPoly> exact_quotient(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  MPoly q(a.nvars());
  MPoly r = a;
  const auto& lb = b.leading_exponents();
  const Rational lcb = b.leading_coefficient();
  while (!r.is_zero()) {
    const auto lr = r.leading_exponents();
    MPoly::Exponents d(lr.size());
    for (std::size_t i = 0; i < lr.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      d[i] = lr[i] - lb[i];
    }
    MPoly t(a.nvars());
    t.add_term(d, r.leading_coefficient() / lcb);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

/// Scaled so the leading coefficient is 1.
inline MPoly monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading_coefficient());
}

inline MPoly gcd(const MPoly& a, const MPoly& b);

namespace detail {

inline std::optional<std::size_t> main_variable(const MPoly& a, const MPoly& b) {
  for (std::size_t v = std::max(a.nvars(), b.nvars()); v-- > 0;) {
    if ((v < a.nvars() && a.degree_in(v) > 0) || (v < b.nvars() && b.degree_in(v) > 0)) return v;
  }
  return std::nullopt;
}

inline MPoly content_in(const MPoly& p, std::size_t v) {
  MPoly g(p.nvars());
  for (const auto& c : p.coefficients_in(v)) {
    if (!c.is_zero()) g = gcd(g, c);
  }
  return g;
}

inline MPoly primitive_in(const MPoly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return *exact_quotient(p, content_in(p, v));
}

// lc(b)^(da-db+1) a mod b as polynomials in v
inline MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t v) {
  const unsigned db = b.degree_in(v);
  const MPoly lb = b.coefficients_in(v).back();
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const unsigned dr = r.degree_in(v);
    const MPoly lr = r.coefficients_in(v).back();
    r = r * lb - lr * MPoly::var(a.nvars(), v, dr - db) * b;
  }
  return r;
}

}  // namespace detail

/// Monic gcd over Q, by recursion on the main variable with primitive
/// pseudo-remainder sequences.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
  const std::size_t n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const auto v = detail::main_variable(a, b);
  if (!v) return MPoly(n, 1);
  const MPoly ca = detail::content_in(a, *v);
  const MPoly cb = detail::content_in(b, *v);
  const MPoly c = gcd(ca, cb);
  MPoly p = *exact_quotient(a, ca);
  MPoly q = *exact_quotient(b, cb);
  if (p.degree_in(*v) < q.degree_in(*v)) std::swap(p, q);
  while (!q.is_zero() && q.degree_in(*v) > 0) {
    MPoly r = detail::pseudo_remainder(p, q, *v);
    p = std::move(q);
    q = detail::primitive_in(r, *v);
  }
  // q == 0: p is the gcd of the primitive parts; q constant in v: they are coprime
  const MPoly g = q.is_zero() ? detail::primitive_in(p, *v) : MPoly(n, 1);
  return monic(c * g);
}

/// Quotient of two polynomials in lowest terms, denominator monic.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(MPoly num) : num_(std::move(num)), den_(num_.nvars(), 1) {}
  RationalFunction(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
    reduce();
  }

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw InvalidInput("division by the zero rational function");
    return RationalFunction(x.num_ * y.den_, x.den_ * y.num_);
  }

  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  Rational eval(const std::vector<Rational>& point) const {
    const Rational d = den_.eval(point);
    if (d == 0) throw InvalidInput("rational function pole");
    return num_.eval(point) / d;
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = MPoly(den_.nvars(), 1);
      return;
    }
    const MPoly g = gcd(num_, den_);
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
    const Rational lc = den_.leading_coefficient();
    num_ = num_ * (1 / lc);
    den_ = den_ * (1 / lc);
  }

  MPoly num_;
  MPoly den_;
};

}  // namespace tordyn
