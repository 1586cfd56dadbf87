#pragma once

#include <array>
#include <map>
#include <string>

#include "tordyn/symbolic/cyclo_rational.hpp"

namespace tordyn {

/// Exponents of x1 x2 x3 y1 y2 y3, in that order.
using Monomial = std::array<unsigned, 6>;

inline unsigned monomial_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3] + m[4] + m[5]; }
inline unsigned x_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }
inline unsigned y_degree(const Monomial& m) { return m[3] + m[4] + m[5]; }

inline std::string monomial_to_string(const Monomial& m) {
  static const char* names[6] = {"x1", "x2", "x3", "y1", "y2", "y3"};
  std::string s;
  for (int v = 0; v < 6; ++v) {
    if (m[static_cast<std::size_t>(v)] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (m[static_cast<std::size_t>(v)] > 1) s += "^" + std::to_string(m[static_cast<std::size_t>(v)]);
  }
  return s.empty() ? "1" : s;
}

/// Polynomial in x1..x3, y1..y3 over Q(w), no relations applied.
class RawPolynomial {
 public:
  using Terms = std::map<Monomial, CycloRational>;

  RawPolynomial() = default;
  RawPolynomial(const CycloRational& c) { add_term({}, c); }
  RawPolynomial(long c) : RawPolynomial(CycloRational(c)) {}

  static RawPolynomial monomial(const Monomial& m, const CycloRational& c = 1) {
    RawPolynomial p;
    p.add_term(m, c);
    return p;
  }
  static RawPolynomial x(int k, unsigned e = 1) { return var(k - 1, e); }
  static RawPolynomial y(int k, unsigned e = 1) { return var(k + 2, e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const CycloRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend RawPolynomial operator+(RawPolynomial p, const RawPolynomial& q) {
    for (const auto& [m, c] : q.terms_) p.add_term(m, c);
    return p;
  }
  friend RawPolynomial operator-(RawPolynomial p, const RawPolynomial& q) {
    for (const auto& [m, c] : q.terms_) p.add_term(m, -c);
    return p;
  }
  friend RawPolynomial operator-(const RawPolynomial& p) { return RawPolynomial() - p; }
  friend RawPolynomial operator*(const RawPolynomial& p, const RawPolynomial& q) {
    RawPolynomial out;
    for (const auto& [m1, c1] : p.terms_) {
      for (const auto& [m2, c2] : q.terms_) {
        Monomial m;
        for (std::size_t v = 0; v < 6; ++v) m[v] = m1[v] + m2[v];
        out.add_term(m, c1 * c2);
      }
    }
    return out;
  }

  friend bool operator==(const RawPolynomial& p, const RawPolynomial& q) { return p.terms_ == q.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string coef = c.to_string();
      const bool unit = c == CycloRational(1) || c == CycloRational(-1);
      const bool negative = c.b() == 0 && c.a() < 0;
      if (!s.empty()) s += negative ? " - " : " + ";
      else if (negative) s += "-";
      if (negative) coef = (-c).to_string();
      const std::string mono = monomial_to_string(m);
      if (mono == "1") {
        s += coef;
      } else if (unit) {
        s += mono;
      } else {
        s += coef + "*" + mono;
      }
    }
    return s;
  }

 private:
  static RawPolynomial var(int index, unsigned e) {
    Monomial m{};
    m[static_cast<std::size_t>(index)] = e;
    return monomial(m);
  }

  Terms terms_;
};

/// Element of Q(w)[x1..x3, y1..y3] / (y_k^2 - x_k^3 + 1) in normal form:
/// every x-exponent is at most 2.
class QuotientElement {
 public:
  QuotientElement() = default;

  const RawPolynomial& polynomial() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  friend QuotientElement normal_form(const RawPolynomial& e);

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    return QuotientElement(a.p_ + b.p_);
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    return QuotientElement(a.p_ - b.p_);
  }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) { return a.p_ == b.p_; }

  std::string to_string() const { return p_.to_string(); }

 private:
  explicit QuotientElement(RawPolynomial p) : p_(std::move(p)) {}
  RawPolynomial p_;
};

namespace detail {

inline Integer binomial_coefficient(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// normal form of one monomial: x_k^{3q+r} = x_k^r (y_k^2 + 1)^q
inline void add_reduced_monomial(RawPolynomial& out, const Monomial& m, const CycloRational& c) {
  std::map<Monomial, Integer> acc{{Monomial{}, Integer(1)}};
  for (std::size_t k = 0; k < 3; ++k) {
    const unsigned q = m[k] / 3;
    const unsigned r = m[k] % 3;
    std::map<Monomial, Integer> next;
    for (const auto& [base, coef] : acc) {
      for (unsigned i = 0; i <= q; ++i) {
        Monomial t = base;
        t[k] += r;
        t[k + 3] += 2 * i;
        next[t] += coef * binomial_coefficient(q, i);
      }
    }
    acc = std::move(next);
  }
  for (const auto& [t, coef] : acc) {
    Monomial full = t;
    for (std::size_t k = 3; k < 6; ++k) full[k] += m[k];
    out.add_term(full, c * CycloRational(Rational(coef)));
  }
}

}  // namespace detail

/// Reduces x_k^3 -> y_k^2 + 1 until every x-exponent is at most 2.
inline QuotientElement normal_form(const RawPolynomial& e) {
  RawPolynomial out;
  for (const auto& [m, c] : e.terms()) {
    if (m[0] < 3 && m[1] < 3 && m[2] < 3) {
      out.add_term(m, c);
    } else {
      detail::add_reduced_monomial(out, m, c);
    }
  }
  return QuotientElement(std::move(out));
}

inline QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) { return normal_form(a.p_ * b.p_); }

/// g^k with g: x_j -> w x_j, y_j -> -y_j.
inline QuotientElement act(const QuotientElement& e, long k) {
  RawPolynomial out;
  for (const auto& [m, c] : e.polynomial().terms()) {
    const long xs = static_cast<long>(x_degree(m));
    const long ys = static_cast<long>(y_degree(m));
    CycloRational f = CycloRational::omega_power(k * xs);
    if ((((k % 2) + 2) % 2) * (ys % 2) == 1) f = -f;
    out.add_term(m, c * f);
  }
  return normal_form(out);
}

inline bool is_invariant(const QuotientElement& e) { return act(e, 1) == e; }

/// Variable renaming (index 0..5 = x1..x3, y1..y3).
inline RawPolynomial rename_variable(const RawPolynomial& e, int from, int to) {
  RawPolynomial out;
  for (const auto& [m, c] : e.terms()) {
    Monomial t = m;
    t[static_cast<std::size_t>(to)] += t[static_cast<std::size_t>(from)];
    t[static_cast<std::size_t>(from)] = 0;
    out.add_term(t, c);
  }
  return out;
}

inline QuotientElement substitute_variable(const QuotientElement& e, int from, int to) {
  return normal_form(rename_variable(e.polynomial(), from, to));
}

}  // namespace tordyn
