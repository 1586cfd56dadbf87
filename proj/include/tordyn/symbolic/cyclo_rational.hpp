#pragma once

#include <string>

#include "tordyn/core/numbers.hpp"

namespace tordyn {

/// a + b*w in Q(w), w^2 = -1 - w.
class CycloRational {
 public:
  CycloRational() = default;
  CycloRational(long a) : a_(a) {}
  CycloRational(Rational a) : a_(std::move(a)) {}
  CycloRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycloRational omega() { return CycloRational(0, 1); }

  /// w^k for any integer k (w^3 = 1).
  static CycloRational omega_power(long k) {
    switch (((k % 3) + 3) % 3) {
      case 0: return CycloRational(1);
      case 1: return omega();
      default: return CycloRational(-1, -1);  // w^2 = -1 - w
    }
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  CycloRational conjugate() const { return CycloRational(a_ - b_, -b_); }
  Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

  CycloRational inverse() const {
    const Rational n = norm();
    if (n == 0) throw InvalidInput("inverse of zero in Q(w)");
    const CycloRational c = conjugate();
    return CycloRational(c.a_ / n, c.b_ / n);
  }

  friend CycloRational operator+(const CycloRational& x, const CycloRational& y) {
    return CycloRational(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend CycloRational operator-(const CycloRational& x, const CycloRational& y) {
    return CycloRational(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend CycloRational operator-(const CycloRational& x) { return CycloRational(-x.a_, -x.b_); }
  friend CycloRational operator*(const CycloRational& x, const CycloRational& y) {
    const Rational bd = x.b_ * y.b_;
    return CycloRational(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
  }
  friend CycloRational operator/(const CycloRational& x, const CycloRational& y) { return x * y.inverse(); }

  CycloRational& operator+=(const CycloRational& y) { return *this = *this + y; }
  CycloRational& operator-=(const CycloRational& y) { return *this = *this - y; }
  CycloRational& operator*=(const CycloRational& y) { return *this = *this * y; }

  friend bool operator==(const CycloRational& x, const CycloRational& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    std::string bpart = b_ == 1 ? "w" : b_ == -1 ? "-w" : b_.get_str() + "*w";
    if (a_ == 0) return bpart;
    return "(" + a_.get_str() + (b_ > 0 ? "+" : "") + bpart + ")";
  }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
};

}  // namespace tordyn
