#pragma once

#include <cctype>
#include <string>

#include "tordyn/core/numbers.hpp"

namespace tordyn {

/// Coefficient ring of a torus matrix: Z, Z[i] (i^2 = -1) or Z[w] (w^2 = -1-w).
enum class RingTag { integer, gaussian, eisenstein };

inline const char* ring_name(RingTag t) {
  switch (t) {
    case RingTag::integer: return "z";
    case RingTag::gaussian: return "zi";
    case RingTag::eisenstein: return "zw";
  }
  return "?";
}

inline RingTag parse_ring_tag(const std::string& s) {
  if (s == "z") return RingTag::integer;
  if (s == "zi") return RingTag::gaussian;
  if (s == "zw") return RingTag::eisenstein;
  throw InvalidInput("unknown ring '" + s + "' (expected z, zi or zw)");
}

inline char generator_symbol(RingTag t) { return t == RingTag::gaussian ? 'i' : 'w'; }

/// a + b*mu, mu the adjoined generator of the tag's ring.
class RingElement {
 public:
  RingElement() = default;
  RingElement(Integer a, RingTag tag = RingTag::integer) : a_(std::move(a)), tag_(tag) {}
  RingElement(long a, RingTag tag = RingTag::integer) : a_(a), tag_(tag) {}
  RingElement(Integer a, Integer b, RingTag tag) : a_(std::move(a)), b_(std::move(b)), tag_(tag) {
    if (tag_ == RingTag::integer && b_ != 0) throw InvalidInput("rational-integer entries cannot carry a generator part");
  }

  static RingElement generator(RingTag tag) {
    if (tag == RingTag::integer) throw InvalidInput("the integers have no adjoined generator");
    return RingElement(0, 1, tag);
  }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  RingTag tag() const { return tag_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }

  Integer norm() const {
    switch (tag_) {
      case RingTag::integer: return a_ * a_;
      case RingTag::gaussian: return a_ * a_ + b_ * b_;
      case RingTag::eisenstein: return a_ * a_ - a_ * b_ + b_ * b_;
    }
    return 0;
  }

  RingElement conjugate() const {
    if (tag_ == RingTag::eisenstein) return RingElement(a_ - b_, -b_, tag_);  // conj(w) = w^2 = -1-w
    return RingElement(a_, -b_, tag_);
  }

  bool is_unit() const { return norm() == 1; }

  /// Exact quotient; throws when the division leaves the ring.
  RingElement divided_by(const RingElement& d) const {
    const RingTag t = join(tag_, d.tag_);
    const Integer n = d.norm();
    if (n == 0) throw InvalidInput("division by zero ring element");
    const RingElement num = *this * d.conjugate();
    if (!mpz_divisible_p(num.a_.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.b_.get_mpz_t(), n.get_mpz_t())) {
      throw InvalidInput("inexact ring division");
    }
    return RingElement(num.a_ / n, num.b_ / n, t);
  }

  RingElement inverse() const {
    if (!is_unit()) throw InvalidInput("element " + to_string() + " is not a unit");
    return conjugate();
  }

  RingElement with_tag(RingTag t) const { return RingElement(a_, b_, t); }

  friend RingElement operator+(const RingElement& x, const RingElement& y) {
    return RingElement(x.a_ + y.a_, x.b_ + y.b_, join(x.tag_, y.tag_));
  }
  friend RingElement operator-(const RingElement& x, const RingElement& y) {
    return RingElement(x.a_ - y.a_, x.b_ - y.b_, join(x.tag_, y.tag_));
  }
  friend RingElement operator-(const RingElement& x) { return RingElement(-x.a_, -x.b_, x.tag_); }

  friend RingElement operator*(const RingElement& x, const RingElement& y) {
    const RingTag t = join(x.tag_, y.tag_);
    const Integer ac = x.a_ * y.a_;
    const Integer bd = x.b_ * y.b_;
    const Integer cross = x.a_ * y.b_ + x.b_ * y.a_;
    if (t == RingTag::eisenstein) return RingElement(ac - bd, cross - bd, t);
    return RingElement(ac - bd, cross, t);
  }

  RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
  RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
  RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

  friend bool operator==(const RingElement& x, const RingElement& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// "3", "-w", "2-3*w", "i".
  std::string to_string() const {
    if (b_ == 0) return a_.get_str();
    const std::string mu(1, generator_symbol(tag_));
    std::string bpart;
    if (b_ == 1) {
      bpart = mu;
    } else if (b_ == -1) {
      bpart = "-" + mu;
    } else {
      bpart = b_.get_str() + "*" + mu;
    }
    if (a_ == 0) return bpart;
    return a_.get_str() + (b_ > 0 ? "+" : "") + bpart;
  }

 private:
  // integer constants mix freely with either extension
  static RingTag join(RingTag x, RingTag y) {
    if (x == y) return x;
    if (x == RingTag::integer) return y;
    if (y == RingTag::integer) return x;
    throw InvalidInput("mixed ring tags in one expression");
  }

  Integer a_ = 0;
  Integer b_ = 0;
  RingTag tag_ = RingTag::integer;
};

/// Parses a ring element such as "1", "-2+3*w", "w-1", "2i". The generator
/// letter must match the tag; for the integer ring only integers are legal.
inline RingElement parse_ring_element(const std::string& text, RingTag tag) {
  const char mu = generator_symbol(tag);
  Integer a = 0;
  Integer b = 0;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> InvalidInput {
    return InvalidInput("bad ring element '" + text + "' at position " + std::to_string(pos) + ": " + why);
  };
  skip();
  if (pos == text.size()) throw fail("empty entry");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw fail("expected + or -");
    }
    first = false;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits.push_back(text[pos++]);
    skip();
    bool has_mu = false;
    if (pos < text.size() && text[pos] == '*') {
      if (digits.empty()) throw fail("'*' without a coefficient");
      ++pos;
      skip();
      if (pos == text.size() || text[pos] != mu) throw fail(std::string("expected '") + mu + "' after '*'");
    }
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      if (tag == RingTag::integer) throw fail("generator not allowed for ring z");
      if (text[pos] != mu) throw fail(std::string("unknown symbol, expected '") + mu + "'");
      has_mu = true;
      ++pos;
    }
    if (digits.empty() && !has_mu) throw fail("expected a term");
    Integer c = digits.empty() ? Integer(1) : Integer(digits, 10);
    if (sign < 0) c = -c;
    (has_mu ? b : a) += c;
  }
  return RingElement(a, b, tag);
}

}  // namespace tordyn
