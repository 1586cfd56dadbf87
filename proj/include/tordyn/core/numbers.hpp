#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tordyn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input exceeds a configured capability bound
/// (degree caps, unsupported dimensions).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// 2^e as a rational, e may be negative.
inline Rational pow2(long e) {
  Rational q(1);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

/// Exact rational value of a finite double.
inline Rational from_double(double v) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), v);
  return q;
}

inline Rational from_long_double(long double v) {
  // split into two doubles; the sum is exact for normal long doubles
  const double hi = static_cast<double>(v);
  const double lo = static_cast<double>(v - static_cast<long double>(hi));
  return from_double(hi) + from_double(lo);
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// 10^{-k} as an exact rational.
inline Rational decimal_tolerance(unsigned k) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
  return make_rational(1, den);
}

/// Nearest dyadic rational with at most `bits` fractional bits, rounded
/// towards +infinity when `up` is set, otherwise towards -infinity.
inline Rational round_dyadic(const Rational& q, unsigned bits, bool up) {
  Integer scaled = q.get_num();
  scaled <<= bits;
  Integer quot;
  if (up) {
    mpz_cdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  } else {
    mpz_fdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  }
  Rational r(quot);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

/// Parses "p", "p/q" or a decimal/scientific literal ("1e-10", "0.25") into
/// an exact rational.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  if (text.find_first_of(".eE") == std::string::npos) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
      throw InvalidInput("malformed rational literal: " + text);
    }
    q.canonicalize();
    return q;
  }
  // decimal notation: mantissa digits and exponent, converted exactly
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size() && text[pos] != 'e' && text[pos] != 'E'; ++pos) {
    const char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      throw InvalidInput("malformed rational literal: " + text);
    }
  }
  if (!seen_digit) throw InvalidInput("malformed rational literal: " + text);
  if (pos < text.size()) {
    const std::string exp_text = text.substr(pos + 1);
    char* end = nullptr;
    const long e = std::strtol(exp_text.c_str(), &end, 10);
    if (exp_text.empty() || *end != '\0') {
      throw InvalidInput("malformed rational literal: " + text);
    }
    exponent += e;
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  return exponent >= 0 ? Rational(mantissa * scale) : make_rational(mantissa, scale);
}

/// Renders a double with 10 significant digits (glibc rounds the exact
/// binary value half-to-even) and returns the double nearest to that text,
/// so JSON emitters print the rounded value.
inline double round_significant(double v, int digits = 10) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, v);
  return std::strtod(buf, nullptr);
}

inline std::string format_significant(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace tordyn
