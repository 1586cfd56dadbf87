#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "tordyn/numerics/int_polynomial.hpp"
#include "tordyn/torus/matrix.hpp"

namespace tordyn {

namespace detail {

// Recursive descent over
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := power (['*'] power)*
//   power   := atom ['^' integer]
//   atom    := integer | 'x' | '(' sum ')'
class PolynomialParser {
 public:
  explicit PolynomialParser(const std::string& text) : s_(text) {}

  IntPolynomial parse() {
    skip();
    if (pos_ == s_.size()) throw error("empty polynomial");
    IntPolynomial p = sum();
    skip();
    if (pos_ != s_.size()) throw error(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  InvalidInput error(const std::string& why) const {
    return InvalidInput("polynomial syntax error at position " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  IntPolynomial sum() {
    IntPolynomial acc;
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      IntPolynomial t = product();
      acc = sign < 0 ? acc - t : acc + t;
    }
    return acc;
  }

  IntPolynomial product() {
    IntPolynomial acc = power();
    while (true) {
      skip();
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (pos_ < s_.size() && (s_[pos_] == 'x' || s_[pos_] == '(')) {
        acc = acc * power();  // implicit product: 3x, 2(x+1)
      } else {
        break;
      }
    }
    return acc;
  }

  IntPolynomial power() {
    IntPolynomial base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw error("exponent must be a nonnegative integer");
      const std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 4) throw error("exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  IntPolynomial atom() {
    skip();
    if (pos_ == s_.size()) throw error("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      return IntPolynomial::x();
    }
    if (c == '(') {
      ++pos_;
      IntPolynomial p = sum();
      if (!peek(')')) throw error("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) throw error("non-integer coefficient");
      return IntPolynomial::constant(Integer(s_.substr(start, pos_ - start), 10));
    }
    if (c == '.' || c == '/') throw error("non-integer coefficient");
    throw error(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline IntPolynomial parse_coefficient_list(const std::string& text) {
  // "[c0,c1,...]" ascending
  std::vector<Integer> coeffs;
  std::size_t pos = 1;
  auto fail = [&](const std::string& why) {
    return InvalidInput("coefficient list syntax error at position " + std::to_string(pos) + ": " + why);
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && (text[pos] == '.' || text[pos] == '/')) throw fail("non-integer coefficient");
    std::string tok = text.substr(start, pos - start);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    if (tok.empty() || tok == "-") throw fail("expected an integer");
    coeffs.emplace_back(tok, 10);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      break;
    }
    throw fail("expected ',' or ']'");
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw fail("trailing characters");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Integer polynomial in x from an expression ("x^3-3*x+1") or an
/// ascending coefficient list ("[1,-3,0,1]").
inline IntPolynomial parse_polynomial(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return detail::parse_coefficient_list(text.substr(first));
  return detail::PolynomialParser(text).parse();
}

/// Row-major nested brackets, e.g. "[[0,1],[-1,1+w]]".
inline TorusMatrix parse_matrix(const std::string& text, RingTag tag) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    return InvalidInput("matrix syntax error at position " + std::to_string(pos) + ": " + why);
  };
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  std::vector<std::vector<RingElement>> rows;
  expect('[');
  while (true) {
    expect('[');
    std::vector<RingElement> row;
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != ',' && text[pos] != ']' && text[pos] != '[') ++pos;
      const std::string entry = text.substr(start, pos - start);
      try {
        row.push_back(parse_ring_element(entry, tag));
      } catch (const InvalidInput& e) {
        pos = start;
        throw fail(e.what());
      }
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (pos != text.size()) throw fail("trailing characters");
  const std::size_t n = rows.size();
  std::vector<RingElement> entries;
  for (const auto& r : rows) {
    if (r.size() != n) throw InvalidInput("matrix is not square: " + std::to_string(n) + " rows, a row of length " +
                                          std::to_string(r.size()));
    for (const auto& e : r) entries.push_back(e);
  }
  return TorusMatrix(n, tag, std::move(entries));
}

}  // namespace tordyn
