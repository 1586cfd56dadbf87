#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tordyn/numerics/factor.hpp"
#include "tordyn/torus/ring.hpp"

namespace tordyn {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t m) : m_(m), a_(m * m, 0) {}
  IntegerMatrix(std::size_t m, std::vector<Integer> entries) : m_(m), a_(std::move(entries)) {
    if (a_.size() != m * m) throw InvalidInput("integer matrix: entry count is not m*m");
  }
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) : m_(rows.size()) {
    for (const auto& r : rows) {
      if (r.size() != m_) throw InvalidInput("integer matrix: not square");
      for (long v : r) a_.emplace_back(v);
    }
  }

  static IntegerMatrix identity(std::size_t m) {
    IntegerMatrix out(m);
    for (std::size_t i = 0; i < m; ++i) out(i, i) = 1;
    return out;
  }

  static IntegerMatrix diagonal(const std::vector<Integer>& d) {
    IntegerMatrix out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
    return out;
  }

  std::size_t size() const { return m_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * m_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * m_ + j]; }
  const std::vector<Integer>& entries() const { return a_; }

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.m_ != y.m_) throw InvalidInput("integer matrix product: size mismatch");
    IntegerMatrix out(x.m_);
    for (std::size_t i = 0; i < x.m_; ++i) {
      for (std::size_t k = 0; k < x.m_; ++k) {
        const Integer& v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < x.m_; ++j) out(i, j) += v * y(k, j);
      }
    }
    return out;
  }

  friend IntegerMatrix operator+(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.m_ != y.m_) throw InvalidInput("integer matrix sum: size mismatch");
    IntegerMatrix out = x;
    for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
    return out;
  }

  friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) { return x.m_ == y.m_ && x.a_ == y.a_; }

  bool is_identity() const { return *this == identity(m_); }

  Integer determinant() const { return m_ == 0 ? Integer(1) : bareiss_determinant(a_, m_); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < m_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < m_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t m_ = 0;
  std::vector<Integer> a_;
};

inline IntegerMatrix matrix_power(const IntegerMatrix& a, unsigned long e) {
  IntegerMatrix result = IntegerMatrix::identity(a.size());
  IntegerMatrix base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// Sorted k-subsets of {0..m-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> lex_subsets(std::size_t m, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// k-th compound matrix: entry (I, J) is the minor on rows I, columns J,
/// with I, J ranging over sorted k-subsets in lexicographic order.
inline IntegerMatrix exterior_power(const IntegerMatrix& a, std::size_t k) {
  const std::size_t m = a.size();
  if (k > m) throw InvalidInput("exterior power: k exceeds matrix size");
  if (k == 0) return IntegerMatrix::identity(1);
  const auto subsets = lex_subsets(m, k);
  const std::size_t n = subsets.size();
  IntegerMatrix out(n);
  std::vector<Integer> minor(k * k);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) minor[i * k + j] = a(subsets[r][i], subsets[c][j]);
      }
      out(r, c) = bareiss_determinant(minor, k);
    }
  }
  return out;
}

/// det(xI - A) by Berkowitz's division-free algorithm.
inline IntPolynomial char_poly(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Integer> vect{1};  // descending coefficients
  for (std::size_t r = 0; r < n; ++r) {
    // t = [1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C] for the leading block
    std::vector<Integer> t{1, -a(r, r)};
    std::vector<Integer> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += a(r, j) * col[j];
      t.push_back(-dot);
      if (k + 1 < r) {
        std::vector<Integer> next(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * col[j];
        }
        col = std::move(next);
      }
    }
    std::vector<Integer> out(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += t[i - j] * vect[j];
    }
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return IntPolynomial(std::move(vect));
}

/// n x n matrix over Z, Z[i] or Z[w] acting on E^n.
class TorusMatrix {
 public:
  TorusMatrix() = default;
  TorusMatrix(std::size_t n, RingTag tag) : n_(n), tag_(tag), e_(n * n, RingElement(0, 0, tag)) {}
  TorusMatrix(std::size_t n, RingTag tag, std::vector<RingElement> entries) : n_(n), tag_(tag), e_(std::move(entries)) {
    if (e_.size() != n * n) throw InvalidInput("torus matrix: entry count is not n*n");
    for (auto& x : e_) {
      if (x.tag() != tag_ && x.tag() != RingTag::integer) throw InvalidInput("torus matrix: mixed ring tags");
      if (tag_ == RingTag::integer && x.b() != 0) throw InvalidInput("torus matrix: mixed ring tags");
      x = x.with_tag(tag_);
    }
  }
  TorusMatrix(std::initializer_list<std::initializer_list<long>> rows, RingTag tag = RingTag::integer)
      : n_(rows.size()), tag_(tag) {
    for (const auto& r : rows) {
      if (r.size() != n_) throw InvalidInput("torus matrix: not square");
      for (long v : r) e_.emplace_back(Integer(v), Integer(0), tag);
    }
  }

  static TorusMatrix identity(std::size_t n, RingTag tag) {
    TorusMatrix out(n, tag);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = RingElement(1, 0, tag);
    return out;
  }

  static TorusMatrix scalar(std::size_t n, const RingElement& c) {
    TorusMatrix out(n, c.tag());
    for (std::size_t i = 0; i < n; ++i) out(i, i) = c;
    return out;
  }

  /// diag(G, H) acting on E^{n_G} x E^{n_H}.
  static TorusMatrix block_diagonal(const TorusMatrix& g, const TorusMatrix& h) {
    if (g.tag_ != h.tag_) throw InvalidInput("block diagonal: blocks have different ring tags");
    TorusMatrix out(g.n_ + h.n_, g.tag_);
    for (std::size_t i = 0; i < g.n_; ++i) {
      for (std::size_t j = 0; j < g.n_; ++j) out(i, j) = g(i, j);
    }
    for (std::size_t i = 0; i < h.n_; ++i) {
      for (std::size_t j = 0; j < h.n_; ++j) out(g.n_ + i, g.n_ + j) = h(i, j);
    }
    return out;
  }

  std::size_t size() const { return n_; }
  RingTag tag() const { return tag_; }
  RingElement& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  const std::vector<RingElement>& entries() const { return e_; }

  friend TorusMatrix operator*(const TorusMatrix& x, const TorusMatrix& y) {
    x.check_compatible(y);
    TorusMatrix out(x.n_, x.tag_);
    for (std::size_t i = 0; i < x.n_; ++i) {
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    }
    return out;
  }

  friend TorusMatrix operator+(const TorusMatrix& x, const TorusMatrix& y) {
    x.check_compatible(y);
    TorusMatrix out = x;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += y.e_[i];
    return out;
  }

  friend bool operator==(const TorusMatrix& x, const TorusMatrix& y) {
    return x.n_ == y.n_ && x.tag_ == y.tag_ && x.e_ == y.e_;
  }

  bool is_identity() const { return *this == identity(n_, tag_); }

  /// Fraction-free elimination; exact ring division at each pivot step.
  RingElement determinant() const {
    if (n_ == 0) return RingElement(1, 0, tag_);
    std::vector<RingElement> m = e_;
    const std::size_t n = n_;
    RingElement prev(1, 0, tag_);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k * n + k].is_zero()) {
        std::size_t p = k + 1;
        while (p < n && m[p * n + k].is_zero()) ++p;
        if (p == n) return RingElement(0, 0, tag_);
        for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]).divided_by(prev);
        }
      }
      prev = m[k * n + k];
    }
    RingElement d = m[n * n - 1];
    return sign < 0 ? -d : d;
  }

  bool is_automorphism() const { return determinant().is_unit(); }

  /// Inverse of a unit-determinant matrix via the adjugate.
  TorusMatrix inverse() const {
    const RingElement det = determinant();
    if (!det.is_unit()) throw InvalidInput("matrix is not invertible over its ring (determinant " + det.to_string() + ")");
    const RingElement det_inv = det.inverse();
    TorusMatrix out(n_, tag_);
    if (n_ == 1) {
      out(0, 0) = det_inv;
      return out;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        // cofactor C_ji goes to entry (i, j)
        TorusMatrix minor(n_ - 1, tag_);
        for (std::size_t r = 0, rr = 0; r < n_; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, cc = 0; c < n_; ++c) {
            if (c == i) continue;
            minor(rr, cc++) = (*this)(r, c);
          }
          ++rr;
        }
        RingElement cof = minor.determinant();
        if ((i + j) % 2 == 1) cof = -cof;
        out(i, j) = cof * det_inv;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_compatible(const TorusMatrix& y) const {
    if (n_ != y.n_) throw InvalidInput("torus matrices of different sizes");
    if (tag_ != y.tag_) throw InvalidInput("torus matrices over different rings");
  }

  std::size_t n_ = 0;
  RingTag tag_ = RingTag::integer;
  std::vector<RingElement> e_;
};

/// The 2n x 2n integer matrix of M on the lattice, basis (1, mu) per factor.
/// Entry c = a + b*mu acts on a coordinate by the block whose columns are
/// the images of 1 and mu.
inline IntegerMatrix realify(const TorusMatrix& m) {
  const std::size_t n = m.size();
  IntegerMatrix out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const RingElement& c = m(i, j);
      if (c.tag() != m.tag()) throw InvalidInput("realify: mixed ring tags");
      const Integer& a = c.a();
      const Integer& b = c.b();
      Integer m01 = 0;
      Integer m11 = a;
      switch (m.tag()) {
        case RingTag::integer: break;
        case RingTag::gaussian:  // (a+bi)i = -b + a i
          m01 = -b;
          break;
        case RingTag::eisenstein:  // (a+bw)w = -b + (a-b)w
          m01 = -b;
          m11 = a - b;
          break;
      }
      out(2 * i, 2 * j) = a;
      out(2 * i + 1, 2 * j) = b;
      out(2 * i, 2 * j + 1) = m01;
      out(2 * i + 1, 2 * j + 1) = m11;
    }
  }
  return out;
}

inline constexpr unsigned long kDefaultOrderBound = 120;

/// Outcome of the torsion test: the order when finite and within the bound;
/// otherwise `certified_infinite` says whether infinitude is proven.
struct FiniteOrderResult {
  std::optional<unsigned long> order;
  bool certified_infinite = false;
  bool exceeds_bound = false;
  std::string reason;
};

namespace detail {

inline unsigned long euler_phi(unsigned long m) {
  unsigned long r = m;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

inline IntPolynomial cyclotomic(unsigned long m) {
  // x^m - 1 divided by the cyclotomic polynomials of proper divisors
  std::vector<Integer> c(m + 1, 0);
  c[0] = -1;
  c[m] = 1;
  IntPolynomial p(std::move(c));
  for (unsigned long d = 1; d < m; ++d) {
    if (m % d == 0) p = exact_divide(p, cyclotomic(d));
  }
  return p;
}

}  // namespace detail

/// Order of M in GL_n of its ring. All eigenvalues of a finite-order matrix
/// are roots of unity, so the characteristic polynomial of realify(M) must
/// be a product of cyclotomic factors; the remaining candidates are checked
/// by exact matrix powers.
inline FiniteOrderResult finite_order(const TorusMatrix& m, unsigned long bound = kDefaultOrderBound) {
  if (bound < 1) throw InvalidInput("finite_order: bound must be at least 1");
  if (!m.is_automorphism()) {
    throw InvalidInput("finite_order: determinant " + m.determinant().to_string() + " is not a unit");
  }
  FiniteOrderResult out;
  const IntegerMatrix r = realify(m);
  IntPolynomial rest = char_poly(r);
  const int deg = rest.degree();
  unsigned long lcm = 1;
  for (unsigned long k = 1; rest.degree() > 0 && detail::euler_phi(k) <= static_cast<unsigned long>(deg); ++k) {
    if (k > 4 * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg) + 8) break;
    if (detail::euler_phi(k) > static_cast<unsigned long>(rest.degree())) continue;
    const IntPolynomial phi = detail::cyclotomic(k);
    bool used = false;
    while (rest.degree() >= phi.degree() && divides(phi, rest)) {
      rest = exact_divide(rest, phi);
      used = true;
    }
    if (used) lcm = std::lcm(lcm, k);
  }
  if (rest.degree() > 0) {
    out.certified_infinite = true;
    out.reason = "characteristic polynomial has a non-cyclotomic factor";
    return out;
  }
  if (!matrix_power(r, lcm).is_identity()) {
    out.certified_infinite = true;
    out.reason = "eigenvalues are roots of unity but M^L != I for their order L (nontrivial unipotent part)";
    return out;
  }
  unsigned long order = lcm;
  for (unsigned long d = 1; d <= lcm; ++d) {
    if (lcm % d == 0 && matrix_power(r, d).is_identity()) {
      order = d;
      break;
    }
  }
  if (order > bound) {
    out.exceeds_bound = true;
    out.reason = "order " + std::to_string(order) + " exceeds bound " + std::to_string(bound);
    return out;
  }
  out.order = order;
  return out;
}

}  // namespace tordyn
