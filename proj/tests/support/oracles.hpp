#pragma once

// Independent oracles: floating-point eigenvalues via Eigen on exterior
// powers built here from scratch, and two exact eliminations for the
// minimal polynomial of a squared root. None of them call into the
// library's realification, exterior-power, or root-finding code.

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "tordyn/torus/matrix.hpp"

namespace tordyn::oracle {

using cd = std::complex<double>;

inline cd ring_value(const RingElement& e) {
  const double a = e.a().get_d(), b = e.b().get_d();
  switch (e.tag()) {
    case RingTag::integer: return {a, 0};
    case RingTag::gaussian: return {a, b};
    case RingTag::eisenstein: return cd(a, 0) + b * std::polar(1.0, 2 * M_PI / 3);
  }
  return {};
}

// Real matrix of v -> M v on C^n in the real coordinates of the lattice
// basis {e_j, mu e_j}; for Z entries mu = i is used (any non-real mu works).
inline Eigen::MatrixXd lattice_matrix(const TorusMatrix& m) {
  const std::size_t n = m.size();
  const cd mu = m.tag() == RingTag::eisenstein ? std::polar(1.0, 2 * M_PI / 3) : cd(0, 1);
  Eigen::MatrixXd basis(2 * n, 2 * n);  // columns: basis vectors in R^{2n} = C^n
  basis.setZero();
  for (std::size_t j = 0; j < n; ++j) {
    basis(2 * j, 2 * j) = 1;
    basis(2 * j, 2 * j + 1) = mu.real();
    basis(2 * j + 1, 2 * j + 1) = mu.imag();
  }
  Eigen::MatrixXcd mc(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mc(i, j) = ring_value(m(i, j));
  Eigen::MatrixXd image(2 * n, 2 * n);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    Eigen::VectorXcd v(n);
    for (std::size_t k = 0; k < n; ++k) v(k) = cd(basis(2 * k, c), basis(2 * k + 1, c));
    const Eigen::VectorXcd w = mc * v;
    for (std::size_t k = 0; k < n; ++k) {
      image(2 * k, c) = w(k).real();
      image(2 * k + 1, c) = w(k).imag();
    }
  }
  return basis.inverse() * image;
}

inline void subsets(int m, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < m; ++i) {
    cur.push_back(i);
    subsets(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline Eigen::MatrixXd compound(const Eigen::MatrixXd& a, int k) {
  std::vector<std::vector<int>> s;
  std::vector<int> cur;
  subsets(static_cast<int>(a.rows()), k, 0, cur, s);
  Eigen::MatrixXd out(s.size(), s.size());
  for (std::size_t r = 0; r < s.size(); ++r) {
    for (std::size_t c = 0; c < s.size(); ++c) {
      Eigen::MatrixXd minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = a(s[r][i], s[c][j]);
      out(r, c) = minor.determinant();
    }
  }
  return out;
}

inline double spectral_radius(const Eigen::MatrixXd& a) {
  if (a.rows() == 1) return std::abs(a(0, 0));
  return Eigen::EigenSolver<Eigen::MatrixXd>(a, false).eigenvalues().cwiseAbs().maxCoeff();
}

inline double brute_force_degree(const TorusMatrix& m, int p) {
  return spectral_radius(compound(lattice_matrix(m), 2 * p));
}

// Floating eigenvalues of a defective matrix are only good to about eps^(1/k),
// so float comparisons are limited to matrices whose minimal polynomial is squarefree.
inline bool semisimple(const TorusMatrix& m) {
  const IntegerMatrix a = realify(m);
  const IntPolynomial q = squarefree_part(char_poly(a));
  IntegerMatrix acc(a.size());
  for (int k = q.degree(); k >= 0; --k) {
    acc = acc * a + IntegerMatrix::diagonal(std::vector<Integer>(a.size(), q.coeff(k)));
  }
  for (const auto& v : acc.entries()) {
    if (v != 0) return false;
  }
  return true;
}

inline Eigen::VectorXcd roots(const IntPolynomial& p) {
  const int d = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -p.coeff(i).get_d() / p.leading().get_d();
  return Eigen::EigenSolver<Eigen::MatrixXd>(c, false).eigenvalues();
}

// ---- exact oracles over Q, dense ascending vectors ----
using QPoly = std::vector<Rational>;

inline Rational det_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Sylvester resultant of f(y) and g(y), coefficients ascending in y.
inline Rational sylvester(const QPoly& f, const QPoly& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[n - k];
  return det_rational(s);
}

// Res_y(phi(y), y^2 - x) interpolated at x = 0..deg, made monic.
inline QPoly square_minpoly_by_resultant(const QPoly& phi) {
  const std::size_t d = phi.size() - 1;
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= d; ++i) {
    const Rational x(static_cast<long>(i));
    xs.push_back(x);
    ys.push_back(sylvester(phi, {-x, 0, 1}));
  }
  QPoly out(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {  // Lagrange
    QPoly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j <= d; ++j) {
      if (j == i) continue;
      QPoly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= xs[j] * basis[k];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += ys[i] * basis[k] / denom;
  }
  const Rational lc = out.back();
  for (auto& c : out) c /= lc;
  return out;
}

// Newton: power sums of the roots of phi, then of their squares, then back.
inline QPoly square_minpoly_by_power_sums(const QPoly& phi) {
  const std::size_t d = phi.size() - 1;
  std::vector<Rational> e(d + 1);  // elementary symmetric, e_k = (-1)^k a_{d-k}/a_d
  for (std::size_t k = 0; k <= d; ++k) e[k] = ((k % 2) ? -1 : 1) * phi[d - k] / phi[d];
  std::vector<Rational> s(2 * d + 1, 0);
  s[0] = static_cast<long>(d);
  for (std::size_t k = 1; k <= 2 * d; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= std::min(k - 1, d); ++i) acc += ((i % 2) ? 1 : -1) * e[i] * s[k - i];
    if (k <= d) acc += ((k % 2) ? 1 : -1) * static_cast<long>(k) * e[k];
    s[k] = acc;
  }
  std::vector<Rational> t(d + 1), f(d + 1);  // power sums and elementary of the squares
  for (std::size_t k = 0; k <= d; ++k) t[k] = s[2 * k];
  f[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += ((i % 2) ? 1 : -1) * f[k - i] * t[i];
    f[k] = acc / static_cast<long>(k);
  }
  QPoly out(d + 1);
  for (std::size_t k = 0; k <= d; ++k) out[d - k] = ((k % 2) ? -1 : 1) * f[k];
  return out;
}

}  // namespace tordyn::oracle
