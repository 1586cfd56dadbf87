#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tordyn/numerics/max_modulus.hpp"
#include "tordyn/torus/matrix.hpp"

namespace tordyn {

/// Largest exterior-power dimension for which the characteristic polynomial
/// is formed explicitly; above it degrees come from the H^1 spectrum.
inline constexpr std::size_t kExactExteriorLimit = 28;

inline Rational default_degree_tolerance() { return decimal_tolerance(10); }

/// One dynamical degree: a certified enclosure and, when available, the
/// exact value.
struct DynamicalDegree {
  Interval enclosure;
  std::optional<RealAlgebraic> exact;

  double value() const { return exact ? exact->to_double() : enclosure.value(); }

  static DynamicalDegree from_rational(const Rational& v) {
    if (v < 0) throw InvalidInput("dynamical degree must be nonnegative");
    return {Interval{v, v}, RealAlgebraic::from_rational(v)};
  }
};

inline const std::string kTransferNote =
    "profile applies unchanged to the induced automorphisms of the quotient and of its resolution: "
    "dynamical degrees are invariant under generically finite equivariant rational maps";

struct DegreeProfile {
  std::size_t n = 0;
  std::vector<DynamicalDegree> lambdas;  // lambda_0 .. lambda_n
  double entropy = 0;
  std::string transfer_note = kTransferNote;

  const DynamicalDegree& operator[](std::size_t p) const { return lambdas.at(p); }

  /// Profile from given exact values, for rule checks and tests.
  static DegreeProfile synthetic(const std::vector<Rational>& values);
};

/// Exact ordering when both handles exist; otherwise disjoint enclosures
/// decide and overlapping ones leave the comparison open.
inline std::optional<std::strong_ordering> compare_degrees(const DynamicalDegree& a, const DynamicalDegree& b) {
  if (a.exact && b.exact) return compare(*a.exact, *b.exact);
  if (a.enclosure.hi < b.enclosure.lo) return std::strong_ordering::less;
  if (b.enclosure.hi < a.enclosure.lo) return std::strong_ordering::greater;
  if (a.enclosure.is_point() && b.enclosure.is_point() && a.enclosure.lo == b.enclosure.lo) {
    return std::strong_ordering::equal;
  }
  return std::nullopt;
}

/// Natural log of the largest degree.
inline double entropy_of(const DegreeProfile& profile) {
  double best = 1;
  std::optional<std::size_t> arg;
  for (std::size_t p = 0; p < profile.lambdas.size(); ++p) {
    if (!arg) {
      arg = p;
      continue;
    }
    const auto ord = compare_degrees(profile.lambdas[p], profile.lambdas[*arg]);
    if (ord ? *ord == std::strong_ordering::greater : profile.lambdas[p].value() > profile.lambdas[*arg].value()) {
      arg = p;
    }
  }
  if (arg) best = profile.lambdas[*arg].value();
  if (arg && profile.lambdas[*arg].exact && compare(*profile.lambdas[*arg].exact, Rational(1)) == 0) return 0.0;
  return best <= 1 ? 0.0 : std::log(best);
}

inline DegreeProfile DegreeProfile::synthetic(const std::vector<Rational>& values) {
  if (values.empty()) throw InvalidInput("profile needs at least lambda_0");
  DegreeProfile out;
  out.n = values.size() - 1;
  for (const auto& v : values) out.lambdas.push_back(DynamicalDegree::from_rational(v));
  out.entropy = entropy_of(out);
  return out;
}

namespace detail {

inline Integer binomial(std::size_t m, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  return r;
}

// lambda_p is the spectral radius of the 2p-th exterior power. That radius is
// itself an eigenvalue (the product over the top p eigenvalues nu of
// nu * conj(nu)), hence the largest real root of the characteristic
// polynomial.
inline DynamicalDegree degree_from_exterior_power(const IntegerMatrix& r, std::size_t k, const Rational& tol) {
  const IntPolynomial cp = char_poly(exterior_power(r, k));
  const IntPolynomial q = squarefree_part(cp);
  const auto ivs = isolate_squarefree(q);
  if (ivs.empty()) throw std::logic_error("exterior power has no real eigenvalue");
  RealAlgebraic handle(q, ivs.back());
  try {
    handle = minimized(handle);
  } catch (const CapabilityError&) {
    // keep the square-free defining polynomial
  }
  handle = handle.refined(tol);
  return {handle.interval(), handle};
}

inline DynamicalDegree degree_from_spectrum(const IntPolynomial& h1_poly, std::size_t k, const Rational& tol) {
  auto spectrum = modulus_spectrum(h1_poly, tol);
  Interval iv = top_moduli_product(spectrum, static_cast<int>(k));
  if (iv.width() <= tol) return {iv, std::nullopt};
  // relative error of the product is about the sum of w / |z_i| over the
  // top k moduli, so scale by the smallest of them
  Rational smallest = iv.hi;
  {
    int seen = 0;
    for (const auto& c : spectrum) {
      if (seen >= static_cast<int>(k)) break;
      if (c.lo > 0) smallest = std::min(smallest, c.lo);
      seen += c.count;
    }
  }
  Rational width = tol * smallest / (2 * static_cast<long>(k) * iv.hi);
  while (true) {
    spectrum = modulus_spectrum(h1_poly, width);
    iv = top_moduli_product(spectrum, static_cast<int>(k));
    if (iv.width() <= tol) return {iv, std::nullopt};
    width /= 256;
  }
}

}  // namespace detail

/// Dynamical degrees lambda_0..lambda_n of an automorphism of E^n and its
/// entropy. Each lambda_p is the spectral radius on H^{2p}, the 2p-th
/// exterior power of the action on H^1.
inline DegreeProfile degree_profile(const TorusMatrix& m, const Rational& tol = default_degree_tolerance()) {
  if (tol <= 0) throw InvalidInput("degree_profile: tolerance must be positive");
  const RingElement det = m.determinant();
  if (!det.is_unit()) {
    throw InvalidInput("not an automorphism: determinant " + det.to_string() + " is not a unit");
  }
  const std::size_t n = m.size();
  const IntegerMatrix r = realify(m);
  std::optional<IntPolynomial> h1_poly;
  DegreeProfile out;
  out.n = n;
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t k = 2 * p;
    if (detail::binomial(2 * n, k) <= kExactExteriorLimit) {
      out.lambdas.push_back(detail::degree_from_exterior_power(r, k, tol));
    } else {
      if (!h1_poly) h1_poly = char_poly(r);
      out.lambdas.push_back(detail::degree_from_spectrum(*h1_poly, k, tol));
    }
  }
  out.entropy = entropy_of(out);
  return out;
}

enum class Decision { holds, violated, undecided };

inline const char* decision_name(Decision d) {
  switch (d) {
    case Decision::holds: return "holds";
    case Decision::violated: return "violated";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

struct LogConcavityEntry {
  std::size_t p = 0;
  double lhs = 0;  // lambda_{p-1} * lambda_{p+1}
  double rhs = 0;  // lambda_p^2
  Decision decision = Decision::undecided;
  bool exact = false;
};

struct LogConcavityReport {
  std::vector<LogConcavityEntry> entries;

  bool holds() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.decision == Decision::holds; });
  }
  bool any_violation() const {
    return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.decision == Decision::violated; });
  }
};

inline Interval interval_product(const Interval& a, const Interval& b) {
  // degrees are nonnegative, so the ends multiply directly
  return {a.lo * b.lo, a.hi * b.hi};
}

/// lambda_{p-1} lambda_{p+1} <= lambda_p^2 at every interior p: decided by
/// enclosures where they separate, otherwise exactly from the handles.
inline LogConcavityReport check_log_concavity(const DegreeProfile& profile) {
  LogConcavityReport out;
  for (std::size_t p = 1; p + 1 < profile.lambdas.size(); ++p) {
    const auto& a = profile.lambdas[p - 1];
    const auto& b = profile.lambdas[p];
    const auto& c = profile.lambdas[p + 1];
    LogConcavityEntry e;
    e.p = p;
    e.lhs = a.value() * c.value();
    e.rhs = b.value() * b.value();
    const Interval lhs = interval_product(a.enclosure, c.enclosure);
    const Interval rhs = interval_product(b.enclosure, b.enclosure);
    if (lhs.hi < rhs.lo || (lhs.is_point() && rhs.is_point() && lhs.lo <= rhs.lo)) {
      e.decision = Decision::holds;
      e.exact = lhs.is_point() && rhs.is_point();
    } else if (lhs.lo > rhs.hi) {
      e.decision = Decision::violated;
      e.exact = lhs.is_point() && rhs.is_point();
    } else if (a.exact && b.exact && c.exact) {
      const RealAlgebraic l = multiply(*a.exact, *c.exact);
      const RealAlgebraic r = multiply(*b.exact, *b.exact);
      e.decision = compare(l, r) == std::strong_ordering::greater ? Decision::violated : Decision::holds;
      e.exact = true;
    }
    out.entries.push_back(e);
  }
  return out;
}

struct ProductCheckEntry {
  std::size_t p = 0;
  double lhs = 0;
  double rhs = 0;
  std::size_t argmax_j = 0;
  bool agree = false;
  bool exact = false;  // agreement decided by equal exact handles
};

struct ProductCheckReport {
  std::size_t n_g = 0;
  std::size_t n_h = 0;
  Rational tolerance;
  std::vector<ProductCheckEntry> entries;

  bool all_agree() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.agree; });
  }
};

/// Degrees of diag(G, H) against max_j lambda_j(G) lambda_{p-j}(H).
inline ProductCheckReport verify_product_formula(const TorusMatrix& g, const TorusMatrix& h,
                                                 const Rational& tol = decimal_tolerance(9)) {
  if (tol <= 0) throw InvalidInput("verify_product_formula: tolerance must be positive");
  if (g.tag() != h.tag()) throw InvalidInput("verify_product_formula: blocks over different rings");
  if (!g.is_automorphism()) throw InvalidInput("verify_product_formula: G is not an automorphism");
  if (!h.is_automorphism()) throw InvalidInput("verify_product_formula: H is not an automorphism");
  const Rational inner = tol / 1000;
  const DegreeProfile pf = degree_profile(TorusMatrix::block_diagonal(g, h), inner);
  const DegreeProfile pg = degree_profile(g, inner);
  const DegreeProfile ph = degree_profile(h, inner);
  ProductCheckReport out;
  out.n_g = g.size();
  out.n_h = h.size();
  out.tolerance = tol;
  for (std::size_t p = 0; p <= out.n_g + out.n_h; ++p) {
    ProductCheckEntry e;
    e.p = p;
    Interval best;
    bool have = false;
    for (std::size_t j = 0; j <= out.n_g; ++j) {
      if (p < j || p - j > out.n_h) continue;
      const Interval prod = interval_product(pg[j].enclosure, ph[p - j].enclosure);
      if (!have || prod.midpoint() > best.midpoint()) {
        best = prod;
        e.argmax_j = j;
        have = true;
      }
    }
    const Interval& lhs = pf[p].enclosure;
    e.lhs = lhs.value();
    e.rhs = best.value();
    const Rational gap = abs(lhs.midpoint() - best.midpoint()) + (lhs.width() + best.width()) / 2;
    e.agree = gap <= tol;
    if (!e.agree && pf[p].exact && pg[e.argmax_j].exact && ph[p - e.argmax_j].exact) {
      e.exact = true;
      e.agree = compare(*pf[p].exact, multiply(*pg[e.argmax_j].exact, *ph[p - e.argmax_j].exact)) == 0;
    }
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace tordyn
