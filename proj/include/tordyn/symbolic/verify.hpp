#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tordyn/symbolic/mpoly.hpp"
#include "tordyn/symbolic/quotient.hpp"

namespace tordyn {

inline constexpr int kDefaultMembershipBound = 12;

enum class CheckStatus { zero, nonzero, dimensions_agree, mismatch, invariant, not_invariant };

inline const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::zero: return "zero";
    case CheckStatus::nonzero: return "nonzero";
    case CheckStatus::dimensions_agree: return "dimensions-agree";
    case CheckStatus::mismatch: return "mismatch";
    case CheckStatus::invariant: return "invariant";
    case CheckStatus::not_invariant: return "not-invariant";
  }
  return "?";
}

struct SymbolicCheck {
  std::string name;
  CheckStatus status = CheckStatus::mismatch;
  std::string expression;  // what was reduced
  std::string residual;    // reduced form when nonzero
  std::vector<std::string> details;

  bool passed() const {
    return status == CheckStatus::zero || status == CheckStatus::dimensions_agree || status == CheckStatus::invariant;
  }
};

struct SymbolicReport {
  std::vector<SymbolicCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  }
};

/// A ring generator with its degree as a polynomial in x, y.
struct Generator {
  std::string name;
  QuotientElement value;
  unsigned weight = 0;
};

inline Generator make_generator(const Monomial& m) {
  return {monomial_to_string(m), normal_form(RawPolynomial::monomial(m)), monomial_degree(m)};
}

/// y_m y_n (m <= n) and x1^i x2^j x3^k with 0 <= i, j, k <= 2, i + j + k = 3.
inline std::vector<Generator> invariant_generators() {
  std::vector<Generator> out;
  const std::pair<int, int> quad[6] = {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {3, 1}};
  for (const auto& [a, b] : quad) {
    Monomial m{};
    m[static_cast<std::size_t>(a + 2)] += 1;
    m[static_cast<std::size_t>(b + 2)] += 1;
    out.push_back(make_generator(m));
  }
  for (unsigned i = 0; i <= 2; ++i) {
    for (unsigned j = 0; j <= 2; ++j) {
      for (unsigned k = 0; k <= 2; ++k) {
        if (i + j + k != 3) continue;
        out.push_back(make_generator(Monomial{i, j, k, 0, 0, 0}));
      }
    }
  }
  return out;
}

/// Test hook: the generator list with y1^2 replaced by y1.
inline std::vector<Generator> corrupted_generators() {
  auto gens = invariant_generators();
  gens.front() = make_generator(Monomial{0, 0, 0, 1, 0, 0});
  return gens;
}

inline SymbolicCheck verify_generator_invariance(const std::vector<Generator>& gens = invariant_generators()) {
  SymbolicCheck check;
  check.name = "generator_invariance";
  check.expression = "act(gen, 1) - gen for each of " + std::to_string(gens.size()) + " generators";
  bool all = true;
  for (const auto& g : gens) {
    const bool inv = is_invariant(g.value);
    all = all && inv;
    check.details.push_back(g.name + ": " + (inv ? "invariant" : "not invariant"));
    if (!inv) check.residual += (check.residual.empty() ? "" : "; ") + (act(g.value, 1) - g.value).to_string();
  }
  check.status = all ? CheckStatus::invariant : CheckStatus::not_invariant;
  return check;
}

/// Echelon basis keyed by leading monomial (highest total degree, then
/// lexicographically largest).
class EchelonSpan {
 public:
  /// Adds v to the span; returns whether the rank grew.
  bool insert(QuotientElement v) {
    RawPolynomial r = reduce(v.polynomial());
    if (r.is_zero()) return false;
    const Monomial lead = leading(r);
    const CycloRational inv = r.terms().at(lead).inverse();
    rows_.emplace(lead, r * RawPolynomial(inv));
    return true;
  }

  bool contains(const QuotientElement& v) const { return reduce(v.polynomial()).is_zero(); }

  std::size_t rank() const { return rows_.size(); }

 private:
  struct Order {
    bool operator()(const Monomial& a, const Monomial& b) const {
      const unsigned da = monomial_degree(a);
      const unsigned db = monomial_degree(b);
      if (da != db) return da > db;
      return a > b;
    }
  };

  static Monomial leading(const RawPolynomial& p) {
    Monomial best = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms()) {
      if (Order{}(m, best)) best = m;
    }
    return best;
  }

  RawPolynomial reduce(RawPolynomial r) const {
    // eliminate pivot monomials from the top down
    while (!r.is_zero()) {
      bool changed = false;
      std::vector<Monomial> ms;
      for (const auto& [m, c] : r.terms()) ms.push_back(m);
      std::sort(ms.begin(), ms.end(), Order{});
      for (const auto& m : ms) {
        auto it = rows_.find(m);
        if (it == rows_.end()) continue;
        auto ct = r.terms().find(m);
        if (ct == r.terms().end()) continue;
        r = r - it->second * RawPolynomial(ct->second);
        changed = true;
        break;
      }
      if (!changed) break;
    }
    return r;
  }

  std::map<Monomial, RawPolynomial, Order> rows_;
};

/// Normal-form monomials of total degree <= d fixed by the action.
inline std::size_t invariant_monomial_count(int d) {
  std::size_t count = 0;
  for (unsigned i1 = 0; i1 <= 2; ++i1) {
    for (unsigned i2 = 0; i2 <= 2; ++i2) {
      for (unsigned i3 = 0; i3 <= 2; ++i3) {
        const unsigned xs = i1 + i2 + i3;
        if (xs % 3 != 0 || static_cast<int>(xs) > d) continue;
        for (unsigned j1 = 0; static_cast<int>(xs + j1) <= d; ++j1) {
          for (unsigned j2 = 0; static_cast<int>(xs + j1 + j2) <= d; ++j2) {
            for (unsigned j3 = 0; static_cast<int>(xs + j1 + j2 + j3) <= d; ++j3) {
              if ((j1 + j2 + j3) % 2 == 0) ++count;
            }
          }
        }
      }
    }
  }
  return count;
}

struct MembershipReport {
  int degree_bound = 0;
  std::size_t invariant_dimension = 0;  // (a) monomial characterization
  std::size_t span_dimension = 0;       // (b) span of generator products
  std::size_t products = 0;
  bool span_in_invariants = true;

  bool agree() const { return span_in_invariants && invariant_dimension == span_dimension; }
};

/// Dimension of the invariants of degree <= d, computed from the monomial
/// characterization and from the span of generator products of degree <= d.
inline MembershipReport bounded_membership_check(int d, const std::vector<Generator>& gens = invariant_generators(),
                                                 int bound = kDefaultMembershipBound) {
  if (d < 0) throw InvalidInput("membership check: degree must be nonnegative");
  if (d > bound) {
    throw CapabilityError("membership check: degree " + std::to_string(d) + " exceeds bound " + std::to_string(bound));
  }
  MembershipReport rep;
  rep.degree_bound = d;
  rep.invariant_dimension = invariant_monomial_count(d);
  EchelonSpan span;
  // depth-first over non-decreasing generator index sequences
  struct Frame {
    std::size_t next;
    unsigned weight;
    QuotientElement value;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, normal_form(RawPolynomial(1))});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    ++rep.products;
    if (!is_invariant(f.value)) rep.span_in_invariants = false;
    span.insert(f.value);
    for (std::size_t g = f.next; g < gens.size(); ++g) {
      const unsigned w = f.weight + gens[g].weight;
      if (static_cast<int>(w) > d) continue;
      stack.push_back({g, w, f.value * gens[g].value});
    }
  }
  rep.span_dimension = span.rank();
  return rep;
}

namespace detail {

inline SymbolicCheck zero_check(const std::string& name, const RawPolynomial& expr) {
  SymbolicCheck c;
  c.name = name;
  c.expression = expr.to_string();
  const QuotientElement r = normal_form(expr);
  c.status = r.is_zero() ? CheckStatus::zero : CheckStatus::nonzero;
  if (!r.is_zero()) c.residual = r.to_string();
  return c;
}

}  // namespace detail

/// Field identities among u = y1^2, t = y2/y1, s = y3/y1, z = x2/x1,
/// w = x3/x1, each multiplied through by its denominators.
inline std::vector<SymbolicCheck> verify_field_identities() {
  using P = RawPolynomial;
  const P x1c = P::x(1, 3), x2c = P::x(2, 3), x3c = P::x(3, 3);
  const P y1s = P::y(1, 2), y2s = P::y(2, 2), y3s = P::y(3, 2);
  const P one(1);
  std::vector<SymbolicCheck> out;
  // z^3 (u + 1) = t^2 u + 1, times x1^3
  out.push_back(detail::zero_check("z_cube_ratio", x2c * (y1s + one) - x1c * (y2s + one)));
  out.push_back(detail::zero_check("w_cube_ratio", x3c * (y1s + one) - x1c * (y3s + one)));
  // -(z^3 - 1) = u (z^3 - t^2), times x1^3
  out.push_back(detail::zero_check("u_from_z", -(x2c - x1c) - (y1s * x2c - y2s * x1c)));
  // -(w^3 - 1) = u (w^3 - s^2), times x1^3
  out.push_back(detail::zero_check("u_from_w", -(x3c - x1c) - (y1s * x3c - y3s * x1c)));
  // (w^3 - 1)(t^2 - 1) = (z^3 - 1)(s^2 - 1), times x1^3 y1^2
  const P quintic = (x3c - x1c) * (y2s - y1s) - (x2c - x1c) * (y3s - y1s);
  out.push_back(detail::zero_check("quintic_relation", quintic));
  // y2 = y1, x2 = x1: t = 1 and z = 1, both sides vanish
  out.push_back(detail::zero_check("quintic_symmetric_case", rename_variable(rename_variable(quintic, 4, 3), 1, 0)));
  return out;
}

/// The free-variable rational functions of the conic parametrization in
/// z, w, gamma (variables 0, 1, 2).
struct Parametrization {
  RationalFunction t;
  RationalFunction s;
  MPoly denominator;  // (w^3 - 1) - (z^3 - 1) gamma^2
};

inline Parametrization conic_parametrization() {
  const MPoly z = MPoly::var(3, 0), w = MPoly::var(3, 1), g = MPoly::var(3, 2);
  const MPoly one(3, 1), two(3, 2);
  const MPoly a = w * w * w - one;
  const MPoly b = z * z * z - one;
  // (w^3-1)(t+1) = (z^3-1) g (g (t-1) + 2) is linear in t
  const MPoly num = -a - b * g * g + two * b * g;
  const MPoly den = a - b * g * g;
  if (den.is_zero()) throw std::logic_error("parametrization: linear coefficient vanishes identically");
  Parametrization p{RationalFunction(num, den), RationalFunction(), den};
  const RationalFunction gr(g);
  p.s = gr * (p.t - RationalFunction(one)) + RationalFunction(one);
  return p;
}

inline std::vector<SymbolicCheck> verify_parametrization() {
  const std::vector<std::string> names3{"z", "w", "g"};
  std::vector<SymbolicCheck> out;
  const Parametrization par = conic_parametrization();
  const MPoly z = MPoly::var(3, 0), w = MPoly::var(3, 1);
  const MPoly one(3, 1);
  const RationalFunction a(w * w * w - one);
  const RationalFunction b(z * z * z - one);
  const RationalFunction r1(one);

  SymbolicCheck sub;
  sub.name = "parametrization_in_quintic";
  sub.expression = "(w^3-1)(T^2-1) - (z^3-1)(S^2-1) with T = " + par.t.numerator().to_string(names3) + " / (" +
                   par.t.denominator().to_string(names3) + "), S = g(T-1)+1";
  const RationalFunction res = a * (par.t * par.t - r1) - b * (par.s * par.s - r1);
  sub.status = res.is_zero() ? CheckStatus::zero : CheckStatus::nonzero;
  if (!res.is_zero()) sub.residual = res.numerator().to_string(names3);
  out.push_back(sub);

  // polynomial identity in t, z, w, g: the quintic with s = g(t-1)+1 splits
  // off the factor (t - 1) and leaves the relation linear in t
  {
    const std::vector<std::string> names4{"t", "z", "w", "g"};
    const MPoly t = MPoly::var(4, 0), z4 = MPoly::var(4, 1), w4 = MPoly::var(4, 2), g4 = MPoly::var(4, 3);
    const MPoly o(4, 1), two(4, 2);
    const MPoly A = w4 * w4 * w4 - o, B = z4 * z4 * z4 - o;
    const MPoly s = g4 * (t - o) + o;
    const MPoly lhs = A * (t * t - o) - B * (s * s - o);
    const MPoly rhs = (t - o) * (A * (t + o) - B * g4 * (g4 * (t - o) + two));
    SymbolicCheck c;
    c.name = "conic_reduction";
    c.expression = "(w^3-1)(t^2-1) - (z^3-1)(s^2-1) - (t-1)[(w^3-1)(t+1) - (z^3-1)g(g(t-1)+2)], s = g(t-1)+1";
    const MPoly diff = lhs - rhs;
    c.status = diff.is_zero() ? CheckStatus::zero : CheckStatus::nonzero;
    if (!diff.is_zero()) c.residual = diff.to_string(names4);
    out.push_back(c);

    // section s = t = 1, in variables t, s, z, w
    SymbolicCheck sec;
    sec.name = "section_s_t_equal_1";
    sec.expression = "(w^3-1)(t^2-1) - (z^3-1)(s^2-1) at s = t = 1";
    const MPoly tt = MPoly::var(4, 0), ss = MPoly::var(4, 1), zz = MPoly::var(4, 2), ww = MPoly::var(4, 3);
    const MPoly quintic = (ww * ww * ww - o) * (tt * tt - o) - (zz * zz * zz - o) * (ss * ss - o);
    const MPoly at = quintic.substitute(0, o).substitute(1, o);
    sec.status = at.is_zero() ? CheckStatus::zero : CheckStatus::nonzero;
    if (!at.is_zero()) sec.residual = at.to_string({"t", "s", "z", "w"});
    out.push_back(sec);
  }
  return out;
}

/// Every check of the quotient threefold computations.
inline SymbolicReport run_symbolic_suite(int degree_bound = kDefaultMembershipBound,
                                         const std::vector<Generator>& gens = invariant_generators()) {
  SymbolicReport rep;
  rep.checks.push_back(verify_generator_invariance(gens));
  const MembershipReport m = bounded_membership_check(degree_bound, gens);
  SymbolicCheck mc;
  mc.name = "bounded_membership";
  mc.expression = "invariants of degree <= " + std::to_string(degree_bound);
  mc.status = m.agree() ? CheckStatus::dimensions_agree : CheckStatus::mismatch;
  mc.details = {"monomial count: " + std::to_string(m.invariant_dimension),
                "generator span: " + std::to_string(m.span_dimension),
                "products: " + std::to_string(m.products),
                std::string("span inside invariants: ") + (m.span_in_invariants ? "yes" : "no")};
  if (!m.agree()) {
    mc.residual = "dimension " + std::to_string(m.span_dimension) + " vs " + std::to_string(m.invariant_dimension) +
                  (m.span_in_invariants ? "" : ", span leaves the invariants");
  }
  rep.checks.push_back(mc);
  for (auto& c : verify_field_identities()) rep.checks.push_back(std::move(c));
  for (auto& c : verify_parametrization()) rep.checks.push_back(std::move(c));
  return rep;
}

}  // namespace tordyn
