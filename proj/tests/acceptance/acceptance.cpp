// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>

#include "support/oracles.hpp"
#include "support/random_matrices.hpp"
#include "tordyn/cli/commands.hpp"

using namespace tordyn;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) { return format_significant(v, 12); }

const TorusMatrix kP1({{0, 1, 0}, {0, 0, 1}, {-1, 3, 0}});

bool same_degree(const DynamicalDegree& a, const DynamicalDegree& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  return !(a.enclosure.hi < b.enclosure.lo || b.enclosure.hi < a.enclosure.lo);
}

bool exactly_one(const DynamicalDegree& d) {
  return d.exact && compare(*d.exact, Rational(1)) == std::strong_ordering::equal;
}

Outcome family_scan() {
  const auto t0 = Clock::now();
  const CommandResult r = cmd_scan("pa", 1, 20);
  const double t = seconds_since(t0);
  std::size_t ok = 0;
  for (const auto& row : r.json["rows"]) ok += row["ok"].get<bool>() ? 1 : 0;
  return {r.exit_code == kExitOk && ok == 20 && t < 30,
          std::to_string(ok) + "/20 rows verified (sign table, irreducible, lambda_2 > lambda_1 > 1 exact, "
          "criterion-2, neither) in " + fmt(t) + " s"};
}

Outcome numeric_anchor() {
  const DegreeProfile p = degree_profile(kP1);
  const double l1 = p[1].value(), l2 = p[2].value();
  const double o1 = oracle::brute_force_degree(kP1, 1), o2 = oracle::brute_force_degree(kP1, 2);
  const bool pass = std::abs(l1 - 3.5320888862) <= 1e-6 && std::abs(l2 - 8.2908593655) <= 1e-6 &&
                    std::abs(l1 - o1) <= 1e-9 && std::abs(l2 - o2) <= 1e-9 &&
                    std::abs(p.entropy - std::log(l2)) <= 1e-6;
  return {pass, "lambda_1 = " + fmt(l1) + ", lambda_2 = " + fmt(l2) + " (eigen oracle " + fmt(o1) + ", " + fmt(o2) +
                    "), entropy = " + fmt(p.entropy)};
}

Outcome exact_cross_check() {
  const oracle::QPoly phi{1, -3, 0, 1};
  const oracle::QPoly by_res = oracle::square_minpoly_by_resultant(phi);
  const oracle::QPoly by_sums = oracle::square_minpoly_by_power_sums(phi);
  const DegreeProfile p = degree_profile(kP1);
  bool lib_matches = p[1].exact && p[1].exact->polynomial().degree() == 3;
  for (int k = 0; lib_matches && k <= 3; ++k) {
    lib_matches = Rational(p[1].exact->polynomial().coeff(k)) == by_res[static_cast<std::size_t>(k)];
  }
  const bool pass = by_res == by_sums && by_res == oracle::QPoly{-1, 9, -6, 1} && lib_matches;
  return {pass, "resultant and power sums give x^3-6x^2+9x-1; library minpoly " +
                    (p[1].exact ? p[1].exact->polynomial().to_expression() : std::string("missing"))};
}

Outcome product_suite() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  const auto t0 = Clock::now();
  int agree = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const RingTag tag = static_cast<RingTag>(trial % 3);
    const TorusMatrix g = testing::random_automorphism(rng, dim(rng), tag, 5);
    const TorusMatrix h = testing::random_automorphism(rng, dim(rng), tag, 5);
    if (verify_product_formula(g, h, decimal_tolerance(9)).all_agree()) ++agree;
  }
  const double t = seconds_since(t0);
  return {agree == 50 && t < 60, std::to_string(agree) + "/50 pairs agree within 1e-9 in " + fmt(t) + " s"};
}

Outcome structural_invariants() {
  std::mt19937_64 rng(8675309);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RingTag tag = static_cast<RingTag>(trial % 3);
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    const TorusMatrix m = testing::random_automorphism(rng, n, tag, 5);
    const DegreeProfile p = degree_profile(m);
    bool ok = exactly_one(p[0]) && exactly_one(p[n]) && check_log_concavity(p).holds();
    const TorusMatrix s = testing::random_unimodular(rng, n, tag);
    const DegreeProfile c = degree_profile(s * m * s.inverse());
    const DegreeProfile inv = degree_profile(m.inverse());
    for (std::size_t k = 0; k <= n; ++k) ok = ok && same_degree(p[k], c[k]) && same_degree(inv[k], p[n - k]);
    if (!ok) {
      ++failures;
      std::cerr << "  invariant failure: " << m.to_string() << " over " << ring_name(tag) << "\n";
    }
  }
  return {failures == 0, "200 random automorphisms, " + std::to_string(failures) +
                             " failures (endpoints, log-concavity, conjugation, inverse reversal)"};
}

Outcome symbolic_suite() {
  const auto t0 = Clock::now();
  const CommandResult r = cmd_verify_symbolic();
  const double t = seconds_since(t0);
  std::size_t passed = 0;
  for (const auto& c : r.json["checks"]) {
    const std::string s = c["status"];
    passed += (s == "zero" || s == "dimensions-agree" || s == "invariant") ? 1 : 0;
  }
  return {r.exit_code == kExitOk && t < 60, std::to_string(passed) + "/" + std::to_string(r.json["checks"].size()) +
                                                 " checks exact zero or agreeing, d <= 12, in " + fmt(t) + " s"};
}

Outcome salem_triple() {
  struct Case {
    IntPolynomial p;
    SalemVerdict expected;
  };
  const std::vector<Case> cases{{IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, SalemVerdict::salem},
                                {IntPolynomial{-1, -1, 1}, SalemVerdict::pisot},
                                {IntPolynomial{-1, 9, -6, 1}, SalemVerdict::neither}};
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const ClassificationEvidence e = classify(c.p);
    const Eigen::VectorXcd r = oracle::roots(c.p);
    int inside = 0, on = 0;
    for (int i = 0; i < r.size(); ++i) {
      const double m = std::abs(r(i));
      if (std::abs(m - 1) < 1e-9) ++on;
      else if (m < 1) ++inside;
    }
    pass = pass && e.verdict == c.expected && e.roots_inside == inside && e.roots_on_circle == on;
    detail += (detail.empty() ? "" : ", ") + c.p.to_expression() + " -> " + salem_verdict_name(e.verdict);
  }
  return {pass, detail};
}

Outcome negative_controls() {
  const PrimitivityCertificate c = certify(DegreeProfile::synthetic({1, 1, 1, 1}), MapKind::automorphism, 3);
  const CommandResult bad = cmd_verify_symbolic(kDefaultMembershipBound, true);
  const bool pass = c.verdict == PrimitivityVerdict::inconclusive && bad.exit_code == kExitVerificationFailure;
  return {pass, std::string("all-ones profile -> ") + verdict_name(c.verdict) +
                    ", corrupted generators -> exit " + std::to_string(bad.exit_code)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"family reproduction a = 1..20", family_scan},
      {"numeric anchor a = 1", numeric_anchor},
      {"exact minimal polynomial cross-check", exact_cross_check},
      {"product formula, 50 random pairs", product_suite},
      {"structural invariants, 200 automorphisms", structural_invariants},
      {"symbolic suite", symbolic_suite},
      {"Salem classifier triple", salem_triple},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
