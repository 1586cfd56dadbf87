#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include "tordyn/cli/parse.hpp"
#include "tordyn/cli/report.hpp"

namespace tordyn {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailure = 1, kExitInvalidInput = 2, kExitCapability = 3 };

struct CommandResult {
  int exit_code = kExitOk;
  Json json;
  std::string table;
  std::string message;  // for stderr
};

namespace detail {

inline CommandResult error_result(int code, const std::string& what) {
  CommandResult r;
  r.exit_code = code;
  r.json["error"] = code == kExitInvalidInput ? "invalid-input" : "capability";
  r.json["message"] = what;
  r.table = "error: " + what + "\n";
  r.message = what;
  return r;
}

// Runs f, mapping the library's error types onto exit codes.
template <typename F>
CommandResult guarded(F&& f) {
  try {
    return f();
  } catch (const InvalidInput& e) {
    return error_result(kExitInvalidInput, e.what());
  } catch (const CapabilityError& e) {
    return error_result(kExitCapability, e.what());
  }
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

}  // namespace detail

/// Worker count from TORDYN_WORKERS, else the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("TORDYN_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls job(i) for i in [0, count) on a pool of workers. Results are
/// stored by index by the caller, so order is independent of scheduling.
template <typename Job>
void parallel_for(std::size_t count, unsigned workers, Job&& job) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// ---- analyze ----

struct AnalysisRequest {
  TorusMatrix matrix;
  Rational tolerance = default_degree_tolerance();
};

inline Json analysis_bundle(const AnalysisRequest& req) {
  const TorusMatrix& m = req.matrix;
  if (req.tolerance <= 0) throw InvalidInput("tolerance must be positive");
  const RingElement det = m.determinant();
  if (!det.is_unit()) {
    throw InvalidInput("not an automorphism: determinant " + det.to_string() + " is not a unit of " +
                       ring_name(m.tag()));
  }
  const DegreeProfile profile = degree_profile(m, req.tolerance);
  const PrimitivityCertificate cert = certify(profile, MapKind::automorphism, m.size());

  Json j;
  j["matrix"] = m.to_string();
  j["ring"] = ring_name(m.tag());
  j["dim"] = m.size();
  j["determinant"] = det.to_string();
  j["tolerance"] = req.tolerance.get_str();
  j["profile"] = profile_json(profile);
  j["entropy"] = json_float(profile.entropy);
  j["positive_entropy"] = profile.entropy > 0;
  j["log_concavity"] = log_concavity_json(check_log_concavity(profile));
  j["certificate"] = certificate_json(cert);

  Json salem;
  if (m.size() >= 1 && profile[1].exact) {
    const RealAlgebraic& l1 = *profile[1].exact;
    if (compare(l1, Rational(1)) == std::strong_ordering::greater) {
      salem = classification_json(classify(l1.polynomial()));
    } else {
      salem["verdict"] = nullptr;
      salem["note"] = "lambda_1 = 1: nothing to classify";
    }
  } else {
    salem["verdict"] = nullptr;
    salem["note"] = "lambda_1 has no exact handle";
  }
  j["salem"] = salem;
  j["finite_order"] = finite_order_json(finite_order(m));
  j["transfer_note"] = profile.transfer_note;
  return j;
}

inline std::string analysis_table(const Json& j) {
  std::ostringstream os;
  os << "ring " << j["ring"].get<std::string>() << ", dim " << j["dim"].get<std::size_t>() << ", det "
     << j["determinant"].get<std::string>() << "\n";
  const auto& ls = j["profile"]["lambda"];
  for (std::size_t p = 0; p < ls.size(); ++p) {
    os << "  lambda_" << p << " = " << format_significant(ls[p]["float"].get<double>());
    if (ls[p].contains("minpoly")) os << "  minpoly " << ls[p]["minpoly"].get<std::string>();
    os << "\n";
  }
  os << "entropy " << format_significant(j["entropy"].get<double>()) << "\n";
  os << "primitivity " << j["certificate"]["verdict"].get<std::string>() << " (" << j["certificate"]["rule"].get<std::string>()
     << ")\n";
  os << "salem " << (j["salem"]["verdict"].is_null() ? std::string("n/a") : j["salem"]["verdict"].get<std::string>()) << "\n";
  const auto& fo = j["finite_order"];
  os << "order " << (fo["order"].is_null() ? std::string(fo["certified_infinite"].get<bool>() ? "infinite" : "unknown")
                                            : std::to_string(fo["order"].get<unsigned long>()))
     << "\n";
  return os.str();
}

inline CommandResult cmd_analyze(const std::string& matrix_text, const std::string& ring,
                                 const std::string& tol_text = "") {
  return detail::guarded([&] {
    AnalysisRequest req{parse_matrix(matrix_text, parse_ring_tag(ring))};
    if (!tol_text.empty()) req.tolerance = parse_rational(tol_text);
    CommandResult r;
    r.json = analysis_bundle(req);
    r.table = analysis_table(r.json);
    return r;
  });
}

// ---- scan ----

inline constexpr long kMaxScanParameter = 10000;

/// Companion matrix of x^3 - 3a^2 x + 1.
inline TorusMatrix family_matrix(long a) {
  const long s = 3 * a * a;
  return TorusMatrix({{0, 1, 0}, {0, 0, 1}, {-1, s, 0}}, RingTag::integer);
}

inline IntPolynomial family_polynomial(long a) {
  return IntPolynomial({Integer(1), Integer(-3) * Integer(a) * Integer(a), Integer(0), Integer(1)});
}

struct FamilyScanRow {
  long a = 0;
  IntPolynomial phi;
  bool char_poly_matches = false;
  std::array<Integer, 4> signs;  // phi(-a), phi(0), phi(1), phi(a)
  bool sign_table = false;
  bool irreducible = false;
  DynamicalDegree lambda1;
  DynamicalDegree lambda2;
  bool ordering_exact = false;  // lambda_2 > lambda_1 > 1 decided from handles
  double entropy = 0;
  PrimitivityCertificate certificate;
  SalemVerdict salem = SalemVerdict::neither;
  bool salem_decided = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline FamilyScanRow scan_row(long a) {
  FamilyScanRow row;
  row.a = a;
  row.phi = family_polynomial(a);
  const TorusMatrix m = family_matrix(a);
  // over Z the lattice action is M twice over, so its characteristic polynomial is phi^2
  row.char_poly_matches = char_poly(realify(m)) == row.phi * row.phi;
  if (!row.char_poly_matches) row.failures.push_back("characteristic polynomial differs from phi");

  const Integer aa(a);
  row.signs = {row.phi.eval(Integer(-aa)), row.phi.eval(Integer(0)), row.phi.eval(Integer(1)), row.phi.eval(aa)};
  const Integer a2 = aa * aa;
  const Integer a3 = a2 * aa;
  // closed forms: phi(-a) = 2a^3 + 1, phi(0) = 1, phi(1) = 2 - 3a^2, phi(a) = 1 - 2a^3
  row.sign_table = row.signs[0] == 2 * a3 + 1 && row.signs[1] == 1 && row.signs[2] == 2 - 3 * a2 &&
                   row.signs[3] == 1 - 2 * a3 && row.signs[0] > 0 && row.signs[1] > 0 && row.signs[2] < 0 &&
                   row.signs[3] < 0;
  if (!row.sign_table) row.failures.push_back("sign table");

  row.irreducible = is_irreducible(row.phi);
  if (!row.irreducible) row.failures.push_back("phi reducible");

  const DegreeProfile profile = degree_profile(m);
  row.lambda1 = profile[1];
  row.lambda2 = profile[2];
  row.entropy = profile.entropy;
  if (row.lambda1.exact && row.lambda2.exact) {
    row.ordering_exact = compare(*row.lambda2.exact, *row.lambda1.exact) == std::strong_ordering::greater &&
                         compare(*row.lambda1.exact, Rational(1)) == std::strong_ordering::greater;
  }
  if (!row.ordering_exact) row.failures.push_back("lambda_2 > lambda_1 > 1 not decided exactly");

  row.certificate = certify(profile, MapKind::automorphism, 3);
  if (row.certificate.verdict != PrimitivityVerdict::primitive || row.certificate.rule != PrimitivityRule::criterion_2) {
    row.failures.push_back("certificate is not primitive via criterion-2");
  }

  if (row.lambda1.exact) {
    row.salem = classify(row.lambda1.exact->polynomial()).verdict;
    row.salem_decided = true;
  }
  if (!row.salem_decided || row.salem != SalemVerdict::neither) row.failures.push_back("salem verdict is not neither");
  return row;
}

inline Json scan_row_json(const FamilyScanRow& r) {
  Json j;
  j["a"] = r.a;
  j["phi"] = r.phi.to_canonical();
  j["phi_expression"] = r.phi.to_expression();
  Json s;
  s["phi(-a)"] = r.signs[0].get_str();
  s["phi(0)"] = r.signs[1].get_str();
  s["phi(1)"] = r.signs[2].get_str();
  s["phi(a)"] = r.signs[3].get_str();
  s["holds"] = r.sign_table;
  j["sign_table"] = s;
  j["irreducible"] = r.irreducible;
  j["lambda1"] = degree_json(r.lambda1);
  j["lambda2"] = degree_json(r.lambda2);
  j["ordering_exact"] = r.ordering_exact;
  j["entropy"] = json_float(r.entropy);
  j["primitive"] = verdict_name(r.certificate.verdict);
  j["rule"] = rule_name(r.certificate.rule);
  j["salem"] = r.salem_decided ? Json(salem_verdict_name(r.salem)) : Json(nullptr);
  j["ok"] = r.ok();
  if (!r.ok()) j["failures"] = r.failures;
  return j;
}

inline std::pair<long, long> parse_scan_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InvalidInput("range must look like A..B, got '" + text + "'");
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("range bound '" + s + "' is not a positive integer");
    }
    return std::stol(s);
  };
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

inline CommandResult cmd_scan(const std::string& family, long a_min, long a_max, unsigned workers = worker_count()) {
  return detail::guarded([&] {
    if (family != "pa") throw InvalidInput("unknown family '" + family + "'");
    if (a_min < 1 || a_max > kMaxScanParameter || a_min > a_max) {
      throw InvalidInput("invalid range " + std::to_string(a_min) + ".." + std::to_string(a_max) + ": need 1 <= A <= B <= " +
                         std::to_string(kMaxScanParameter));
    }
    const std::size_t count = static_cast<std::size_t>(a_max - a_min + 1);
    std::vector<FamilyScanRow> rows(count);
    parallel_for(count, workers, [&](std::size_t i) { rows[i] = scan_row(a_min + static_cast<long>(i)); });

    CommandResult r;
    Json js = Json::array();
    std::ostringstream os;
    os << detail::pad("a", 6) << detail::pad("lambda1", 16) << detail::pad("lambda2", 16) << detail::pad("entropy", 14)
       << detail::pad("primitive", 24) << detail::pad("salem", 9) << "ok\n";
    bool all_ok = true;
    for (const auto& row : rows) {
      js.push_back(scan_row_json(row));
      all_ok = all_ok && row.ok();
      os << detail::pad(std::to_string(row.a), 6) << detail::pad(format_significant(row.lambda1.value()), 16)
         << detail::pad(format_significant(row.lambda2.value()), 16) << detail::pad(format_significant(row.entropy), 14)
         << detail::pad(std::string(verdict_name(row.certificate.verdict)) + " (" + rule_name(row.certificate.rule) + ")", 24)
         << detail::pad(row.salem_decided ? salem_verdict_name(row.salem) : "?", 9) << (row.ok() ? "yes" : "NO") << "\n";
    }
    r.json["family"] = family;
    r.json["range"] = Json::array({a_min, a_max});
    r.json["rows"] = js;
    r.json["all_ok"] = all_ok;
    r.table = os.str();
    if (!all_ok) {
      r.exit_code = kExitVerificationFailure;
      r.message = "scan: some rows failed verification";
    }
    return r;
  });
}

// ---- classify ----

inline CommandResult cmd_classify(const std::string& poly_text) {
  return detail::guarded([&] {
    const ClassificationEvidence ev = classify(parse_polynomial(poly_text));
    CommandResult r;
    r.json = classification_json(ev);
    std::ostringstream os;
    os << ev.poly.to_expression() << ": " << salem_verdict_name(ev.verdict)
       << (ev.convention_dependent ? " (convention dependent)" : "") << "\n"
       << "  largest root " << format_significant(ev.largest_root.to_double()) << "\n"
       << "  roots inside/on/outside the unit circle: " << ev.roots_inside << "/" << ev.roots_on_circle << "/"
       << ev.roots_outside << "\n";
    r.table = os.str();
    return r;
  });
}

// ---- verify-symbolic ----

inline CommandResult cmd_verify_symbolic(int degree_bound = kDefaultMembershipBound, bool corrupt_generators = false) {
  return detail::guarded([&] {
    const auto gens = corrupt_generators ? corrupted_generators() : invariant_generators();
    const SymbolicReport rep = run_symbolic_suite(degree_bound, gens);
    CommandResult r;
    r.json = symbolic_report_json(rep);
    std::ostringstream os;
    for (const auto& c : rep.checks) {
      os << detail::pad(c.name, 30) << check_status_name(c.status);
      if (!c.residual.empty()) os << "  residual: " << c.residual;
      os << "\n";
    }
    r.table = os.str();
    if (!rep.all_passed()) {
      r.exit_code = kExitVerificationFailure;
      for (const auto& c : rep.checks) {
        if (!c.passed()) {
          r.message = "verify-symbolic: " + c.name + " failed" + (c.residual.empty() ? "" : ", residual " + c.residual);
          break;
        }
      }
    }
    return r;
  });
}

// ---- product-check ----

inline CommandResult cmd_product_check(const std::string& g_text, const std::string& h_text, const std::string& ring,
                                       const std::string& tol_text = "") {
  return detail::guarded([&] {
    const RingTag tag = parse_ring_tag(ring);
    const TorusMatrix g = parse_matrix(g_text, tag);
    const TorusMatrix h = parse_matrix(h_text, tag);
    const Rational tol = tol_text.empty() ? decimal_tolerance(9) : parse_rational(tol_text);
    const ProductCheckReport rep = verify_product_formula(g, h, tol);
    CommandResult r;
    r.json = product_report_json(rep);
    std::ostringstream os;
    os << detail::pad("p", 4) << detail::pad("lambda_p(f)", 18) << detail::pad("max product", 18) << "agree\n";
    for (const auto& e : rep.entries) {
      os << detail::pad(std::to_string(e.p), 4) << detail::pad(format_significant(e.lhs), 18)
         << detail::pad(format_significant(e.rhs), 18) << (e.agree ? "yes" : "NO") << "\n";
    }
    r.table = os.str();
    if (!rep.all_agree()) {
      r.exit_code = kExitVerificationFailure;
      r.message = "product-check: formula disagrees";
    }
    return r;
  });
}

}  // namespace tordyn
