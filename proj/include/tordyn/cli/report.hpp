#pragma once

#include <json.hpp>

#include "tordyn/dynamics/primitivity.hpp"
#include "tordyn/dynamics/salem.hpp"
#include "tordyn/symbolic/verify.hpp"

namespace tordyn {

using Json = nlohmann::ordered_json;

/// Floats go out rounded to 10 significant digits.
inline Json json_float(double v) { return round_significant(v, 10); }

inline Json interval_json(const Interval& iv) { return Json::array({iv.lo.get_str(), iv.hi.get_str()}); }

inline Json real_algebraic_json(const RealAlgebraic& r) {
  Json j;
  j["float"] = json_float(r.to_double());
  j["minpoly"] = r.polynomial().to_canonical();
  j["interval"] = interval_json(r.interval());
  return j;
}

inline Json degree_json(const DynamicalDegree& d) {
  if (d.exact) return real_algebraic_json(*d.exact);
  Json j;
  j["float"] = json_float(d.value());
  j["interval"] = interval_json(d.enclosure);
  return j;
}

inline Json profile_json(const DegreeProfile& p) {
  Json j;
  j["n"] = p.n;
  Json ls = Json::array();
  for (const auto& l : p.lambdas) ls.push_back(degree_json(l));
  j["lambda"] = ls;
  j["entropy"] = json_float(p.entropy);
  j["transfer_note"] = p.transfer_note;
  return j;
}

inline Json trace_json(const FibrationTrace& t) {
  Json j;
  j["dimB"] = t.dim_base;
  j["steps"] = t.steps;
  j["conclusion"] = t.infeasible ? "infeasible" : "feasible";
  return j;
}

inline Json certificate_json(const PrimitivityCertificate& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["rule"] = rule_name(c.rule);
  j["map_kind"] = map_kind_name(c.map_kind);
  j["dim"] = c.dim;
  j["lambda1"] = json_float(c.lambda1);
  j["lambda2"] = json_float(c.lambda2);
  Json ts = Json::array();
  for (const auto& t : c.traces) ts.push_back(trace_json(t));
  j["traces"] = ts;
  if (!c.diagnostics.empty()) j["diagnostics"] = c.diagnostics;
  return j;
}

inline Json classification_json(const ClassificationEvidence& e) {
  Json j;
  j["poly"] = e.poly.to_canonical();
  j["expression"] = e.poly.to_expression();
  j["degree"] = e.degree;
  j["reciprocal"] = e.reciprocal;
  j["real_roots_outside"] = e.real_roots_outside;
  j["roots_outside"] = e.roots_outside;
  j["roots_on_circle"] = e.roots_on_circle;
  j["roots_inside"] = e.roots_inside;
  j["largest_root"] = real_algebraic_json(e.largest_root);
  j["verdict"] = salem_verdict_name(e.verdict);
  j["convention_dependent"] = e.convention_dependent;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline Json finite_order_json(const FiniteOrderResult& r) {
  Json j;
  j["order"] = r.order ? Json(*r.order) : Json(nullptr);
  j["certified_infinite"] = r.certified_infinite;
  j["exceeds_bound"] = r.exceeds_bound;
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline Json log_concavity_json(const LogConcavityReport& r) {
  Json out = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    j["p"] = e.p;
    j["lhs"] = json_float(e.lhs);
    j["rhs"] = json_float(e.rhs);
    j["decision"] = decision_name(e.decision);
    j["exact"] = e.exact;
    out.push_back(j);
  }
  return out;
}

inline Json product_report_json(const ProductCheckReport& r) {
  Json j;
  j["n_g"] = r.n_g;
  j["n_h"] = r.n_h;
  j["tolerance"] = r.tolerance.get_str();
  Json es = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["p"] = e.p;
    x["lhs"] = json_float(e.lhs);
    x["rhs"] = json_float(e.rhs);
    x["argmax_j"] = e.argmax_j;
    x["agree"] = e.agree;
    x["exact"] = e.exact;
    es.push_back(x);
  }
  j["entries"] = es;
  j["all_agree"] = r.all_agree();
  return j;
}

inline Json symbolic_check_json(const SymbolicCheck& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = check_status_name(c.status);
  j["expression"] = c.expression;
  if (!c.residual.empty()) j["residual"] = c.residual;
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

inline Json symbolic_report_json(const SymbolicReport& r) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : r.checks) cs.push_back(symbolic_check_json(c));
  j["checks"] = cs;
  j["all_passed"] = r.all_passed();
  return j;
}

}  // namespace tordyn
