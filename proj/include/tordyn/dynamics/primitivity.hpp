#pragma once

#include <string>
#include <vector>

#include "tordyn/dynamics/degree.hpp"

namespace tordyn {

enum class MapKind { automorphism, bimeromorphic, dominant_meromorphic };
enum class PrimitivityVerdict { primitive, inconclusive };
enum class PrimitivityRule { criterion_1, criterion_2, none };

inline const char* map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::automorphism: return "automorphism";
    case MapKind::bimeromorphic: return "bimeromorphic";
    case MapKind::dominant_meromorphic: return "dominant-meromorphic";
  }
  return "?";
}

inline MapKind parse_map_kind(const std::string& s) {
  if (s == "automorphism") return MapKind::automorphism;
  if (s == "bimeromorphic") return MapKind::bimeromorphic;
  if (s == "dominant-meromorphic") return MapKind::dominant_meromorphic;
  throw InvalidInput("unknown map kind '" + s + "'");
}

inline const char* verdict_name(PrimitivityVerdict v) {
  return v == PrimitivityVerdict::primitive ? "primitive" : "inconclusive";
}

inline const char* rule_name(PrimitivityRule r) {
  switch (r) {
    case PrimitivityRule::criterion_1: return "criterion-1";
    case PrimitivityRule::criterion_2: return "criterion-2";
    case PrimitivityRule::none: return "none";
  }
  return "?";
}

/// Replay of a hypothetical invariant fibration f -> g over a base B with
/// fibre action f|pi, for dim X = 3.
struct FibrationTrace {
  int dim_base = 0;
  std::vector<std::string> steps;
  bool infeasible = false;
};

struct PrimitivityCertificate {
  PrimitivityVerdict verdict = PrimitivityVerdict::inconclusive;
  PrimitivityRule rule = PrimitivityRule::none;
  MapKind map_kind = MapKind::automorphism;
  std::size_t dim = 0;
  double lambda1 = 0;
  double lambda2 = 0;
  std::vector<FibrationTrace> traces;
  std::vector<std::string> diagnostics;
};

namespace detail {

inline std::string degree_text(const DynamicalDegree& d) {
  if (d.exact && d.exact->is_rational()) return d.exact->rational_value()->get_str();
  return format_significant(d.value());
}

// true / false when decided, nullopt when the values cannot be separated
inline std::optional<bool> degrees_equal(const DynamicalDegree& a, const DynamicalDegree& b) {
  const auto ord = compare_degrees(a, b);
  if (!ord) return std::nullopt;
  return *ord == std::strong_ordering::equal;
}

inline std::optional<bool> degree_is_one(const DynamicalDegree& d) {
  return degrees_equal(d, DynamicalDegree::from_rational(1));
}

}  // namespace detail

/// Both base dimensions of a dim-3 profile with lambda_3 = 1. Relative and
/// base degrees are >= 1, so the unit top degree pins the factors of the
/// top-degree product to 1, and the remaining max-formulas then force
/// lambda_1 = lambda_2.
inline std::vector<FibrationTrace> analyze_fibration_cases(const DegreeProfile& profile) {
  if (profile.n != 3) {
    throw CapabilityError("fibration case analysis is implemented for dimension 3 only (criterion-1 covers the rest)");
  }
  const auto top = detail::degree_is_one(profile[3]);
  if (!top || !*top) throw InvalidInput("fibration case analysis needs lambda_3 = 1");
  const std::string l1 = detail::degree_text(profile[1]);
  const std::string l2 = detail::degree_text(profile[2]);
  const auto eq = detail::degrees_equal(profile[1], profile[2]);

  auto finish = [&](FibrationTrace& t) {
    t.steps.push_back("profile: lambda_1(f) = " + l1 + ", lambda_2(f) = " + l2);
    if (eq && !*eq) {
      t.infeasible = true;
      t.steps.push_back("lambda_1(f) != lambda_2(f): contradiction, no invariant fibration with dim B = " +
                        std::to_string(t.dim_base));
    } else if (eq) {
      t.steps.push_back("lambda_1(f) = lambda_2(f): no contradiction");
    } else {
      t.steps.push_back("lambda_1(f) vs lambda_2(f) undecided at this precision: no contradiction derived");
    }
  };

  FibrationTrace b1;
  b1.dim_base = 1;
  b1.steps = {
      "dim B = 1, fibres of dimension 2",
      "1 = lambda_3(f) = lambda_1(g) * lambda_2(f|pi)",
      "lambda_1(g) >= 1 and lambda_2(f|pi) >= 1, hence lambda_1(g) = lambda_2(f|pi) = 1",
      "lambda_1(f) = max{lambda_1(g) * lambda_0(f|pi), lambda_0(g) * lambda_1(f|pi)} = max{lambda_1(f|pi), 1}",
      "lambda_2(f) = max{lambda_1(g) * lambda_1(f|pi), lambda_0(g) * lambda_2(f|pi)} = max{lambda_1(f|pi), 1}",
      "hence lambda_1(f) = lambda_2(f)",
  };
  finish(b1);

  FibrationTrace b2;
  b2.dim_base = 2;
  b2.steps = {
      "dim B = 2, fibres of dimension 1",
      "1 = lambda_3(f) = lambda_2(g) * lambda_1(f|pi)",
      "lambda_2(g) >= 1 and lambda_1(f|pi) >= 1, hence lambda_2(g) = lambda_1(f|pi) = 1",
      "lambda_1(f) = max{lambda_1(g) * lambda_0(f|pi), lambda_0(g) * lambda_1(f|pi)} = max{lambda_1(g), 1}",
      "lambda_2(f) = max{lambda_2(g) * lambda_0(f|pi), lambda_1(g) * lambda_1(f|pi)} = max{1, lambda_1(g)}",
      "hence lambda_1(f) = lambda_2(f)",
  };
  finish(b2);
  return {b1, b2};
}

struct ImprimitivityBoundReport {
  Decision bound = Decision::undecided;  // lambda_2 >= lambda_1
  bool imprimitivity_excluded = false;
  std::string note;
};

/// Any invariant fibration forces lambda_2 >= lambda_1; failure of this
/// bound excludes imprimitivity.
inline ImprimitivityBoundReport imprimitivity_necessary_bound(const DegreeProfile& profile) {
  if (profile.n < 2) throw InvalidInput("imprimitivity bound needs dimension >= 2");
  ImprimitivityBoundReport out;
  const auto ord = compare_degrees(profile[2], profile[1]);
  if (!ord) {
    out.note = "lambda_1 and lambda_2 not separated; refine the tolerance";
    return out;
  }
  if (*ord == std::strong_ordering::less) {
    out.bound = Decision::violated;
    out.imprimitivity_excluded = true;
    out.note = "lambda_2 < lambda_1: imprimitive impossible";
  } else {
    out.bound = Decision::holds;
    out.note = *ord == std::strong_ordering::equal ? "lambda_2 = lambda_1: bound holds with equality"
                                                     : "lambda_2 > lambda_1: bound holds, no conclusion";
  }
  return out;
}

/// Primitivity from the degree profile. Criterion 1 (lambda_1 > lambda_2)
/// applies in every dimension; criterion 2 (lambda_1 != lambda_2) needs
/// dimension 3 and a bimeromorphic map with lambda_3 = 1.
inline PrimitivityCertificate certify(const DegreeProfile& profile, MapKind kind, std::size_t dim) {
  if (profile.n != dim || profile.lambdas.size() != dim + 1) {
    throw InvalidInput("certify: profile dimension " + std::to_string(profile.n) + " does not match dim " +
                       std::to_string(dim));
  }
  PrimitivityCertificate cert;
  cert.map_kind = kind;
  cert.dim = dim;
  if (dim < 2) {
    cert.diagnostics.push_back("dimension below 2: criteria need lambda_1 and lambda_2");
    return cert;
  }
  cert.lambda1 = profile[1].value();
  cert.lambda2 = profile[2].value();
  const auto ord = compare_degrees(profile[1], profile[2]);
  if (!ord) {
    cert.diagnostics.push_back("lambda_1 and lambda_2 enclosures overlap without exact handles; refine the tolerance");
    return cert;
  }
  if (*ord == std::strong_ordering::greater) {
    cert.verdict = PrimitivityVerdict::primitive;
    cert.rule = PrimitivityRule::criterion_1;
    return cert;
  }
  if (dim == 3 && kind != MapKind::dominant_meromorphic) {
    const auto top = detail::degree_is_one(profile[3]);
    if (!top || !*top) {
      cert.diagnostics.push_back("lambda_3 != 1: criterion-2 needs a bimeromorphic map");
      return cert;
    }
    cert.traces = analyze_fibration_cases(profile);
    const bool both = std::all_of(cert.traces.begin(), cert.traces.end(), [](const auto& t) { return t.infeasible; });
    if (*ord != std::strong_ordering::equal && both) {
      cert.verdict = PrimitivityVerdict::primitive;
      cert.rule = PrimitivityRule::criterion_2;
      return cert;
    }
  }
  if (*ord == std::strong_ordering::equal) {
    cert.diagnostics.push_back("lambda_1 = lambda_2: neither criterion applies");
  } else if (dim != 3) {
    cert.diagnostics.push_back("lambda_1 < lambda_2 and dim != 3: criterion-2 unavailable");
  } else {
    cert.diagnostics.push_back("lambda_1 < lambda_2 but criterion-2 needs an automorphism or bimeromorphic map");
  }
  return cert;
}

}  // namespace tordyn
