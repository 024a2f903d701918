#include "json_report.hpp"

#include "hyperlc/algebraic.hpp"
#include "hyperlc/errors.hpp"
#include "hyperlc/parse.hpp"

namespace hyperlc::cli {

namespace {

const char* upper_kind_name(UpperKind k) {
  switch (k) {
    case UpperKind::Finite:
      return "finite";
    case UpperKind::Unbounded:
      return "unbounded";
    case UpperKind::Unknown:
      break;
  }
  return "unknown";
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

Json poly_json(const Poly& p) {
  return Json{{"coeffs", rationals_json(p.coeffs())}, {"text", to_string(p)}};
}

Json interval_json(const IsolatingInterval& iv) {
  return Json{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"multiplicity", iv.multiplicity}};
}

Json curve_json(const HyperellipticCurve& curve) {
  return Json{{"P", poly_json(curve.P)}, {"Q", poly_json(curve.Q)}};
}

Json system_json(const LienardSystem& sys) {
  return Json{{"f", poly_json(sys.f)}, {"g", poly_json(sys.g)}, {"m", sys.m()}, {"n", sys.n()}};
}

Json bounds_json(int m, int n, const Bounds& b) {
  Json out{{"m", m}, {"n", n}, {"lower", b.lower}};
  out["upper"] = b.upper ? Json(*b.upper) : Json(nullptr);
  out["upper_kind"] = upper_kind_name(b.upper_kind);
  out["exact"] = b.exact;
  if (!b.note.empty()) out["note"] = b.note;
  return out;
}

Json report_json(const CertificationReport& report) {
  Json out{{"m", report.m}, {"n", report.n}, {"all_roots_real", report.all_roots_real}};
  Json roots = Json::array();
  for (const auto& r : report.q_roots) roots.push_back(interval_json(r));
  out["q_roots"] = std::move(roots);
  Json intervals = Json::array();
  for (const auto& v : report.intervals) {
    Json iv{{"s1", interval_json(v.s1)},
            {"s2", interval_json(v.s2)},
            {"simple_roots", v.simple_roots},
            {"q_positive", v.q_positive},
            {"curve_inside", v.curve_inside},
            {"no_common_root", v.no_common_root},
            {"critical_points", v.critical_points},
            {"unique_critical", v.unique_critical}};
    iv["g_prime_positive"] = v.g_prime_positive ? Json(*v.g_prime_positive) : Json(nullptr);
    iv["certified"] = v.certified;
    if (!v.note.empty()) iv["note"] = v.note;
    intervals.push_back(std::move(iv));
  }
  out["conditions"] = std::move(intervals);
  out["certified_count"] = report.certified_count;
  out["bounds"] = bounds_json(report.m, report.n, report.bounds);
  out["within_bounds"] = report.within_bounds;
  return out;
}

Json recovery_json(const LienardSystem& sys, const RecoveryOutcome& out) {
  Json j{{"system", system_json(sys)}};
  if (out.curve) {
    j["P"] = poly_json(out.curve->P);
    j["Q"] = poly_json(out.curve->Q);
    j["verified"] = out.verified;
    Json steps = Json::array();
    for (const auto& s : out.schedule) {
      steps.push_back(Json{{"unknown", s.unknown},
                           {"equation", s.equation},
                           {"pivot", to_string(s.pivot)},
                           {"value", to_string(s.value)}});
    }
    j["schedule"] = std::move(steps);
  } else {
    j["no_curve"] = true;
    j["witness_degree"] = out.witness_degree;
    j["witness_family"] = out.witness_family;
  }
  j["branches"] = out.branches;
  return j;
}

Json construction_json(const ConstructionResult& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return Json{{"family", r.family},
              {"m", r.m},
              {"n", r.n},
              {"advertised", r.advertised},
              {"curve", curve_json(r.curve)},
              {"system", system_json(r.system)},
              {"parameters", std::move(params)},
              {"report", report_json(r.report)},
              {"certified_count", r.report.certified_count}};
}

Json roots_json(const Poly& f) {
  if (f.degree() < 1) throw DegreeZeroInput("roots needs a polynomial of degree >= 1");
  const auto rep = discrimination_report(f);
  Json out{{"poly", poly_json(f)},
           {"degree", f.degree()},
           {"distinct_real", rep.count.distinct_real},
           {"imaginary_pairs", rep.count.imaginary_pairs},
           {"discriminant_sequence", rationals_json(rep.discriminants)},
           {"sign_list", rep.signs},
           {"revised_sign_list", rep.revised_signs}};
  Json roots = Json::array();
  for (const auto& iv : isolate_real_roots(f)) roots.push_back(interval_json(iv));
  out["real_roots"] = std::move(roots);
  return out;
}

Poly poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw ParseError("polynomial object needs \"coeffs\"");
    list = &j.at("coeffs");
  }
  if (!list->is_array()) throw ParseError("polynomial must be a string, a coefficient array or {\"coeffs\": [...]}");
  std::vector<Rational> coeffs;
  for (const auto& c : *list) {
    if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw ParseError("coefficients must be integers or \"p/q\" strings");
    }
  }
  return Poly(std::move(coeffs));
}

std::optional<HyperellipticCurve> curve_from_json(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  const Json& src = j.contains("curve") ? j.at("curve") : j;
  if (!src.contains("P") || !src.contains("Q")) return std::nullopt;
  return HyperellipticCurve{poly_from_json(src.at("P")), poly_from_json(src.at("Q"))};
}

std::optional<LienardSystem> system_from_json(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  const Json& src = j.contains("system") ? j.at("system") : j;
  if (!src.contains("f") || !src.contains("g")) return std::nullopt;
  return LienardSystem{poly_from_json(src.at("f")), poly_from_json(src.at("g"))};
}

}  // namespace hyperlc::cli
