#pragma once

#include <optional>

#include "hyperlc/families.hpp"
#include "hyperlc/lienard.hpp"
#include "hyperlc/recover.hpp"
#include "hyperlc/rootclass.hpp"
#include "json.hpp"

namespace hyperlc::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// {"coeffs": ["p/q", ...], "text": "..."}; coefficients ascending.
Json poly_json(const Poly& p);
Json interval_json(const IsolatingInterval& iv);
Json curve_json(const HyperellipticCurve& curve);
Json system_json(const LienardSystem& sys);
Json bounds_json(int m, int n, const Bounds& b);
Json report_json(const CertificationReport& report);
Json recovery_json(const LienardSystem& sys, const RecoveryOutcome& out);
Json construction_json(const ConstructionResult& r);
Json roots_json(const Poly& f);

/// Accepts a coefficient array, a {"coeffs": [...]} object or a polynomial
/// string.
Poly poly_from_json(const Json& j);

/// Looks for P and Q at the top level or under "curve".
std::optional<HyperellipticCurve> curve_from_json(const Json& j);
/// Looks for f and g at the top level or under "system".
std::optional<LienardSystem> system_from_json(const Json& j);

}  // namespace hyperlc::cli
