#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlc/bivariate.hpp"
#include "hyperlc/poly.hpp"
#include "hyperlc/rootclass.hpp"

namespace hyperlc {

/// (y + P(x))^2 - Q(x) = 0
struct HyperellipticCurve {
  Poly P;
  Poly Q;

  friend bool operator==(const HyperellipticCurve&, const HyperellipticCurve&) = default;
};

/// x' = y, y' = -f(x) y - g(x)
struct LienardSystem {
  Poly f;
  Poly g;

  int m() const { return f.degree(); }
  int n() const { return g.degree(); }

  friend bool operator==(const LienardSystem&, const LienardSystem&) = default;
};

/// f = P' + P Q' / (2Q), g = Q' (P^2 - Q) / (2Q).
/// Throws NonPolynomialSystem when either quotient is not exact or the
/// result is not a proper system (f = 0 or deg g < 1).
LienardSystem derive_system(const HyperellipticCurve& curve);

/// K = -P Q' / Q. Throws NonPolynomialSystem if Q does not divide P Q'.
Poly cofactor(const HyperellipticCurve& curve);

BivariatePoly curve_polynomial(const HyperellipticCurve& curve);

/// y F_x - (f y + g) F_y - K F with K from cofactor(curve).
BivariatePoly invariance_residual(const LienardSystem& sys, const HyperellipticCurve& curve);

/// True iff the residual vanishes identically. False (never throws) when the
/// cofactor does not exist.
bool invariance_check(const LienardSystem& sys, const HyperellipticCurve& curve);

enum class UpperKind { Finite, Unbounded, Unknown };

struct Bounds {
  int lower = 0;
  std::optional<int> upper;
  UpperKind upper_kind = UpperKind::Unknown;
  bool exact = false;
  std::string note;
};

/// Known lower and upper estimates for the number of hyperelliptic limit
/// cycles of type (m, n) systems.
Bounds bounds(int m, int n);

struct IntervalVerdict {
  IsolatingInterval s1;
  IsolatingInterval s2;
  bool simple_roots = false;
  bool q_positive = false;    // all roots real and Q > 0 on (s1, s2)
  bool curve_inside = false;  // P^2 - Q < 0 on (s1, s2)
  bool no_common_root = false;  // gcd(Q', f) has no root in (s1, s2)
  int critical_points = 0;      // distinct roots of Q' in (s1, s2)
  bool unique_critical = false;
  std::optional<bool> g_prime_positive;  // sign of g' at the critical point
  bool certified = false;
  std::string note;
};

struct CertificationReport {
  int m = 0;
  int n = 0;
  bool all_roots_real = false;
  std::vector<IsolatingInterval> q_roots;
  std::vector<IntervalVerdict> intervals;
  int certified_count = 0;
  Bounds bounds;
  bool within_bounds = true;
};

CertificationReport certify(const HyperellipticCurve& curve);

}  // namespace hyperlc
