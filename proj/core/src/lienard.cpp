#include "hyperlc/lienard.hpp"

#include "hyperlc/algebraic.hpp"
#include "hyperlc/errors.hpp"

namespace hyperlc {

namespace {

Poly exact_quotient(const Poly& num, const Poly& den, const char* what) {
  DivRem qr = divrem(num, den);
  if (!qr.remainder.is_zero()) throw NonPolynomialSystem(std::string(what) + " is not a polynomial");
  return qr.quotient;
}

}  // namespace

LienardSystem derive_system(const HyperellipticCurve& curve) {
  if (curve.Q.is_zero()) throw NonPolynomialSystem("Q is the zero polynomial");
  const Poly dq = derivative(curve.Q);
  const Poly two_q = curve.Q * Rational(2);
  LienardSystem sys;
  sys.f = derivative(curve.P) + exact_quotient(curve.P * dq, two_q, "P Q' / (2Q)");
  sys.g = exact_quotient(dq * (curve.P * curve.P - curve.Q), two_q, "Q' (P^2 - Q) / (2Q)");
  if (sys.f.is_zero()) throw NonPolynomialSystem("derived f vanishes identically");
  if (sys.g.degree() < 1) throw NonPolynomialSystem("derived g has degree < 1");
  return sys;
}

Poly cofactor(const HyperellipticCurve& curve) {
  if (curve.Q.is_zero()) throw NonPolynomialSystem("Q is the zero polynomial");
  return -exact_quotient(curve.P * derivative(curve.Q), curve.Q, "P Q' / Q");
}

BivariatePoly curve_polynomial(const HyperellipticCurve& curve) {
  const BivariatePoly shifted = BivariatePoly::y() + BivariatePoly::from_x(curve.P);
  return shifted * shifted - BivariatePoly::from_x(curve.Q);
}

BivariatePoly invariance_residual(const LienardSystem& sys, const HyperellipticCurve& curve) {
  const BivariatePoly F = curve_polynomial(curve);
  const BivariatePoly y = BivariatePoly::y();
  const BivariatePoly field = BivariatePoly::from_x(sys.f) * y + BivariatePoly::from_x(sys.g);
  const BivariatePoly K = BivariatePoly::from_x(cofactor(curve));
  return y * F.d_dx() - field * F.d_dy() - K * F;
}

bool invariance_check(const LienardSystem& sys, const HyperellipticCurve& curve) {
  try {
    return invariance_residual(sys, curve).is_zero();
  } catch (const NonPolynomialSystem&) {
    return false;
  }
}

Bounds bounds(int m, int n) {
  if (m < 0 || n < 1) throw OutOfRange("type (m, n) needs m >= 0 and n >= 1");
  Bounds b;
  auto zero = [&](std::string note) {
    b.lower = 0;
    b.upper = 0;
    b.upper_kind = UpperKind::Finite;
    b.exact = true;
    b.note = std::move(note);
    return b;
  };
  if (m <= 1) return zero("no hyperelliptic limit cycles for m <= 1");
  if (n <= m) return zero("no hyperelliptic limit cycles for n <= m, assuming f g (f/g)' is not identically zero");
  if (n == m + 1) return zero("no hyperelliptic limit cycles for n = m + 1");
  if ((m == 2 && n == 4) || (m == 3 && n == 5)) return zero("no hyperelliptic limit cycles for this type");

  const int knee = (4 * m + 2) / 3;
  if (n <= knee) {
    b.lower = n - m - 1;
  } else if (n <= 2 * m) {
    b.lower = (n - 1) / 4;
    if (m < 4) b.note = "lower bound from the existence of at least one cycle";
  } else {
    b.lower = m / 2;
  }

  if (n == 2 * m + 1) {
    b.upper_kind = UpperKind::Unbounded;
  } else if (n > 2 * m + 1) {
    b.upper = m / 2;
  } else if (m >= 4 && n <= 2 * m - 2) {
    b.upper = (n + 1) / 4;
  } else if (m >= 4) {
    b.upper = (n - 1) / 4;
  }
  if (b.upper) b.upper_kind = UpperKind::Finite;
  b.exact = b.upper && *b.upper == b.lower;
  return b;
}

namespace {

IsolatingInterval interval_of(const RealRoot& r, int multiplicity) { return {r.lo(), r.hi(), multiplicity}; }

}  // namespace

CertificationReport certify(const HyperellipticCurve& curve) {
  const LienardSystem sys = derive_system(curve);
  CertificationReport report;
  report.m = sys.m();
  report.n = sys.n();

  const Poly& Q = curve.Q;
  auto roots = real_roots(Q, true);
  report.all_roots_real = count_roots(squarefree_part(Q)).imaginary_pairs == 0;

  const Poly dq = derivative(Q);
  const Poly gap = curve.P * curve.P - Q;
  const Poly common = gcd(dq, sys.f);
  const Poly dg = derivative(sys.g);

  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    if (roots[i].multiplicity != 1 || roots[i + 1].multiplicity != 1) continue;
    RealRoot a = roots[i].root;
    RealRoot b = roots[i + 1].root;
    IntervalVerdict v;
    v.simple_roots = true;
    v.q_positive = report.all_roots_real && sign_between(Q, a, b) == SignVerdict::Positive;
    if (v.q_positive) {
      v.curve_inside = sign_between(gap, a, b) == SignVerdict::Negative;
      auto critical = roots_between(dq, a, b);
      v.critical_points = static_cast<int>(critical.size());
      v.unique_critical = critical.size() == 1;
      v.no_common_root = common.degree() < 1 || count_roots_between(common, a, b) == 0;
      if (v.unique_critical) v.g_prime_positive = critical.front().sign_of(dg) > 0;
      v.certified = v.curve_inside && v.no_common_root && v.unique_critical;
      if (v.curve_inside && v.no_common_root && !v.unique_critical) {
        v.note = "conditions met but uniqueness of the critical point is unverified";
      }
    } else if (!report.all_roots_real) {
      v.note = "Q has non-real roots";
    }
    v.s1 = interval_of(a, 1);
    v.s2 = interval_of(b, 1);
    if (v.certified) ++report.certified_count;
    report.intervals.push_back(std::move(v));
  }
  for (const auto& r : roots) report.q_roots.push_back(interval_of(r.root, r.multiplicity));

  report.bounds = bounds(report.m, report.n);
  report.within_bounds = !report.bounds.upper || report.certified_count <= *report.bounds.upper;
  return report;
}

}  // namespace hyperlc
