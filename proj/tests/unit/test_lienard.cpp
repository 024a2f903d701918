#include "doctest.h"
#include "hyperlc/errors.hpp"
#include "hyperlc/lienard.hpp"
#include "hyperlc/parse.hpp"

using namespace hyperlc;

namespace {

Poly P(const char* text) { return parse_poly(text); }

HyperellipticCurve worked_curve() { return {P("(x-1)*(x-2)*(x+10)"), P("-10*(x-1)*(x-2)*(x+10)^4")}; }

}  // namespace

TEST_CASE("derive_system on the (2,5) family member") {
  const auto sys = derive_system(worked_curve());
  CHECK(sys.m() == 2);
  CHECK(sys.n() == 5);
  CHECK(sys.f == P("[-39, 33/2, 6]"));
  CHECK(sys.g == P("[-110220, -7642, 34113, 19125/2, 1897/2, 33]"));
  // f = P' + (R'(x+10) + 4R)/2 with R = (x-1)(x-2)
  const Poly R = P("(x-1)*(x-2)");
  CHECK(sys.f == derivative(worked_curve().P) + (derivative(R) * P("x+10") + R * Rational(4)) * Rational(1, 2));
}

TEST_CASE("derive_system rejects degenerate curves") {
  CHECK_THROWS_AS(derive_system({P("x"), P("x^2")}), NonPolynomialSystem);
  CHECK_THROWS_AS(derive_system({P("x^3 - x"), P("7")}), NonPolynomialSystem);
  CHECK_THROWS_AS(derive_system({P("x"), P("x^2 + 1")}), NonPolynomialSystem);
  CHECK_THROWS_AS(derive_system({P("x"), Poly()}), NonPolynomialSystem);
}

TEST_CASE("cofactor") {
  CHECK(cofactor(worked_curve()) == P("[22, -5, -6]"));
  const Poly R = P("(x-1)*(x-2)");
  CHECK(cofactor(worked_curve()) == -(derivative(R) * P("x+10") + R * Rational(4)));
  CHECK(cofactor({P("x^2 + 1"), P("5")}).is_zero());
  CHECK(cofactor({P("x"), P("x^2")}) == P("-2"));
  CHECK_THROWS_AS(cofactor({P("x + 1"), P("x^2")}), NonPolynomialSystem);
}

TEST_CASE("invariance check") {
  const auto curve = worked_curve();
  const auto sys = derive_system(curve);
  CHECK(invariance_check(sys, curve));
  CHECK(invariance_residual(sys, curve).is_zero());
  auto bumped = sys;
  bumped.g += Poly::constant(1);
  CHECK_FALSE(invariance_check(bumped, curve));
  CHECK_FALSE(invariance_residual(bumped, curve).is_zero());
  CHECK_FALSE(invariance_check(sys, {P("x + 1"), P("x^2")}));
}

TEST_CASE("certify the (2,5) family member") {
  const auto report = certify(worked_curve());
  CHECK(report.m == 2);
  CHECK(report.n == 5);
  CHECK(report.all_roots_real);
  CHECK(report.certified_count == 1);
  int found = 0;
  for (const auto& v : report.intervals) {
    if (!v.certified) continue;
    ++found;
    CHECK(v.s1.is_exact());
    CHECK(v.s1.lo == 1);
    CHECK(v.s2.is_exact());
    CHECK(v.s2.lo == 2);
    CHECK(v.critical_points == 1);
    REQUIRE(v.g_prime_positive.has_value());
    CHECK(*v.g_prime_positive);
  }
  CHECK(found == 1);
  CHECK(report.bounds.lower == 1);
  CHECK(report.bounds.upper_kind == UpperKind::Unbounded);
  CHECK(report.within_bounds);
}

TEST_CASE("certify finds nothing without simple roots or positive gaps") {
  // P^2 = Q leaves g = 0, so there is no system to certify
  CHECK_THROWS_AS(certify({P("x^2"), P("x^4")}), NonPolynomialSystem);
  CHECK(certify({P("x^3"), P("x^4")}).certified_count == 0);
  // roots all real, Q < 0 on (1, 2) and no simple pair after that
  const HyperellipticCurve negative{P("(x-1)*(x-2)*(x-3)"), P("-(x-1)*(x-2)*(x-3)^3")};
  const auto report = certify(negative);
  CHECK(report.certified_count == 0);
  for (const auto& v : report.intervals) CHECK_FALSE(v.q_positive);
}

TEST_CASE("bounds table") {
  auto b38 = bounds(3, 8);
  CHECK(b38.lower == 1);
  CHECK(b38.upper == 1);
  CHECK(b38.exact);
  auto b47 = bounds(4, 7);
  CHECK(b47.lower == 1);
  CHECK(b47.upper == 1);
  CHECK(b47.exact);
  auto b1013 = bounds(10, 13);
  CHECK(b1013.lower == 2);
  CHECK(b1013.upper == 3);
  CHECK_FALSE(b1013.exact);
  auto b25 = bounds(2, 5);
  CHECK(b25.lower == 1);
  CHECK_FALSE(b25.upper.has_value());
  CHECK(b25.upper_kind == UpperKind::Unbounded);
  CHECK_FALSE(b25.exact);
  for (auto [m, n] : {std::pair{2, 4}, {3, 5}, {5, 6}, {1, 9}, {0, 3}, {6, 6}}) {
    auto z = bounds(m, n);
    CHECK(z.lower == 0);
    CHECK(z.upper == 0);
    CHECK(z.exact);
  }
  CHECK_FALSE(bounds(4, 4).note.empty());
  for (int m = 4; m <= 9; ++m) {
    auto b = bounds(m, 2 * m);
    CHECK(b.lower == (2 * m - 1) / 4);
    CHECK(b.exact);
  }
  CHECK(bounds(3, 6).lower == 1);
  CHECK(bounds(3, 6).upper_kind == UpperKind::Unknown);
  CHECK_THROWS_AS(bounds(3, 0), OutOfRange);
}

TEST_CASE("property: lower never exceeds upper") {
  for (int m = 0; m <= 30; ++m) {
    for (int n = 1; n <= 70; ++n) {
      auto b = bounds(m, n);
      if (b.upper) CHECK(b.lower <= *b.upper);
      CHECK(b.exact == (b.upper.has_value() && *b.upper == b.lower));
    }
  }
}

TEST_CASE("property: derived systems have the expected structure") {
  // a few hand-made curves of the P * prod, Q * prod shape
  const HyperellipticCurve curves[] = {
      worked_curve(),
      {P("(x-1)*(x-2)*(x-3)*(x+20)"), P("-20*(x-1)*(x-2)*(x-3)*(x+20)^5")},
      {P("(x-1)*(x-2)*(x-3)*(x+9)"), P("(x-1)*(x-2)*(x-3)*(x+9)^5")},
  };
  for (const auto& c : curves) {
    const auto sys = derive_system(c);
    CHECK(c.P.degree() == sys.m() + 1);
    CHECK((c.P * c.P - c.Q).degree() == sys.n() + 1);
    CHECK(divides(squarefree_part(c.Q), c.P));
    CHECK(invariance_check(sys, c));
    const auto report = certify(c);
    CHECK(report.within_bounds);
    for (const auto& v : report.intervals) {
      if (v.certified) {
        CHECK(v.s1.multiplicity == 1);
        CHECK(v.s2.multiplicity == 1);
        CHECK(v.g_prime_positive == true);
      }
    }
  }
}
