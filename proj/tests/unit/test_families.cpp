#include "doctest.h"
#include "hyperlc/errors.hpp"
#include "hyperlc/families.hpp"
#include "hyperlc/parse.hpp"
#include "hyperlc/recover.hpp"

using namespace hyperlc;

namespace {

Poly P(const char* text) { return parse_poly(text); }

std::vector<std::pair<Rational, Rational>> certified_intervals(const CertificationReport& report) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& v : report.intervals) {
    if (v.certified) out.emplace_back(v.s1.lo, v.s2.hi);
  }
  return out;
}

void check_consistent(const ConstructionResult& r) {
  CHECK(r.report.certified_count == r.advertised);
  CHECK(invariance_check(r.system, r.curve));
  CHECK(r.report.within_bounds);
  CHECK(r.system == derive_system(r.curve));
}

int root_count(const Poly& p, int lo, int hi) { return sturm_count(p, Rational(lo), Rational(hi)); }

}  // namespace

TEST_CASE("case (iii) family") {
  const auto a = construct_high_n(2, 5);
  check_consistent(a);
  CHECK(a.report.certified_count == 1);
  CHECK(certified_intervals(a.report) == std::vector<std::pair<Rational, Rational>>{{1, 2}});
  CHECK(a.parameters.count("s") == 1);

  const auto b = construct_high_n(3, 7);
  check_consistent(b);
  CHECK(certified_intervals(b.report) == std::vector<std::pair<Rational, Rational>>{{2, 3}});

  const auto c = construct_high_n(4, 9);
  check_consistent(c);
  CHECK(certified_intervals(c.report) == std::vector<std::pair<Rational, Rational>>{{1, 2}, {3, 4}});

  CHECK_THROWS_AS(construct_high_n(2, 4), OutOfRange);
}

TEST_CASE("n = 2m family") {
  const int expected[] = {0, 0, 0, 1, 1, 2, 2};
  for (int m = 3; m <= 6; ++m) {
    const auto r = construct_n_2m(m);
    check_consistent(r);
    CHECK(r.n == 2 * m);
    CHECK(r.report.certified_count == expected[m]);
  }
  CHECK(construct_n_2m(3).parameters.count("note") == 1);
  CHECK_THROWS_AS(construct_n_2m(2), OutOfRange);
}

TEST_CASE("case (i) constructions") {
  const auto small = construct_case_i(4, 6);
  check_consistent(small);
  CHECK(small.report.certified_count == 1);
  CHECK(small.parameters.at("t") == "0");

  const auto big = construct_case_i(10, 13);
  check_consistent(big);
  CHECK(big.report.certified_count == 2);
  CHECK(big.parameters.at("t") == "2");
  const auto b = bounds(10, 13);
  CHECK(b.lower <= 2);
  REQUIRE(b.upper.has_value());
  CHECK(*b.upper >= 2);

  CHECK_THROWS_AS(construct_case_i(7, 9), PatternNotAchieved);
  CHECK_THROWS_AS(construct_case_i(4, 8), OutOfRange);
}

TEST_CASE("case (i) with explicit nodes") {
  CaseIPattern good;
  good.x0 = Rational(-2);
  good.nodes = {Rational(-21, 11), Rational(-14, 11)};
  const auto r = construct_case_i(10, 13, good);
  CHECK(r.report.certified_count == 2);
  CHECK(r.parameters.at("z1") == "-21/11");

  CaseIPattern bad;
  bad.x0 = Rational(-2);
  bad.nodes = {Rational(-1, 2), Rational(1, 2)};
  CHECK_THROWS_AS(construct_case_i(10, 13, bad), PatternNotAchieved);
}

TEST_CASE("perturb_lemma7 ladders") {
  SUBCASE("base step") {
    const auto p = perturb_lemma7(0, 1, Rational(3));
    CHECK(p.c.degree() == 0);
    CHECK(p.c.coeff(0) > 0);
    CHECK(root_count(p.perturbed, 0, 1) == 2);
    CHECK(root_count(p.perturbed, 1, 3) == 2);
  }
  SUBCASE("one induction step") {
    const auto p = perturb_lemma7(1, 0, Rational(5));
    CHECK(p.c.degree() == 2);
    CHECK(sign_on_interval(p.c, Rational(0), Rational(5)) == SignVerdict::Positive);
    CHECK(root_count(p.perturbed, 0, 5) == 4);
    CHECK(p.trace.count("d1") == 1);
  }
  SUBCASE("positivity and ladder") {
    for (int h = 0; h <= 2; ++h) {
      for (int l = 0; l <= 2; ++l) {
        const Rational s(l + 2);
        const auto p = perturb_lemma7(h, l, s);
        CHECK(p.c.degree() == 2 * h);
        CHECK(eval(p.c, Rational(0)) > 0);
        CHECK(eval(p.c, s) > 0);
        if (h > 0) CHECK(sign_on_interval(p.c, Rational(0), s) == SignVerdict::Positive);
        CHECK(sturm_count(p.perturbed, Rational(0), s) == p.perturbed.degree());
        if (l > 0) {
          CHECK(root_count(p.perturbed, 0, 1) == 2 * h + 2);
          for (int i = 1; i < l; ++i) CHECK(root_count(p.perturbed, i, i + 1) == 2);
          CHECK(sturm_count(p.perturbed, Rational(l), s) == 2);
        }
      }
    }
  }
  CHECK_THROWS_AS(perturb_lemma7(1, 2, Rational(3)), OutOfRange);
}

TEST_CASE("perturb_lemma8 ladders") {
  const Rational s1(-2);
  for (int l = 0; l <= 1; ++l) {
    const Rational s2(l + 3);
    const auto p = perturb_lemma8(1, l, s1, s2);
    CHECK(p.c.degree() == 1);
    CHECK(eval(p.c, s1) > 0);
    CHECK(eval(p.c, s2) > 0);
    CHECK(sign_on_interval(p.c, s1, s2) == SignVerdict::Positive);
    CHECK(sturm_count(p.perturbed, s1, s2) == p.perturbed.degree());
    CHECK(sturm_count(p.perturbed, s1, Rational(0)) == 2);
    if (l == 1) {
      CHECK(root_count(p.perturbed, 0, 1) == 2);
      CHECK(sturm_count(p.perturbed, Rational(1), s2) == 2);
    }
  }
  const auto p = perturb_lemma8(2, 0, s1, Rational(5));
  CHECK(p.c.degree() == 3);
  CHECK(sign_on_interval(p.c, s1, Rational(5)) == SignVerdict::Positive);
  CHECK(sturm_count(p.perturbed, Rational(0), Rational(5)) == 4);
  CHECK_THROWS_AS(perturb_lemma8(0, 0, s1, Rational(5)), OutOfRange);
}

TEST_CASE("case (ii) dispatch") {
  const auto direct = construct_case_ii(5, 9);
  check_consistent(direct);
  CHECK(direct.family == "case-ii-i");
  CHECK(direct.report.certified_count == 2);

  const auto second = construct_case_ii(6, 10);
  check_consistent(second);
  CHECK(second.family == "case-ii-ii");
  CHECK(second.report.certified_count == 2);

  const auto lifted = construct_case_ii(6, 11);
  CHECK(lifted.family == "case-ii-iii");
  CHECK(lifted.report.certified_count >= 2);
  CHECK(lifted.parameters.at("base.family") == "case-ii-i");

  CHECK_THROWS_AS(construct_case_ii(4, 7), PatternNotAchieved);
  CHECK_THROWS_AS(construct_case_ii(4, 6), OutOfRange);
}

TEST_CASE("lift") {
  const HyperellipticCurve worked{P("(x-1)*(x-2)*(x+10)"), P("-10*(x-1)*(x-2)*(x+10)^4")};
  const auto once = lift(worked);
  CHECK(once.m == 3);
  CHECK(once.n == 7);
  CHECK(once.report.certified_count >= 1);
  CHECK(once.curve.P.degree() == worked.P.degree() + 1);
  CHECK(once.curve.Q.degree() == worked.Q.degree() + 2);
  CHECK(invariance_check(once.system, once.curve));

  const auto twice = lift(once.curve);
  CHECK(twice.m == 4);
  CHECK(twice.n == 9);
  CHECK(twice.report.certified_count >= once.report.certified_count);

  const auto fixed = lift(worked, Rational(100));
  CHECK(fixed.parameters.at("s") == "100");
  CHECK(fixed.curve.P == worked.P * Poly::linear_factor(Rational(100)));
}

TEST_CASE("every cell with m <= 7 reaches its lower bound") {
  for (int m = 2; m <= 7; ++m) {
    for (int n = m + 2; n <= 2 * m + 2; ++n) {
      const auto b = bounds(m, n);
      if (b.lower == 0) {
        CHECK_THROWS(construct(m, n));
        continue;
      }
      CAPTURE(m);
      CAPTURE(n);
      if ((m == 7 && n == 9) || (m == 4 && n == 7)) {
        CHECK_THROWS_AS(construct(m, n), PatternNotAchieved);
        continue;
      }
      const auto r = construct(m, n);
      CHECK(r.m == m);
      CHECK(r.n == n);
      CHECK(r.report.certified_count >= b.lower);
      CHECK(r.report.within_bounds);
      CHECK(invariance_check(r.system, r.curve));
    }
  }
}

TEST_CASE("constructed curves are recovered") {
  for (const auto& r : {construct_high_n(3, 8), construct_n_2m(4), construct_case_i(4, 6), construct_case_ii(5, 9)}) {
    const auto out = recover_curve(r.system);
    REQUIRE(out.curve.has_value());
    CHECK(*out.curve == r.curve);
  }
}
