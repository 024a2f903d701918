#include <random>

#include "doctest.h"
#include "hyperlc/algebraic.hpp"
#include "hyperlc/errors.hpp"
#include "hyperlc/parse.hpp"
#include "hyperlc/rootclass.hpp"
#include "random_poly.hpp"

using namespace hyperlc;

namespace {

Poly P(const char* text) { return parse_poly(text); }

std::vector<Rational> R(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("power sums by Newton's identities") {
  CHECK(power_sums(P("x^2-1"), 2) == R({2, 0, 2}));
  CHECK(power_sums(P("(x-1)*(x-2)"), 2) == R({2, 3, 5}));
  CHECK(power_sums(P("x^3"), 3) == R({3, 0, 0, 0}));
  // beyond the degree: 1 + 8 + 27 + 64
  CHECK(power_sums(P("(x-1)*(x-2)*(x-3)*(x-4)"), 6)[3] == 100);
  CHECK(power_sums(P("2*(x-1)*(x+3)"), 5)[5] == 1 - 243);
  CHECK_THROWS_AS(power_sums(P("5"), 2), DegreeZeroInput);
}

TEST_CASE("discrimination matrix layout") {
  const auto dm = discrimination_matrix(P("x^2 + 3x + 7"));
  REQUIRE(dm.entries.size() == 4);
  CHECK(dm.entries[0] == R({1, 3, 7, 0}));
  CHECK(dm.entries[1] == R({0, 2, 3, 0}));
  CHECK(dm.entries[2] == R({0, 1, 3, 7}));
  CHECK(dm.entries[3] == R({0, 0, 2, 3}));
  const auto big = discrimination_matrix(P("x^5 - x + 1"));
  CHECK(big.entries.size() == 10);
  CHECK(big.entries.front().size() == 10);
  CHECK_THROWS_AS(discrimination_matrix(P("4")), DegreeZeroInput);
}

TEST_CASE("discriminant sequence") {
  CHECK(discriminant_sequence(P("x^2+1")) == R({2, -4}));
  CHECK(discriminant_sequence(P("x^2-1")) == R({2, 4}));
  CHECK(discriminant_sequence(P("(x-1)^2")).back() == 0);
  CHECK(discriminant_sequence(P("x^3 - x")) == R({3, 6, 4}));
  CHECK(discriminant_sequence(P("(x-1)^2*(x+2)")) == R({3, 18, 0}));
  CHECK(discriminant_sequence(P("2x^3 - 3x + 1/2")) == R({12, 144, 756}));
  CHECK(discriminant_sequence(P("3x^4 - x^3 + 2x - 5")) == R({36, 27, -9936, -7035939}));
  CHECK(discriminant_sequence(P("x^4+1")) == R({4, 0, 0, 256}));
  // D_1 = n a_0^2 for any leading coefficient
  CHECK(discriminant_sequence(P("-3x^5 + x"))[0] == 45);
}

TEST_CASE("revised sign list") {
  const std::vector<int> plain{1, 1, -1};
  CHECK(revised_sign_list(plain) == plain);
  CHECK(revised_sign_list(std::vector<int>{1, 0, 0, 0, 1}) == std::vector<int>{1, -1, -1, 1, 1});
  CHECK(revised_sign_list(std::vector<int>{1, 0, 0}) == std::vector<int>{1, 0, 0});
  CHECK(revised_sign_list(std::vector<int>{-1, 0, 1}) == std::vector<int>{-1, 1, 1});
  CHECK(revised_sign_list(std::vector<int>{1, 0, 0, 0, 0, 0, -1}) == std::vector<int>{1, -1, -1, 1, 1, -1, -1});
}

TEST_CASE("count_roots") {
  auto c1 = count_roots(P("x^2+1"));
  CHECK(c1.distinct_real == 0);
  CHECK(c1.imaginary_pairs == 1);
  auto c2 = count_roots(P("x^3-x"));
  CHECK(c2.distinct_real == 3);
  CHECK(c2.imaginary_pairs == 0);
  auto c3 = count_roots(P("(x-1)^2*(x+2)"));
  CHECK(c3.distinct_real == 2);
  CHECK(c3.imaginary_pairs == 0);
  auto c4 = count_roots(P("x^4+1"));
  CHECK(c4.distinct_real == 0);
  CHECK(c4.imaginary_pairs == 2);
  auto c5 = count_roots(P("(x^2+1)^2*(x-3)"));
  CHECK(c5.distinct_real == 1);
  CHECK(c5.imaginary_pairs == 1);
}

TEST_CASE("sturm_count") {
  CHECK(sturm_count(P("x^2-2"), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(P("x^2+1"), Rational(-10), Rational(10)) == 0);
  CHECK(sturm_count(P("(x-1)*(x-2)*(x-3)"), Rational(3, 2), Rational(7, 2)) == 2);
  CHECK(sturm_count(P("(x-1)^3*(x-2)"), Rational(0), Rational(3)) == 2);
  CHECK_THROWS_AS(sturm_count(P("x^2-1"), Rational(1), Rational(3)), EndpointIsRoot);
  CHECK(SturmChain(P("x^5 - 5x + 1")).count_all() == 3);
}

TEST_CASE("isolate_real_roots") {
  const auto sqrt2 = isolate_real_roots(P("x^2-2"));
  REQUIRE(sqrt2.size() == 2);
  CHECK(sqrt2[0].hi < sqrt2[1].lo);
  CHECK(sqrt2[0].lo * sqrt2[0].lo > 2);
  CHECK(sqrt2[0].hi * sqrt2[0].hi < 2);
  CHECK(sqrt2[1].lo * sqrt2[1].lo < 2);
  CHECK(sqrt2[1].hi * sqrt2[1].hi > 2);
  CHECK(sqrt2[0].multiplicity == 1);

  const auto exact = isolate_real_roots(P("(x-1)^2*(x-3)"));
  REQUIRE(exact.size() == 2);
  CHECK(exact[0].is_exact());
  CHECK(exact[0].lo == 1);
  CHECK(exact[0].multiplicity == 2);
  CHECK(exact[1].is_exact());
  CHECK(exact[1].lo == 3);
  CHECK(exact[1].multiplicity == 1);

  CHECK(isolate_real_roots(P("x^2+1")).empty());

  const auto mixed = isolate_real_roots(P("(3x-1)*(x^2-3)*(7x+2)^3"));
  REQUIRE(mixed.size() == 4);
  CHECK(mixed[1].is_exact());
  CHECK(mixed[1].lo == Rational(-2, 7));
  CHECK(mixed[1].multiplicity == 3);
  CHECK(mixed[2].lo == Rational(1, 3));

  const auto fine = refine_interval(P("x^2-2"), sqrt2[1], Rational(1, 1000000));
  CHECK(fine.hi - fine.lo <= Rational(1, 1000000));
  CHECK(fine.lo * fine.lo < 2);
  CHECK(fine.hi * fine.hi > 2);
}

TEST_CASE("sign_on_interval") {
  CHECK(sign_on_interval(P("-(x-1)*(x-2)"), Rational(1), Rational(2)) == SignVerdict::Positive);
  CHECK(sign_on_interval(P("x"), Rational(-1), Rational(1)) == SignVerdict::MixedOrZero);
  CHECK(sign_on_interval(P("(x-1)^2*(x-5)"), Rational(1), Rational(5)) == SignVerdict::Negative);
  CHECK(sign_on_interval(P("(x-2)^2"), Rational(1), Rational(3)) == SignVerdict::MixedOrZero);
}

TEST_CASE("real algebraic numbers") {
  // sqrt(2) against sqrt(3) and against itself
  auto roots2 = real_roots(P("x^2-2"));
  auto roots3 = real_roots(P("x^2-3"));
  RealRoot a = roots2[1].root;
  RealRoot b = roots3[1].root;
  CHECK(count_roots_between(P("x^2-5/2"), a, b) == 1);
  CHECK(count_roots_between(P("(x-3/2)*(x-17/10)"), a, b) == 2);
  CHECK(sign_between(P("x^2 - 5/2"), a, b) == SignVerdict::MixedOrZero);
  CHECK(sign_between(P("x - 1"), a, b) == SignVerdict::Positive);
  CHECK(a.sign_of(P("x^4 - 4")) == 0);
  CHECK(a.sign_of(P("x - 1414213/1000000")) == 1);
  CHECK(a.sign_of(P("x - 1414214/1000000")) == -1);
  RealRoot c = real_roots(P("(x^2-2)*(x-5)"))[1].root;
  CHECK(!separate_pair(a, c));
  CHECK(std::abs(a.approx() - 1.4142135623730951) < 1e-12);
  auto between = roots_between(P("(x^2-2)*(x-3/2)*(x-8/5)*(x^2+1)"), a, b);
  CHECK(between.size() == 2);
}

TEST_CASE("property: discriminant sequence matches Hankel determinants of power sums") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> deg(2, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly f = testing::random_monic(rng, deg(rng));
    const auto d = discriminant_sequence(f);
    const auto s = power_sums(f, 2 * f.degree());
    for (int k = 1; k <= f.degree(); ++k) CHECK(d[static_cast<std::size_t>(k - 1)] == hankel_determinant(s, k));
  }
}

TEST_CASE("property: scaling law for non-monic input") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly f = testing::random_poly(rng, 5);
    const auto d = discriminant_sequence(f);
    const auto s = power_sums(f, 10);
    Rational a2 = f.leading() * f.leading();
    Rational scale = a2;
    for (int k = 1; k <= 5; ++k, scale *= a2) CHECK(d[static_cast<std::size_t>(k - 1)] == scale * hankel_determinant(s, k));
  }
}

TEST_CASE("property: discrimination counts agree with Sturm counts") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const Poly f = testing::random_test_poly(rng, 8);
    const Poly sf = squarefree_part(f);
    const auto c = count_roots(f);
    const Rational bound = cauchy_bound(sf);
    CHECK(c.distinct_real == sturm_count(sf, -bound, bound));
    CHECK(c.distinct_real + 2 * c.imaginary_pairs == sf.degree());
    CHECK(static_cast<int>(isolate_real_roots(f).size()) == c.distinct_real);
  }
}

TEST_CASE("property: revision leaves lists without interior zero runs alone") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> s;
    for (int i = 0; i < 6; ++i) s.push_back(pick(rng) ? 1 : -1);
    s.push_back(0);
    CHECK(revised_sign_list(s) == s);
  }
}

TEST_CASE("property: isolating intervals are sorted and disjoint") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly f = testing::random_test_poly(rng, 8);
    const auto iv = isolate_real_roots(f);
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
      CHECK(iv[i].hi <= iv[i + 1].lo);
      if (iv[i].is_exact() && iv[i + 1].is_exact()) CHECK(iv[i].hi < iv[i + 1].lo);
    }
    for (const auto& r : iv) {
      if (r.is_exact()) {
        CHECK(eval(f, r.lo) == 0);
      } else {
        CHECK(sturm_count(f, r.lo, r.hi) == 1);
      }
    }
  }
}
