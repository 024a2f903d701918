#include <random>

#include "doctest.h"
#include "hyperlc/errors.hpp"
#include "hyperlc/parse.hpp"
#include "hyperlc/poly.hpp"
#include "random_poly.hpp"

using namespace hyperlc;

namespace {

Poly P(const char* text) { return parse_poly(text); }

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational r = make_rational(6, -4);
  CHECK(to_string(r) == "-3/2");
  CHECK(r.get_den() > 0);
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(to_string(parse_rational("-1.25")) == "-5/4");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("parser spellings agree") {
  CHECK(P("[1, 0, -1]") == P("1 - x^2"));
  CHECK(P("[\"1/2\", \"3\"]") == Poly({Rational(1, 2), Rational(3)}));
  CHECK(P("(x - 1/2)^2 * (x + 3)") == P("x^3 + 2*x^2 - 11/4*x + 3/4"));
  CHECK(P("3x(x-1)") == P("3*x^2 - 3*x"));
  CHECK(P("0").is_zero());
  CHECK(to_coeff_list(P("x^2 - 1/3")) == "[\"-1/3\", \"0\", \"1\"]");
  CHECK_THROWS_AS(P("x^"), ParseError);
  CHECK_THROWS_AS(P("(x+1"), ParseError);
  CHECK_THROWS_AS(P("1/x"), ParseError);
}

TEST_CASE("add") {
  CHECK(add(P("x+1"), P("x-1")) == P("2x"));
  const Poly p = P("3x^3 - x + 7");
  CHECK(add(p, Poly()) == p);
  const Poly zero = add(P("x^2"), P("-x^2"));
  CHECK(zero.is_zero());
  CHECK(zero.degree() == Poly::kZeroDegree);
}

TEST_CASE("mul") {
  CHECK(mul(P("x-1"), P("x+1")) == P("x^2-1"));
  const Poly p = P("2x^4 - 1/3");
  CHECK(mul(p, Poly::constant(1)) == p);
  CHECK(mul(P("(x-1)^2"), P("x-2")) == P("x^3 - 4x^2 + 5x - 2"));
  CHECK(mul(P("x^2+1"), P("x^3-x")).degree() == 5);
}

TEST_CASE("derivative") {
  CHECK(derivative(P("x^3 - x")) == P("3x^2 - 1"));
  CHECK(derivative(P("17/3")).is_zero());
  CHECK(eval(derivative(P("(x-1)^4")), Rational(1)) == 0);
}

TEST_CASE("divrem") {
  auto [q1, r1] = divrem(P("x^2-1"), P("x-1"));
  CHECK(q1 == P("x+1"));
  CHECK(r1.is_zero());
  auto [q2, r2] = divrem(P("x"), P("x^2"));
  CHECK(q2.is_zero());
  CHECK(r2 == P("x"));
  auto [q3, r3] = divrem(P("x^3+1"), P("x+1"));
  CHECK(q3 == P("x^2 - x + 1"));
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(divrem(P("x"), Poly()), DivisionByZeroPolynomial);
}

TEST_CASE("gcd") {
  CHECK(gcd(P("(x-1)^2*(x+2)"), P("(x-1)*(x+3)")) == P("x-1"));
  CHECK(gcd(P("4x^2 - 2"), Poly()) == P("x^2 - 1/2"));
  CHECK(gcd(P("x^2+1"), P("x^2+2")) == P("1"));
}

TEST_CASE("squarefree part and decomposition") {
  CHECK(squarefree_part(P("(x-1)^2*(x-2)")) == P("(x-1)*(x-2)"));
  CHECK(squarefree_part(P("2x^2 - 6x + 4")) == P("x^2 - 3x + 2"));
  CHECK(squarefree_part(P("x^4")) == P("x"));
  const auto dec = squarefree_decomposition(P("3*(x-1)^3*(x+2)*(x^2+1)^2"));
  REQUIRE(dec.size() == 3);
  Poly rebuilt = Poly::constant(3);
  for (const auto& [f, k] : dec) rebuilt *= f.pow(static_cast<unsigned>(k));
  CHECK(rebuilt == P("3*(x-1)^3*(x+2)*(x^2+1)^2"));
}

TEST_CASE("eval") {
  CHECK(eval(P("x^2-1"), Rational(2)) == 3);
  CHECK(eval(P("(x-3/7)*(x+5)"), Rational(3, 7)) == 0);
  CHECK(eval(P("x^3 - 4x^2 + 5x - 2"), Rational(3)) == 4);
}

TEST_CASE("compose_shift") {
  CHECK(compose_shift(P("x^2"), Rational(1)) == P("x^2 + 2x + 1"));
  const Poly p = P("x^5 - 2/3x + 1");
  CHECK(compose_shift(p, Rational(0)) == p);
  const Poly shifted = compose_shift(P("(x-1)*(x-2)"), Rational(1));
  CHECK(shifted == P("x*(x-1)"));
  CHECK(compose_scale(P("x^2 + x"), Rational(2)) == P("4x^2 + 2x"));
}

TEST_CASE("content and primitive part") {
  const Poly p = P("-3/2 x^2 + 3x");
  CHECK(primitive_part(p) == P("x^2 - 2x"));
  CHECK(content(p) * primitive_part(p) == p);
}

TEST_CASE("property: divrem recovers quotient and remainder") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = testing::random_poly(rng, deg(rng));
    const Poly b = testing::random_poly(rng, std::max(1, deg(rng)));
    const Poly r = b.degree() >= 1 ? testing::random_poly(rng, b.degree() - 1) : Poly();
    auto [q, rr] = divrem(a * b + r, b);
    CHECK(q == a);
    CHECK(rr == r);
  }
}

TEST_CASE("property: gcd of multiples") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> deg(1, 4);
  int checked = 0;
  while (checked < 100) {
    const Poly a = testing::random_poly(rng, deg(rng));
    const Poly b = testing::random_poly(rng, deg(rng));
    if (gcd(a, b).degree() != 0) continue;
    const Poly g = testing::random_poly(rng, deg(rng));
    CHECK(gcd(a * g, b * g) == monic(g));
    ++checked;
  }
}

TEST_CASE("property: eval is a ring homomorphism") {
  std::mt19937_64 rng(13);
  const Poly a = testing::random_poly(rng, 6);
  const Poly b = testing::random_poly(rng, 5);
  for (int i = 0; i < 100; ++i) {
    const Rational x = testing::random_rational(rng);
    CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
    CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
  }
}

TEST_CASE("property: square-free part is coprime to its derivative") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const Poly p = testing::random_test_poly(rng, 8);
    const Poly s = squarefree_part(p);
    CHECK(gcd(s, derivative(s)) == P("1"));
    CHECK(divides(s, p));
  }
}
