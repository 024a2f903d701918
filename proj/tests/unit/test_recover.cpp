#include <random>

#include "doctest.h"
#include "hyperlc/errors.hpp"
#include "hyperlc/parse.hpp"
#include "hyperlc/recover.hpp"
#include "random_poly.hpp"

using namespace hyperlc;

namespace {

Poly P(const char* text) { return parse_poly(text); }

void check_round_trip(const HyperellipticCurve& curve, const RecoverOptions& options = {}) {
  const auto sys = derive_system(curve);
  const auto out = recover_curve(sys, options);
  REQUIRE(out.curve.has_value());
  CHECK(out.verified);
  CHECK(out.curve->P == curve.P);
  CHECK(out.curve->Q == curve.Q);
  CHECK(invariance_check(sys, *out.curve));
  CHECK(out.schedule.size() == static_cast<std::size_t>(curve.P.degree() + curve.Q.degree() + 2));
  for (const auto& step : out.schedule) CHECK(step.pivot != 0);
}

}  // namespace

TEST_CASE("round trip above the boundary type") {
  // (2,6): Q of degree n + 1 = 7
  check_round_trip({P("(x-1)*(x-2)*(x+10)"), P("-10*(x-1)*(x-2)*(x+10)^5")});
  // (3,9)
  check_round_trip({P("(x-1)*(x-2)*(x-3)*(x+7)"), P("-7*(x-1)*(x-2)*(x-3)*(x+7)^7")});
}

TEST_CASE("round trip below the boundary type") {
  // (4,8)
  check_round_trip({P("(x-1)*(x-2)*(x-3)*(x-4)*(x+20)"), P("(x-1)*(x-2)*(x-3)*(x-4)*(x+20)^6")});
  // (3,6) with a rational non-integer shift
  check_round_trip({P("(x-1)*(x-2)*(x-3)*(x+13/2)"), P("(x-1)*(x-2)*(x-3)*(x+13/2)^5")});
}

TEST_CASE("the boundary type is excluded unless asked for") {
  const HyperellipticCurve worked{P("(x-1)*(x-2)*(x+10)"), P("-10*(x-1)*(x-2)*(x+10)^4")};
  const auto sys = derive_system(worked);
  CHECK(sys.n() == 2 * sys.m() + 1);
  CHECK_THROWS_AS(recover_curve(sys), UndeterminedType);
  check_round_trip(worked, RecoverOptions{true});
}

TEST_CASE("generic (2,4) systems have no hyperelliptic curve") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    LienardSystem sys{testing::random_poly(rng, 2), testing::random_poly(rng, 4)};
    const auto out = recover_curve(sys);
    CHECK_FALSE(out.curve.has_value());
    CHECK(out.witness_degree >= 0);
    CHECK_FALSE(out.witness_family.empty());
  }
}

TEST_CASE("perturbing a system destroys its curve") {
  const HyperellipticCurve curve{P("(x-1)*(x-2)*(x-3)*(x-4)*(x+20)"), P("(x-1)*(x-2)*(x-3)*(x-4)*(x+20)^6")};
  auto sys = derive_system(curve);
  sys.g += Poly::monomial(Rational(1), 1);
  const auto out = recover_curve(sys);
  CHECK_FALSE(out.curve.has_value());
  CHECK(out.witness_degree >= 0);
}
