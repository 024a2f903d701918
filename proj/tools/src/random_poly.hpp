#pragma once

#include <random>

#include "hyperlc/poly.hpp"

namespace hyperlc::testing {

// Numerators in [-10, 10], denominators in [1, 4].
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Poly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = random_rational(rng);
  while (c.back() == 0) c.back() = random_rational(rng);
  return Poly(std::move(c));
}

inline Poly random_monic(std::mt19937_64& rng, int degree) {
  Poly p = random_poly(rng, degree);
  return p * Rational(1 / p.leading());
}

// Half of the draws are products with a squared factor.
inline Poly random_test_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(2, max_degree);
  const int d = deg(rng);
  if (std::bernoulli_distribution(0.5)(rng) || d < 2) return random_poly(rng, d);
  std::uniform_int_distribution<int> sq(1, d / 2);
  const int k = sq(rng);
  const Poly s = random_poly(rng, k);
  const int rest = d - 2 * k;
  return rest > 0 ? s * s * random_poly(rng, rest) : s * s * Poly::constant(random_rational(rng) + 11);
}

}  // namespace hyperlc::testing
