#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlc/lienard.hpp"

namespace hyperlc {

/// A constructed curve together with its system, its certification and the
/// parameter values the searches settled on.
struct ConstructionResult {
  std::string family;  // "case-iii", "n=2m", "case-i", "case-ii-i", "case-ii-ii", "lift"
  int m = 0;
  int n = 0;
  int advertised = 0;  // number of cycles the family is built to carry
  HyperellipticCurve curve;
  LienardSystem system;
  CertificationReport report;
  // Searched values rendered as text: rationals as "p/q", polynomials as
  // coefficient lists.
  std::map<std::string, std::string> parameters;
};

struct SearchOptions {
  // Largest s tried by the doubling searches.
  Integer s_cap = Integer(1) << 60;
  // Seed for the coefficient jitter and the two-sided node draw.
  std::uint64_t seed = 1;
};

/// Node placement for the case (i) construction.
///
/// With t = 0 the nodes are the double roots y_i of Q1. With t > 0 they are
/// the Hermite nodes z_1 < ... < z_t where P1 gets its double roots; `x0` is
/// the extra simple root of Q1 for odd n. `shift` is the free multiple of
/// prod (x - z_i)^2 added to S when deg S leaves room for it.
struct CaseIPattern {
  std::optional<Rational> x0;
  std::vector<Rational> nodes;
  std::optional<Rational> shift;
};

/// P = prod_{i<=m} (x - i) (x + s), Q = -s prod (x - i) (x + s)^(n-m+1);
/// m >= 2, n >= 2m + 1, floor(m/2) cycles.
ConstructionResult construct_high_n(int m, int n, const SearchOptions& options = {});

/// P = prod_{i<=m} (x - i) (x + s), Q = prod (x - i) (x + s)^(m+2);
/// floor((2m-1)/4) cycles. m = 3 is accepted with a note.
ConstructionResult construct_n_2m(int m, const SearchOptions& options = {});

/// m + 2 <= n <= floor((4m+2)/3): n - m - 1 cycles from Q1 = L S^2 and
/// P1 = Q1 + c. Throws PatternNotAchieved when no node placement tried
/// gives the required root ladder.
ConstructionResult construct_case_i(int m, int n, const std::optional<CaseIPattern>& pattern = std::nullopt,
                                    const SearchOptions& options = {});

struct Perturbation {
  Poly c;
  Poly perturbed;  // Q1 + c
  std::map<std::string, std::string> trace;
};

/// Q1 = (x - s) x^(2h+1) prod_{i<=l} (x - i)^2. Finds c of degree 2h, positive
/// on [0, s], with the roots of Q1 + c ordered
///   0 < x_1 < ... < x_{2h+1} < y_1 < 1 < z_1 < y_2 < ... < z_l < y_{l+1} < s.
Perturbation perturb_lemma7(int h, int l, const Rational& s);

/// Q1 = (x - s1)(x - s2) x^(2h) prod_{i<=l} (x - i)^2. Finds c of degree
/// 2h - 1, positive on [s1, s2], with the roots of Q1 + c ordered
///   s1 < z_{-1} < x_1 < 0 < x_2 < ... < x_{2h} < y_1 < 1 < z_1 < ... < y_{l+1} < s2.
Perturbation perturb_lemma8(int h, int l, const Rational& s1, const Rational& s2);

/// floor((4m+2)/3) + 1 <= n <= 2m - 1, (m, n) != (3, 5): floor((n-1)/4)
/// cycles, directly for n - 1 = 0, 1 mod 4 and by lifting a type
/// (m-1, n-2) construction otherwise.
ConstructionResult construct_case_ii(int m, int n, const SearchOptions& options = {});

/// P (x - s), Q (x - s)^2. Without `s`, doubles s from above every root of
/// Q until the lifted curve certifies at least as many cycles as the input.
ConstructionResult lift(const HyperellipticCurve& curve, const std::optional<Rational>& s = std::nullopt,
                        const SearchOptions& options = {});

/// Picks the family for the cell (m, n). Throws OutOfRange for cells whose
/// lower bound is zero.
ConstructionResult construct(int m, int n, const SearchOptions& options = {});

}  // namespace hyperlc
