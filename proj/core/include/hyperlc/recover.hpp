#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlc/lienard.hpp"

namespace hyperlc {

/// One determined unknown of the coefficient matching.
struct EliminationStep {
  std::string unknown;   // "p3", "q0", ...
  std::string equation;  // family and x-degree it was read from, e.g. "g-relation x^12"
  Rational pivot;        // coefficient divided by to isolate the unknown
  Rational value;
};

/// Result of matching coefficients of
///   f-relation:  2Q f - 2Q P' - P Q' = 0
///   g-relation:  2Q g - Q' (P^2 - Q) = 0
///   degree-cut:  [P^2 - Q]_j = 0 for j > n + 1   (only when n < 2m + 1)
/// for an unknown curve (P, Q) of the degrees forced by the type (m, n).
struct RecoveryOutcome {
  std::optional<HyperellipticCurve> curve;
  bool verified = false;
  // When no curve exists: the relation and x-degree of the first
  // coefficient equation that cannot be satisfied.
  std::string witness_family;
  int witness_degree = -1;
  std::vector<EliminationStep> schedule;
  int branches = 1;
};

struct RecoverOptions {
  // Also attempt type (m, 2m+1), looking for a curve with deg Q = 2m + 2.
  // A curve is returned only if the coefficient matching determines every
  // unknown; otherwise UndeterminedType is thrown.
  bool allow_boundary_type = false;
};

/// Recovers the hyperelliptic invariant curve of a Lienard system, or shows
/// that none exists. Throws UndeterminedType for n = 2m + 1 (unless allowed
/// through the options), and DegenerateLeadingCoefficient when the
/// elimination cannot isolate an unknown.
RecoveryOutcome recover_curve(const LienardSystem& sys, const RecoverOptions& options = {});

}  // namespace hyperlc
