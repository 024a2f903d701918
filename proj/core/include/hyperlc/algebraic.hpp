#pragma once

#include <vector>

#include "hyperlc/poly.hpp"
#include "hyperlc/rootclass.hpp"

namespace hyperlc {

/// A real algebraic number: a simple root of a square-free rational
/// polynomial, pinned by a rational interval.
///
/// Either lo == hi (the root is that rational), or lo < hi, the defining
/// polynomial changes sign strictly between lo and hi and has exactly one
/// root in that open interval.
class RealRoot {
 public:
  RealRoot(Poly squarefree_poly, Rational lo, Rational hi);
  static RealRoot exact(const Rational& value);

  bool is_exact() const { return lo_ == hi_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const Poly& poly() const { return poly_; }
  Rational width() const { return hi_ - lo_; }

  /// Halves the interval; may discover that the root is the midpoint.
  void bisect();
  void refine_to_width(const Rational& width);

  /// Sign of F at the root.
  int sign_of(const Poly& f);

  /// Shrinks the interval until F has no root in [lo, hi] apart from
  /// possibly the root itself, and F is nonzero at both endpoints.
  void separate_from(const Poly& f);

  double approx() const;

 private:
  Poly poly_;
  Rational lo_;
  Rational hi_;
  int sign_at_lo_ = 0;
};

/// Shrinks both intervals until hi(a) < lo(b) or the two are the same exact
/// point. Requires a != b as real numbers, or returns false when they are
/// detected to be equal.
bool separate_pair(RealRoot& a, RealRoot& b);

/// Number of distinct real roots of f strictly between a and b (a < b).
int count_roots_between(const Poly& f, RealRoot& a, RealRoot& b);

/// Sign of f on the open interval (a, b), a < b.
SignVerdict sign_between(const Poly& f, RealRoot& a, RealRoot& b);

/// Distinct roots of f strictly between a and b as RealRoot values.
std::vector<RealRoot> roots_between(const Poly& f, RealRoot& a, RealRoot& b);

struct RootWithMultiplicity {
  RealRoot root;
  int multiplicity = 1;
};

/// Sorted distinct real roots of f with multiplicities. With
/// `exact_rationals` every rational root comes back as an exact point, as in
/// isolate_real_roots.
std::vector<RootWithMultiplicity> real_roots(const Poly& f, bool exact_rationals = false);

}  // namespace hyperlc
