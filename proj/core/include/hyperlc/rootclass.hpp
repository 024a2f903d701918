#pragma once

#include <span>
#include <vector>

#include "hyperlc/poly.hpp"

namespace hyperlc {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Sylvester-style matrix of f and f' whose leading even-order principal
/// minors form the discriminant sequence.
///
/// With f = a_0 x^n + a_1 x^{n-1} + ... + a_n, row 2k-1 (1-based) holds
/// (a_0, ..., a_n) starting in column k, and row 2k holds the coefficients of
/// f' = n a_0 x^{n-1} + ... + a_{n-1} starting in column k+1. The matrix is
/// 2n x 2n.
struct DiscriminationMatrix {
  int degree = 0;
  RationalMatrix entries;
};

DiscriminationMatrix discrimination_matrix(const Poly& f);

/// Power sums s_0..s_upto of the complex roots of f (with multiplicity),
/// computed from the coefficients by Newton's identities.
std::vector<Rational> power_sums(const Poly& f, int upto);

/// det(s_{i+j})_{i,j<k}
Rational hankel_determinant(std::span<const Rational> sums, int k);

/// D_1..D_n: determinants of the leading 2k x 2k blocks of the
/// discrimination matrix. For f with leading coefficient a_0,
/// D_k = a_0^{2k} * S_k where S_k is the Hankel determinant of power sums.
std::vector<Rational> discriminant_sequence(const Poly& f);

std::vector<int> sign_list(std::span<const Rational> values);

/// Interior zero-runs s_{i+1..i+j-1} bounded by nonzero s_i and s_{i+j} are
/// replaced by eps_{i+r} = (-1)^floor((r+1)/2) * s_i. Trailing zeros are
/// kept as they are.
std::vector<int> revised_sign_list(std::span<const int> signs);

struct RootCount {
  int distinct_real = 0;
  int imaginary_pairs = 0;
};

/// Distinct real roots and pairs of distinct conjugate imaginary roots, read
/// off the revised sign list: v sign changes, l nonvanishing members,
/// pairs = v, real = l - 2v.
RootCount count_roots(const Poly& f);

struct DiscriminationReport {
  std::vector<Rational> discriminants;
  std::vector<int> signs;
  std::vector<int> revised_signs;
  RootCount count;
};

DiscriminationReport discrimination_report(const Poly& f);

/// Exact determinant (fraction-free elimination with row pivoting).
Rational determinant(const RationalMatrix& m);

/// Sturm sequence of f, each member scaled by a positive constant.
class SturmChain {
 public:
  explicit SturmChain(const Poly& f);

  /// Number of distinct real roots of f in (lo, hi). Both endpoints must be
  /// non-roots of f; throws EndpointIsRoot otherwise.
  int count(const Rational& lo, const Rational& hi) const;
  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
  /// Distinct real roots over the whole line.
  int count_all() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

  const std::vector<Poly>& members() const { return chain_; }

 private:
  std::vector<Poly> chain_;
};

/// Number of distinct real roots of f in (lo, hi); see SturmChain::count.
int sturm_count(const Poly& f, const Rational& lo, const Rational& hi);

/// Strict upper bound on the absolute value of every complex root.
Rational cauchy_bound(const Poly& f);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_exact() const { return lo == hi; }
};

/// Disjoint, sorted isolating intervals, one per distinct real root of f.
/// Rational roots are returned as exact points (lo == hi); every other
/// interval is open with a single root inside and non-root endpoints.
std::vector<IsolatingInterval> isolate_real_roots(const Poly& f);

/// Shrinks an interval returned by isolate_real_roots for f until its width
/// is at most `width` (no-op on exact points).
IsolatingInterval refine_interval(const Poly& f, IsolatingInterval interval, const Rational& width);

enum class SignVerdict { Positive, Negative, MixedOrZero };

const char* to_string(SignVerdict verdict);

/// Positive (negative) iff f > 0 (< 0) everywhere on the open interval
/// (lo, hi). Requires lo < hi.
SignVerdict sign_on_interval(const Poly& f, const Rational& lo, const Rational& hi);

}  // namespace hyperlc
