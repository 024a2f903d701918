#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperlc/rational.hpp"

namespace hyperlc {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending degree order with the highest stored
/// coefficient nonzero; the zero polynomial is the empty sequence and reports
/// degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int power);
  static Poly x() { return monomial(Rational(1), 1); }
  /// x - root
  static Poly linear_factor(const Rational& root);
  /// prod (x - r)^k over the given (root, multiplicity) pairs
  static Poly from_roots(std::span<const std::pair<Rational, int>> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^power; zero outside the stored range.
  Rational coeff(int power) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly pow(unsigned exponent) const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly derivative(const Poly& p);

struct DivRem {
  Poly quotient;
  Poly remainder;
};
/// a = q*b + r with deg r < deg b. Throws DivisionByZeroPolynomial for b = 0.
DivRem divrem(const Poly& a, const Poly& b);
/// True when `divisor` divides `dividend` exactly.
bool divides(const Poly& divisor, const Poly& dividend);

Poly monic(const Poly& p);
/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
Poly gcd(const Poly& a, const Poly& b);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

/// Square-free factorisation p = lc * prod_i factors[i].first^factors[i].second
/// with monic, pairwise coprime, square-free factors.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

Rational eval(const Poly& p, const Rational& x);
/// Returns p(x + shift).
Poly compose_shift(const Poly& p, const Rational& shift);
/// Returns p(scale * x).
Poly compose_scale(const Poly& p, const Rational& scale);

/// Positive rational content: the polynomial divided by it has coprime
/// integer coefficients with positive leading coefficient.
Rational content(const Poly& p);
Poly primitive_part(const Poly& p);

/// Human readable form, e.g. "3*x^2 - 1/2*x + 1".
std::string to_string(const Poly& p);

}  // namespace hyperlc
