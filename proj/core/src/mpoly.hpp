#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperlc/poly.hpp"

namespace hyperlc::detail {

// Sparse polynomial over the rationals in a fixed number of variables.
// A monomial is its exponent vector.
class MPoly {
 public:
  using Monomial = std::vector<std::uint8_t>;

  MPoly() = default;
  explicit MPoly(std::size_t vars) : vars_(vars) {}

  static MPoly constant(std::size_t vars, const Rational& c);
  static MPoly variable(std::size_t vars, std::size_t index);

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }

  // Replaces variable `index` by `value`.
  MPoly substitute(std::size_t index, const Rational& value) const;

  int total_degree() const;
  // Variables that occur in some term.
  std::vector<std::size_t> occurring() const;
  std::optional<Rational> as_constant() const;

  // Divides out the largest power of each listed variable that divides every
  // term.
  MPoly strip(const std::vector<bool>& nonzero) const;

  // For a polynomial in a single variable: that variable and the
  // univariate polynomial.
  std::optional<std::pair<std::size_t, Poly>> as_univariate() const;

 private:
  std::size_t vars_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Polynomial in x whose coefficients are MPoly values.
using MPolyX = std::vector<MPoly>;

MPolyX mulx(const MPolyX& a, const MPolyX& b, std::size_t vars);
MPolyX addx(const MPolyX& a, const MPolyX& b, std::size_t vars);
MPolyX scalex(MPolyX a, const Rational& s);
MPolyX derivx(const MPolyX& a, std::size_t vars);
MPolyX from_poly(const Poly& p, std::size_t vars);

}  // namespace hyperlc::detail
