#pragma once

#include <vector>

#include "hyperlc/poly.hpp"

namespace hyperlc {

// Polynomial in (x, y) stored as coefficients in y: sum_k coeffs[k](x) * y^k.
// Only the small quadratic-in-y shapes of the invariant-curve identity are
// built from it.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Poly> y_coeffs);

  static BivariatePoly from_x(const Poly& p);
  static BivariatePoly y();

  int y_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Poly>& y_coeffs() const { return coeffs_; }
  Poly y_coeff(int k) const;

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

  BivariatePoly d_dx() const;
  BivariatePoly d_dy() const;

 private:
  void normalize();
  std::vector<Poly> coeffs_;
};

}  // namespace hyperlc
