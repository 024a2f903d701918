#include "hyperlc/bivariate.hpp"

namespace hyperlc {

BivariatePoly::BivariatePoly(std::vector<Poly> y_coeffs) : coeffs_(std::move(y_coeffs)) { normalize(); }

void BivariatePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BivariatePoly BivariatePoly::from_x(const Poly& p) { return BivariatePoly({p}); }

BivariatePoly BivariatePoly::y() { return BivariatePoly({Poly(), Poly::constant(Rational(1))}); }

Poly BivariatePoly::y_coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Poly();
  return coeffs_[static_cast<std::size_t>(k)];
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return BivariatePoly();
  std::vector<Poly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::d_dx() const {
  std::vector<Poly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(derivative(c));
  return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::d_dy() const {
  if (coeffs_.size() <= 1) return BivariatePoly();
  std::vector<Poly> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return BivariatePoly(std::move(out));
}

}  // namespace hyperlc
