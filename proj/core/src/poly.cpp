#include "hyperlc/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hyperlc/errors.hpp"

namespace hyperlc {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({Rational(-root), Rational(1)}); }

Poly Poly::from_roots(std::span<const std::pair<Rational, int>> roots) {
  Poly result = constant(Rational(1));
  for (const auto& [root, mult] : roots) result *= linear_factor(root).pow(static_cast<unsigned>(mult));
  return result;
}

Rational Poly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly add(const Poly& a, const Poly& b) { return a + b; }
Poly mul(const Poly& a, const Poly& b) { return a * b; }

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return Poly(std::move(out));
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroPolynomial("division by the zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& divisor, const Poly& dividend) {
  if (divisor.is_zero()) return dividend.is_zero();
  return divrem(dividend, divisor).remainder.is_zero();
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly r0 = primitive_part(a);
  Poly r1 = primitive_part(b);
  while (!r1.is_zero()) {
    Poly r = divrem(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = primitive_part(r);
  }
  return monic(r0);
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return Poly::constant(Rational(1));
  return monic(divrem(p, gcd(p, derivative(p))).quotient);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm.
  Poly c = gcd(p, derivative(p));
  Poly w = monic(divrem(p, c).quotient);
  int mult = 1;
  while (c.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = divrem(w, y).quotient;
    if (z.degree() > 0) out.emplace_back(monic(z), mult);
    w = y;
    c = divrem(c, y).quotient;
    ++mult;
  }
  if (w.degree() > 0) out.emplace_back(monic(w), mult);
  return out;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly compose_shift(const Poly& p, const Rational& shift) {
  // Horner in the ring: p(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...).
  const Poly xa({shift, Rational(1)});
  Poly acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * xa + Poly::constant(*it);
  return acc;
}

Poly compose_scale(const Poly& p, const Rational& scale) {
  std::vector<Rational> out = p.coeffs();
  Rational f = 1;
  for (auto& c : out) {
    c *= f;
    f *= scale;
  }
  return Poly(std::move(out));
}

Rational content(const Poly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational result = make_rational(num_gcd, den_lcm);
  return p.leading() < 0 ? Rational(-result) : result;
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / content(p));
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs_value(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) out << to_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace hyperlc
