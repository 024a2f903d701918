#include "mpoly.hpp"

#include <algorithm>

namespace hyperlc::detail {

MPoly MPoly::constant(std::size_t vars, const Rational& c) {
  MPoly p(vars);
  if (c != 0) p.terms_.emplace(Monomial(vars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t vars, std::size_t index) {
  MPoly p(vars);
  Monomial mono(vars, 0);
  mono[index] = 1;
  p.terms_.emplace(std::move(mono), Rational(1));
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [mono, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [mono, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(mono, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.vars_, b.vars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MPoly::Monomial mono(ma);
      for (std::size_t i = 0; i < mb.size(); ++i) mono[i] = static_cast<std::uint8_t>(mono[i] + mb[i]);
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(mono), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

MPoly MPoly::substitute(std::size_t index, const Rational& value) const {
  MPoly out(vars_);
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    Rational coeff = c;
    for (int e = 0; e < m[index]; ++e) coeff *= value;
    m[index] = 0;
    if (coeff == 0) continue;
    auto [it, inserted] = out.terms_.emplace(std::move(m), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

int MPoly::total_degree() const {
  int best = terms_.empty() ? -1 : 0;
  for (const auto& [mono, c] : terms_) {
    int d = 0;
    for (auto e : mono) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::vector<std::size_t> MPoly::occurring() const {
  std::vector<bool> seen(vars_, false);
  for (const auto& [mono, c] : terms_) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i]) seen[i] = true;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_; ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::optional<Rational> MPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                        [](std::uint8_t e) { return e == 0; })) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

MPoly MPoly::strip(const std::vector<bool>& nonzero) const {
  if (terms_.empty()) return *this;
  Monomial common(vars_, 255);
  for (const auto& [mono, c] : terms_) {
    for (std::size_t i = 0; i < vars_; ++i) common[i] = std::min(common[i], mono[i]);
  }
  bool any = false;
  for (std::size_t i = 0; i < vars_; ++i) {
    if (!nonzero[i]) common[i] = 0;
    any = any || common[i] != 0;
  }
  if (!any) return *this;
  MPoly out(vars_);
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    for (std::size_t i = 0; i < vars_; ++i) m[i] = static_cast<std::uint8_t>(m[i] - common[i]);
    out.terms_.emplace(std::move(m), c);
  }
  return out;
}

std::optional<std::pair<std::size_t, Poly>> MPoly::as_univariate() const {
  const auto occ = occurring();
  if (occ.size() != 1) return std::nullopt;
  const std::size_t v = occ.front();
  int top = 0;
  for (const auto& [mono, c] : terms_) top = std::max(top, static_cast<int>(mono[v]));
  std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1);
  for (const auto& [mono, c] : terms_) coeffs[mono[v]] += c;
  return std::pair{v, Poly(std::move(coeffs))};
}

MPolyX mulx(const MPolyX& a, const MPolyX& b, std::size_t vars) {
  if (a.empty() || b.empty()) return {};
  MPolyX out(a.size() + b.size() - 1, MPoly(vars));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

MPolyX addx(const MPolyX& a, const MPolyX& b, std::size_t vars) {
  MPolyX out(std::max(a.size(), b.size()), MPoly(vars));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

MPolyX scalex(MPolyX a, const Rational& s) {
  for (auto& c : a) c *= s;
  return a;
}

MPolyX derivx(const MPolyX& a, std::size_t vars) {
  if (a.size() <= 1) return {};
  MPolyX out(a.size() - 1, MPoly(vars));
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
  return out;
}

MPolyX from_poly(const Poly& p, std::size_t vars) {
  MPolyX out;
  for (const auto& c : p.coeffs()) out.push_back(MPoly::constant(vars, c));
  return out;
}

}  // namespace hyperlc::detail
