#include "hyperlc/rootclass.hpp"

#include <algorithm>
#include <utility>

#include "hyperlc/errors.hpp"

namespace hyperlc {

DiscriminationMatrix discrimination_matrix(const Poly& f) {
  const int n = f.degree();
  if (n < 1) throw DegreeZeroInput("discrimination matrix needs a polynomial of degree >= 1");
  // Descending coefficients of f and f'.
  std::vector<Rational> fd(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> dd(static_cast<std::size_t>(n));
  for (int j = 0; j <= n; ++j) fd[static_cast<std::size_t>(j)] = f.coeff(n - j);
  for (int j = 0; j < n; ++j) dd[static_cast<std::size_t>(j)] = fd[static_cast<std::size_t>(j)] * (n - j);

  const std::size_t size = 2 * static_cast<std::size_t>(n);
  RationalMatrix m(size, std::vector<Rational>(size));
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    for (std::size_t j = 0; j < fd.size() && k + j < size; ++j) m[2 * k][k + j] = fd[j];
    for (std::size_t j = 0; j < dd.size() && k + 1 + j < size; ++j) m[2 * k + 1][k + 1 + j] = dd[j];
  }
  return {n, std::move(m)};
}

std::vector<Rational> power_sums(const Poly& f, int upto) {
  const int n = f.degree();
  if (n < 1) throw DegreeZeroInput("power sums need a polynomial of degree >= 1");
  // f / a_0 = x^n + c_1 x^{n-1} + ... + c_n
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  const Rational lead = f.leading();
  for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(n - i) / lead;

  std::vector<Rational> s(static_cast<std::size_t>(std::max(upto, 0)) + 1);
  s[0] = n;
  for (int k = 1; k <= upto; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= std::min(k - 1, n); ++i) acc += c[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    if (k <= n) acc += c[static_cast<std::size_t>(k)] * k;
    s[static_cast<std::size_t>(k)] = -acc;
  }
  return s;
}

Rational hankel_determinant(std::span<const Rational> sums, int k) {
  if (k <= 0) return Rational(1);
  RationalMatrix h(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sums[static_cast<std::size_t>(i + j)];
  }
  return determinant(h);
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (const auto& v : m[i]) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), v.get_den_mpz_t());
    scale *= row_lcm;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (row_lcm / m[i][j].get_den());
  }
  int swaps = 0;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Integer det = a[n - 1][n - 1];
  if (swaps % 2) det = -det;
  return make_rational(det, scale);
}

std::vector<Rational> discriminant_sequence(const Poly& f) {
  const DiscriminationMatrix dm = discrimination_matrix(f);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(dm.degree));
  for (int k = 1; k <= dm.degree; ++k) {
    const std::size_t size = 2 * static_cast<std::size_t>(k);
    RationalMatrix block(size, std::vector<Rational>(size));
    for (std::size_t i = 0; i < size; ++i) {
      std::copy_n(dm.entries[i].begin(), size, block[i].begin());
    }
    out.push_back(determinant(block));
  }
  return out;
}

std::vector<int> sign_list(std::span<const Rational> values) {
  std::vector<int> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(sign(v));
  return out;
}

std::vector<int> revised_sign_list(std::span<const int> signs) {
  std::vector<int> out(signs.begin(), signs.end());
  const std::size_t n = signs.size();
  std::size_t i = 0;
  while (i < n) {
    if (signs[i] == 0) {
      ++i;
      continue;
    }
    std::size_t next = i + 1;
    while (next < n && signs[next] == 0) ++next;
    if (next < n && next > i + 1) {
      for (std::size_t r = 1; i + r < next; ++r) {
        const int flip = ((r + 1) / 2) % 2 == 0 ? 1 : -1;
        out[i + r] = flip * signs[i];
      }
    }
    i = next;
  }
  return out;
}

namespace {

RootCount count_from_revised(std::span<const int> revised) {
  int nonzero = 0;
  int changes = 0;
  int last = 0;
  for (int s : revised) {
    if (s == 0) continue;
    ++nonzero;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return {nonzero - 2 * changes, changes};
}

}  // namespace

DiscriminationReport discrimination_report(const Poly& f) {
  DiscriminationReport r;
  r.discriminants = discriminant_sequence(f);
  r.signs = sign_list(r.discriminants);
  r.revised_signs = revised_sign_list(r.signs);
  r.count = count_from_revised(r.revised_signs);
  return r;
}

RootCount count_roots(const Poly& f) { return discrimination_report(f).count; }

SturmChain::SturmChain(const Poly& f) {
  if (f.is_zero()) return;
  chain_.push_back(primitive_part(f) * Rational(sign(f.leading())));
  Poly next = derivative(f);
  if (next.is_zero()) return;
  chain_.push_back(primitive_part(next) * Rational(sign(next.leading())));
  while (true) {
    Poly r = -divrem(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    // primitive_part forces a positive leading coefficient; restore the sign.
    chain_.push_back(primitive_part(r) * Rational(sign(r.leading())));
  }
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(sign(eval(p, x)));
  return variations(s);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sign(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1));
  return variations(s);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sign(p.leading()));
  return variations(s);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (chain_.empty()) return 0;
  if (eval(chain_.front(), lo) == 0 || eval(chain_.front(), hi) == 0) {
    throw EndpointIsRoot("Sturm count endpoint is a root; perturb the endpoint");
  }
  if (!(lo < hi)) return 0;
  return variations_at(lo) - variations_at(hi);
}

int sturm_count(const Poly& f, const Rational& lo, const Rational& hi) { return SturmChain(f).count(lo, hi); }

Rational cauchy_bound(const Poly& f) {
  if (f.degree() < 1) return Rational(1);
  Rational best = 0;
  const Rational lead = abs_value(f.leading());
  for (int i = 0; i < f.degree(); ++i) best = std::max(best, Rational(abs_value(f.coeff(i)) / lead));
  return best + 1;
}

const char* to_string(SignVerdict verdict) {
  switch (verdict) {
    case SignVerdict::Positive: return "positive";
    case SignVerdict::Negative: return "negative";
    case SignVerdict::MixedOrZero: return "mixed-or-zero";
  }
  return "mixed-or-zero";
}

SignVerdict sign_on_interval(const Poly& f, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw OutOfRange("sign_on_interval requires lo < hi");
  if (f.is_zero()) return SignVerdict::MixedOrZero;
  // Divide out roots sitting exactly on the endpoints; they do not touch the
  // open interval.
  Poly g = f;
  for (const Rational& end : {lo, hi}) {
    const Poly lin = Poly::linear_factor(end);
    while (g.degree() >= 1 && eval(g, end) == 0) g = divrem(g, lin).quotient;
  }
  if (SturmChain(g).count(lo, hi) != 0) return SignVerdict::MixedOrZero;
  const int s = sign(eval(f, (lo + hi) / 2));
  if (s > 0) return SignVerdict::Positive;
  if (s < 0) return SignVerdict::Negative;
  return SignVerdict::MixedOrZero;
}

}  // namespace hyperlc
