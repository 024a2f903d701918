#include "hyperlc/families.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <utility>

#include "hyperlc/algebraic.hpp"
#include "hyperlc/errors.hpp"

namespace hyperlc {

namespace {

Poly lin(const Rational& r) { return Poly::linear_factor(r); }

// prod_{i=from}^{to} (x - i)
Poly integer_run(int from, int to) {
  Poly out = Poly::constant(Rational(1));
  for (int i = from; i <= to; ++i) out *= lin(Rational(i));
  return out;
}

Rational pow2(int e) {
  Rational r(1);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

std::string str(const Rational& r) { return to_string(r); }
std::string str(const Poly& p) { return to_string(p); }
std::string str(int v) { return std::to_string(v); }

// Number of distinct roots of p in (lo, hi), or -1 when an endpoint is a root.
int count_in(const Poly& p, const Rational& lo, const Rational& hi) {
  try {
    return sturm_count(p, lo, hi);
  } catch (const EndpointIsRoot&) {
    return -1;
  }
}

bool positive_on(const Poly& c, const Rational& lo, const Rational& hi) {
  if (eval(c, lo) <= 0 || eval(c, hi) <= 0) return false;
  if (c.degree() <= 0) return true;
  return sign_on_interval(c, lo, hi) == SignVerdict::Positive;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer a;
  Integer b;
  mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
  return make_rational(a, b);
}

Rational rpow(const Rational& base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool before_root(RealRoot& a, RealRoot& b) { return a.hi() <= b.lo(); }

// Merges the real roots of several polynomials in increasing order and
// spells the labels. Fails when a polynomial has a repeated or non-real
// root, or when two of them share a root.
std::optional<std::string> ladder_of(const std::vector<std::pair<char, Poly>>& parts) {
  std::vector<std::pair<RealRoot, char>> all;
  for (const auto& [label, poly] : parts) {
    if (poly.degree() <= 0) continue;
    auto roots = real_roots(poly);
    if (static_cast<int>(roots.size()) != poly.degree()) return std::nullopt;
    for (auto& r : roots) {
      if (r.multiplicity != 1) return std::nullopt;
      all.emplace_back(std::move(r.root), label);
    }
  }
  for (std::size_t i = 1; i < all.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      if (!separate_pair(all[j - 1].first, all[j].first)) return std::nullopt;
      if (before_root(all[j - 1].first, all[j].first)) break;
      std::swap(all[j - 1], all[j]);
    }
  }
  std::string out;
  for (const auto& entry : all) out += entry.second;
  return out;
}

std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += s;
  return out;
}

ConstructionResult finish(std::string family, const HyperellipticCurve& curve, int advertised) {
  ConstructionResult r;
  r.family = std::move(family);
  r.curve = curve;
  r.system = derive_system(curve);
  r.m = r.system.m();
  r.n = r.system.n();
  r.advertised = advertised;
  r.report = certify(curve);
  return r;
}

bool intervals_are(const CertificationReport& report, const std::vector<std::pair<int, int>>& expected) {
  std::vector<std::pair<int, int>> got;
  for (const auto& v : report.intervals) {
    if (!v.certified) continue;
    if (!v.s1.is_exact() || !v.s2.is_exact()) return false;
    if (v.s1.lo.get_den() != 1 || v.s2.lo.get_den() != 1) return false;
    got.emplace_back(static_cast<int>(v.s1.lo.get_num().get_si()), static_cast<int>(v.s2.lo.get_num().get_si()));
  }
  return got == expected;
}

// P = prod (x - i) (x + s) with Q built from the same factors, for s doubled
// from m + 1.
ConstructionResult search_shift(const std::string& family, int m, int n, int advertised,
                                const std::vector<std::pair<int, int>>& intervals, const SearchOptions& options,
                                const std::function<HyperellipticCurve(const Rational&)>& build) {
  for (Rational s(m + 1); s <= options.s_cap; s *= 2) {
    auto r = finish(family, build(s), advertised);
    if (r.m == m && r.n == n && r.report.certified_count == advertised && intervals_are(r.report, intervals)) {
      r.parameters["s"] = str(s);
      return r;
    }
  }
  throw SearchExhausted(family + ": no s up to the cap certifies " + std::to_string(advertised) + " cycles");
}

// ---------------------------------------------------------------- case (i)

struct CaseIShape {
  int m;
  int n;
  bool odd;
  int t;
  int k;  // number of y_i
};

// Gaussian elimination on a square rational system. Returns nullopt when
// singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// Polynomial of degree < 2 * nodes.size() with given values and slopes.
std::optional<Poly> hermite(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                            const std::vector<Rational>& slopes) {
  const std::size_t n = 2 * nodes.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    std::vector<Rational> row(n);
    std::vector<Rational> drow(n);
    Rational power(1);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = power;
      if (j + 1 < n) drow[j + 1] = power * static_cast<long>(j + 1);
      power *= nodes[i];
    }
    a.push_back(std::move(row));
    b.push_back(values[i]);
    a.push_back(std::move(drow));
    b.push_back(slopes[i]);
  }
  auto coeffs = solve_linear(std::move(a), std::move(b));
  if (!coeffs) return std::nullopt;
  return Poly(std::move(*coeffs));
}

std::string case_i_ladder(const CaseIShape& sh) {
  if (sh.odd) return "L" + repeat("zs", sh.t) + "aa" + repeat("saa", sh.k) + "L";
  return "a" + repeat("sz", sh.t) + repeat("saa", sh.k) + "L";
}

// Tries one choice of S and c. The ladder decides; certify has the last word.
std::optional<ConstructionResult> case_i_assemble(const CaseIShape& sh, const Poly& L, const Poly& S, const Poly& Z,
                                                  const Rational& c) {
  const Poly P1 = L * S * S + Poly::constant(c);
  const Poly Z2 = Z * Z;
  const auto dr = divrem(P1, Z2);
  if (!dr.remainder.is_zero()) return std::nullopt;
  const Poly& A = dr.quotient;
  std::vector<std::pair<char, Poly>> parts{{'L', L}, {'s', S}, {'a', A}};
  if (Z.degree() > 0) parts.emplace_back('z', Z);
  const auto ladder = ladder_of(parts);
  if (!ladder || *ladder != case_i_ladder(sh)) return std::nullopt;

  const HyperellipticCurve curve{L * S * Z * A, L.pow(3) * S.pow(4) * A};
  ConstructionResult r;
  try {
    r = finish("case-i", curve, sh.n - sh.m - 1);
  } catch (const NonPolynomialSystem&) {
    return std::nullopt;
  }
  if (r.m != sh.m || r.n != sh.n || r.report.certified_count != r.advertised) return std::nullopt;
  r.parameters["c"] = str(c);
  r.parameters["t"] = str(sh.t);
  r.parameters["S"] = str(S);
  r.parameters["ladder"] = *ladder;
  return r;
}

// t = 0: S = prod (x - y_i), c halved from 1.
std::optional<ConstructionResult> case_i_small_c(const CaseIShape& sh, const Poly& L, const std::vector<Rational>& ys) {
  Poly S = Poly::constant(Rational(1));
  for (const auto& y : ys) S *= lin(y);
  for (int j = 0; j <= 200; ++j) {
    const Rational c = pow2(-j);
    const Poly P1 = L * S * S + Poly::constant(c);
    std::vector<std::pair<char, Poly>> parts{{'L', L}, {'s', S}, {'a', P1}};
    const auto ladder = ladder_of(parts);
    if (!ladder || *ladder != case_i_ladder(sh)) continue;
    auto r = case_i_assemble(sh, L, S, Poly::constant(Rational(1)), c);
    if (r) {
      for (std::size_t i = 0; i < ys.size(); ++i) r->parameters["y" + std::to_string(i + 1)] = str(ys[i]);
      return r;
    }
  }
  return std::nullopt;
}

// t > 0: S is fixed at the nodes z_i by S(z)^2 = -c / L(z) and
// (L S^2)'(z) = 0, with c = -L(z_1).
std::optional<ConstructionResult> case_i_hermite(const CaseIShape& sh, const Poly& L, const std::vector<Rational>& zs,
                                                 const std::optional<Rational>& shift) {
  if (sh.k < sh.t - 1) return std::nullopt;
  const Rational c = -eval(L, zs.front());
  if (c <= 0) return std::nullopt;
  const Poly dL = derivative(L);
  std::vector<Rational> values;
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const Rational Lz = eval(L, zs[i]);
    if (Lz >= 0) return std::nullopt;
    auto root = rational_sqrt(-c / Lz);
    if (!root) return std::nullopt;
    const Rational v = i % 2 == 0 ? *root : -*root;
    values.push_back(v);
    slopes.push_back(c * eval(dL, zs[i]) / (2 * Lz * Lz * v));
  }
  auto H = hermite(zs, values, slopes);
  if (!H) return std::nullopt;
  Poly Z = Poly::constant(Rational(1));
  for (const auto& z : zs) Z *= lin(z);

  auto attempt = [&](const Rational& v) -> std::optional<ConstructionResult> {
    Poly S = *H;
    if (sh.k >= sh.t) {
      const int free = sh.k - sh.t;
      Poly W = Poly::constant(v);
      for (int j = 1; j <= free; ++j) W *= lin(zs.back() + (1 - zs.back()) * Rational(j, free + 1));
      S += W * Z * Z;
    }
    if (S.degree() != sh.t + sh.k) return std::nullopt;
    auto r = case_i_assemble(sh, L, S, Z, c);
    if (r) {
      for (std::size_t i = 0; i < zs.size(); ++i) r->parameters["z" + std::to_string(i + 1)] = str(zs[i]);
      if (sh.k >= sh.t) r->parameters["shift"] = str(v);
    }
    return r;
  };
  if (sh.k < sh.t || shift) return attempt(shift.value_or(Rational(0)));
  for (int j = 0; j <= 40; ++j) {
    for (int sgn : {1, -1}) {
      if (auto r = attempt(pow2(-j) * sgn)) return r;
    }
  }
  return std::nullopt;
}

// t = 1: S = (x - x_1) prod (x - y_j) with the y_j given and x_1 solved
// from (L S^2)'(z_1) = 0, i.e. L'/L + 2 S'/S = 0 at z_1; c = -L(z_1) S(z_1)^2.
std::optional<ConstructionResult> case_i_single_node(const CaseIShape& sh, const Poly& L, const Rational& z,
                                                     const std::vector<Rational>& ys) {
  const Rational Lz = eval(L, z);
  if (Lz >= 0) return std::nullopt;
  Rational rhs = -eval(derivative(L), z) / (2 * Lz);
  for (const auto& y : ys) {
    if (y == z) return std::nullopt;
    rhs -= 1 / (z - y);
  }
  if (rhs == 0) return std::nullopt;
  const Rational x1 = z - 1 / rhs;
  Poly S = lin(x1);
  for (const auto& y : ys) S *= lin(y);
  const Rational Sz = eval(S, z);
  auto r = case_i_assemble(sh, L, S, lin(z), -Lz * Sz * Sz);
  if (r) {
    r->parameters["z1"] = str(z);
    for (std::size_t i = 0; i < ys.size(); ++i) r->parameters["y" + std::to_string(i + 1)] = str(ys[i]);
  }
  return r;
}

std::vector<Rational> grid_between(const Rational& lo, const Rational& hi, int max_den) {
  std::vector<Rational> out;
  for (int b = 1; b <= max_den; ++b) {
    const Integer first = floor_of(lo * b) + 1;
    for (Integer a = first; Rational(a, b) < hi; ++a) {
      Rational q(a, b);
      q.canonicalize();
      if (q.get_den() == b) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All increasing t-tuples from the grid, in lexicographic order, until
// `visit` returns true or the budget runs out.
bool for_each_tuple(const std::vector<Rational>& grid, int t, long& budget,
                    const std::function<bool(const std::vector<Rational>&)>& visit) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(t));
  std::vector<Rational> tuple(static_cast<std::size_t>(t));
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) -> bool {
    if (depth == idx.size()) {
      if (budget-- <= 0) return true;
      return visit(tuple);
    }
    for (std::size_t i = from; i < grid.size(); ++i) {
      tuple[depth] = grid[i];
      if (rec(depth + 1, i + 1)) return true;
      if (budget <= 0) return true;
    }
    return false;
  };
  return rec(0, 0);
}

// ---------------------------------------------------------------- perturbations

Poly lemma7_q1(int h, int l, const Rational& s) {
  return lin(s) * Poly::monomial(Rational(1), 2 * h + 1) * integer_run(1, l).pow(2);
}

Poly lemma8_q1(int h, int l, const Rational& s1, const Rational& s2) {
  return lin(s1) * lin(s2) * Poly::monomial(Rational(1), 2 * h) * integer_run(1, l).pow(2);
}

// Per-gap root counts of Q1 + c against the one-sided ladder.
bool lemma7_ladder(const Poly& p, int h, int l, const Rational& s) {
  if (count_in(p, Rational(0), s) != p.degree()) return false;
  if (l == 0) return true;
  if (count_in(p, Rational(0), Rational(1)) != 2 * h + 2) return false;
  for (int i = 1; i < l; ++i) {
    if (count_in(p, Rational(i), Rational(i + 1)) != 2) return false;
  }
  return count_in(p, Rational(l), s) == 2;
}

bool lemma8_ladder(const Poly& p, int h, int l, const Rational& s1, const Rational& s2) {
  if (count_in(p, s1, s2) != p.degree()) return false;
  if (count_in(p, s1, Rational(0)) != 2) return false;
  if (l == 0) return count_in(p, Rational(0), s2) == 2 * h;
  if (count_in(p, Rational(0), Rational(1)) != 2 * h) return false;
  for (int i = 1; i < l; ++i) {
    if (count_in(p, Rational(i), Rational(i + 1)) != 2) return false;
  }
  return count_in(p, Rational(l), s2) == 2;
}

bool lemma7_ok(const Poly& c, int h, int l, const Rational& s) {
  return positive_on(c, Rational(0), s) && lemma7_ladder(lemma7_q1(h, l, s) + c, h, l, s);
}

bool lemma8_ok(const Poly& c, int h, int l, const Rational& s1, const Rational& s2) {
  return positive_on(c, s1, s2) && lemma8_ladder(lemma8_q1(h, l, s1, s2) + c, h, l, s1, s2);
}

// Nudges one coefficient of c by a small relative amount, keeping the
// degree.
Poly jitter(const Poly& c, std::mt19937_64& rng) {
  std::vector<Rational> coeffs = c.coeffs();
  std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
  std::uniform_int_distribution<int> amount(1, 16);
  std::bernoulli_distribution flip(0.5);
  const std::size_t j = pick(rng);
  Rational scale = coeffs[j] != 0 ? coeffs[j] : c.leading();
  Rational delta = scale * Rational(amount(rng), 1024);
  coeffs[j] += flip(rng) ? delta : -delta;
  return Poly(std::move(coeffs));
}

// Assembles a case (ii) curve from a perturbation and retries with
// jittered c until certify accepts it.
std::optional<ConstructionResult> case_ii_certify(
    const std::string& family, int m, int n, int t, Poly c, std::mt19937_64& rng,
    const std::function<bool(const Poly&)>& admissible, const std::function<HyperellipticCurve(const Poly&)>& build,
    int& jitters) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    if (attempt > 0) {
      Poly next = jitter(c, rng);
      if (!admissible(next)) continue;
      c = std::move(next);
      ++jitters;
    }
    ConstructionResult r;
    try {
      r = finish(family, build(c), t);
    } catch (const NonPolynomialSystem&) {
      continue;
    }
    if (r.m == m && r.n == n && r.report.certified_count == t) {
      r.parameters["c"] = str(c);
      return r;
    }
  }
  return std::nullopt;
}

bool in_case_i(int m, int n) { return m + 2 <= n && n <= (4 * m + 2) / 3; }
bool in_case_ii(int m, int n) {
  return (4 * m + 2) / 3 + 1 <= n && n <= 2 * m && !(m == 3 && n == 5) && !(m == 2 && n == 4);
}

}  // namespace

ConstructionResult construct_high_n(int m, int n, const SearchOptions& options) {
  if (m < 2 || n < 2 * m + 1) throw OutOfRange("construct_high_n needs m >= 2 and n >= 2m + 1");
  std::vector<std::pair<int, int>> intervals;
  for (int i = 1; i <= m / 2; ++i) {
    if (m % 2 == 0) {
      intervals.emplace_back(2 * i - 1, 2 * i);
    } else {
      intervals.emplace_back(2 * i, 2 * i + 1);
    }
  }
  const Poly base = integer_run(1, m);
  return search_shift("case-iii", m, n, m / 2, intervals, options, [&](const Rational& s) {
    return HyperellipticCurve{base * lin(-s), base * lin(-s).pow(static_cast<unsigned>(n - m + 1)) * (-s)};
  });
}

ConstructionResult construct_n_2m(int m, const SearchOptions& options) {
  if (m < 3) throw OutOfRange("construct_n_2m needs m >= 3");
  std::vector<std::pair<int, int>> intervals;
  if (m % 2 == 1) {
    for (int i = 1; i <= (m - 1) / 2; ++i) intervals.emplace_back(2 * i - 1, 2 * i);
  } else {
    for (int i = 1; i <= (m - 2) / 2; ++i) intervals.emplace_back(2 * i, 2 * i + 1);
  }
  const Poly base = integer_run(1, m);
  auto r = search_shift("n=2m", m, 2 * m, (2 * m - 1) / 4, intervals, options, [&](const Rational& s) {
    return HyperellipticCurve{base * lin(-s), base * lin(-s).pow(static_cast<unsigned>(m + 2))};
  });
  if (m == 3) r.parameters["note"] = "m = 3 lies below the range where the upper bound is known";
  return r;
}

ConstructionResult construct_case_i(int m, int n, const std::optional<CaseIPattern>& pattern,
                                    const SearchOptions& options) {
  (void)options;
  if (!in_case_i(m, n)) throw OutOfRange("construct_case_i needs m + 2 <= n <= floor((4m+2)/3)");
  CaseIShape sh{m, n, n % 2 == 1, 0, 0};
  sh.t = sh.odd ? (4 * m - 3 * n + 3) / 2 : (4 * m - 3 * n + 2) / 2;
  sh.k = sh.odd ? n - m - 2 : n - m - 1;

  auto make_L = [&](const Rational& x0) { return sh.odd ? lin(x0) * lin(Rational(1)) : lin(Rational(1)); };
  const std::string where = "(" + std::to_string(m) + "," + std::to_string(n) + ")";

  if (pattern) {
    const Rational x0 = pattern->x0.value_or(Rational(-2));
    const Poly L = make_L(x0);
    std::optional<ConstructionResult> r;
    if (sh.t == 0) {
      if (static_cast<int>(pattern->nodes.size()) != sh.k) throw OutOfRange("pattern needs one node per y_i");
      r = case_i_small_c(sh, L, pattern->nodes);
    } else {
      if (static_cast<int>(pattern->nodes.size()) != sh.t) throw OutOfRange("pattern needs one node per z_i");
      r = case_i_hermite(sh, L, pattern->nodes, pattern->shift);
    }
    if (!r) throw PatternNotAchieved("case (i) " + where + ": the given nodes do not produce the root ladder");
    if (sh.odd) r->parameters["x0"] = str(x0);
    return *r;
  }

  if (sh.t == 0) {
    for (const Rational& lowest : {Rational(0), Rational(-1), Rational(1, 2)}) {
      std::vector<Rational> ys;
      for (int i = 1; i <= sh.k; ++i) ys.push_back(lowest + (1 - lowest) * Rational(i, sh.k + 1));
      if (auto r = case_i_small_c(sh, make_L(Rational(-2)), ys)) {
        if (sh.odd) r->parameters["x0"] = "-2";
        return *r;
      }
    }
    throw PatternNotAchieved("case (i) " + where + ": no c gives the root ladder for the default nodes");
  }
  if (sh.t == 1 && sh.k >= 1) {
    const Rational x0(-2);
    const Poly L = make_L(x0);
    for (const auto& z : grid_between(x0, Rational(1), 12)) {
      // y_j spread over (z, 1) with a few different spacings
      for (int shape = 0; shape < 3; ++shape) {
        std::vector<Rational> ys;
        for (int j = 1; j <= sh.k; ++j) {
          Rational u(j, sh.k + 1);
          if (shape == 1) u = u * u;
          if (shape == 2) u = 1 - (1 - u) * (1 - u);
          ys.push_back(z + (1 - z) * u);
        }
        if (auto r = case_i_single_node(sh, L, z, ys)) {
          if (sh.odd) r->parameters["x0"] = str(x0);
          return *r;
        }
      }
    }
  }
  if (sh.k < sh.t - 1) {
    throw PatternNotAchieved("case (i) " + where + ": with t = " + std::to_string(sh.t) + " and " +
                             std::to_string(sh.k) + " y-nodes the rational Hermite conditions outnumber the unknowns");
  }
  const std::vector<Rational> x0s = sh.odd ? std::vector<Rational>{Rational(-2), Rational(-1), Rational(-3)}
                                           : std::vector<Rational>{Rational(-2)};
  for (const auto& x0 : x0s) {
    const Poly L = make_L(x0);
    const auto grid = grid_between(x0, Rational(1), 12);
    long budget = 400000;
    std::optional<ConstructionResult> found;
    for_each_tuple(grid, sh.t, budget, [&](const std::vector<Rational>& zs) {
      found = case_i_hermite(sh, L, zs, std::nullopt);
      return found.has_value();
    });
    if (found) {
      if (sh.odd) found->parameters["x0"] = str(x0);
      return *found;
    }
  }
  throw PatternNotAchieved("case (i) " + where + ": no node placement on the search grid gives the root ladder");
}

Perturbation perturb_lemma7(int h, int l, const Rational& s) {
  if (h < 0 || l < 0) throw OutOfRange("perturb_lemma7 needs h, l >= 0");
  if (!(s > l + 1)) throw OutOfRange("perturb_lemma7 needs s > l + 1");
  const Poly q1 = lemma7_q1(h, l, s);
  Perturbation out;
  if (h == 0) {
    for (int j = 0; j <= 200; ++j) {
      const Poly c = Poly::constant(pow2(-j));
      if (lemma7_ladder(q1 + c, h, l, s)) {
        out.c = c;
        out.perturbed = q1 + c;
        out.trace["epsilon"] = str(c.coeff(0));
        return out;
      }
    }
    throw SearchExhausted("perturb_lemma7: no epsilon gives the base ladder");
  }
  const Perturbation inner = perturb_lemma7(h - 1, l, s);
  const Poly& cstar = inner.c;
  const Poly x2c = Poly::monomial(Rational(1), 2) * cstar;
  const Poly xc = Poly::x() * cstar;
  for (int j = 0; j <= 200; ++j) {
    const Rational d = pow2(-j);
    if (count_in(xc - Poly::constant(d), Rational(0), s) != 1) continue;
    const Poly base = x2c - Poly::monomial(d, 1);
    auto with_b = [&](const Rational& b) { return base + Poly::constant(b); };
    Rational lo(0);
    Rational hi(1);
    int grow = 0;
    while (!positive_on(with_b(hi), Rational(0), s) && grow++ < 200) hi *= 2;
    for (int it = 0; it < 4 * j + 64; ++it) {
      const Poly c = with_b(hi);
      if (lemma7_ladder(q1 + c, h, l, s)) {
        out.c = c;
        out.perturbed = q1 + c;
        out.trace = inner.trace;
        out.trace["d" + std::to_string(h)] = str(d);
        out.trace["b" + std::to_string(h)] = str(hi);
        return out;
      }
      const Rational mid = (lo + hi) / 2;
      if (positive_on(with_b(mid), Rational(0), s)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  throw SearchExhausted("perturb_lemma7: no (d, b) found at h = " + std::to_string(h));
}

Perturbation perturb_lemma8(int h, int l, const Rational& s1, const Rational& s2) {
  if (h < 1 || l < 0) throw OutOfRange("perturb_lemma8 needs h >= 1 and l >= 0");
  if (!(s1 < -1) || !(s2 > l + 1)) throw OutOfRange("perturb_lemma8 needs s1 < -1 and s2 > l + 1");
  const Poly q1 = lemma8_q1(h, l, s1, s2);
  const Rational K = -q1.coeff(2 * h);

  // Target the roots of -K x^(2h) + c near zero at delta * rho_j: one
  // negative, 2h - 1 positive, summing to zero, and chosen so that
  // u^(2h) - prod (u - rho_j) has no real root.
  const int width = 2 * h;
  std::vector<Rational> rho;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 10);
  for (int trial = 0; trial < 20000 && rho.empty(); ++trial) {
    std::vector<Rational> pos;
    if (h == 1) {
      pos.push_back(Rational(1));
    } else {
      for (int i = 0; i < width - 1; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        pos.push_back(r);
      }
    }
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end()) continue;
    Rational sum(0);
    for (const auto& p : pos) sum += p;
    std::vector<Rational> cand{-sum};
    cand.insert(cand.end(), pos.begin(), pos.end());
    Poly prod = Poly::constant(Rational(1));
    for (const auto& r : cand) prod *= lin(r);
    const Poly R = Poly::monomial(Rational(1), width) - prod;
    if (R.leading() > 0 && (R.degree() == 0 || SturmChain(R).count_all() == 0)) rho = std::move(cand);
  }
  if (rho.empty()) throw SearchExhausted("perturb_lemma8: no root placement near zero");

  for (int j = 1; j <= 200; ++j) {
    const Rational delta = pow2(-j);
    Poly prod = Poly::constant(Rational(1));
    for (const auto& r : rho) prod *= lin(delta * r);
    Poly c = (Poly::monomial(Rational(1), width) - prod) * K;
    c += Poly::monomial(K * rpow(delta, width + 1), width - 1);
    if (lemma8_ok(c, h, l, s1, s2)) {
      Perturbation out;
      out.c = c;
      out.perturbed = q1 + c;
      out.trace["delta"] = str(delta);
      std::string nodes;
      for (const auto& r : rho) nodes += (nodes.empty() ? "" : " ") + str(r);
      out.trace["rho"] = nodes;
      return out;
    }
  }
  throw SearchExhausted("perturb_lemma8: no delta gives the ladder");
}

ConstructionResult construct_case_ii(int m, int n, const SearchOptions& options) {
  if (!in_case_ii(m, n) || n == 2 * m) {
    throw OutOfRange("construct_case_ii needs floor((4m+2)/3) + 1 <= n <= 2m - 1 and (m, n) != (3, 5)");
  }
  const std::string where = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  std::mt19937_64 rng(options.seed);
  const int r4 = (n - 1) % 4;
  if (r4 == 0) {
    const int t = (n - 1) / 4;
    const int h = 3 * t - m;
    const int l = m - 2 * t - 1;
    const Rational s(2 * m - 2 * t);
    const Perturbation pert = perturb_lemma7(h, l, s);
    const Poly ints = integer_run(1, l);
    int jitters = 0;
    auto r = case_ii_certify(
        "case-ii-i", m, n, t, pert.c, rng, [&](const Poly& c) { return lemma7_ok(c, h, l, s); },
        [&](const Poly& c) {
          const Poly P1 = lemma7_q1(h, l, s) + c;
          return HyperellipticCurve{lin(s) * P1 * Poly::x() * ints,
                                    P1 * lin(s).pow(3) * Poly::monomial(Rational(1), 2 * h + 3) * ints.pow(4)};
        },
        jitters);
    if (!r) throw SearchExhausted("case (ii) " + where + ": jitter did not clear the critical-point condition");
    for (const auto& [k, v] : pert.trace) r->parameters[k] = v;
    r->parameters["s"] = str(s);
    r->parameters["jitters"] = str(jitters);
    return *r;
  }
  if (r4 == 1) {
    const int t = (n - 2) / 4;
    const int h = 3 * t - m + 1;
    const int l = m - 2 * t - 2;
    const Rational s1(-2);
    const Poly ints = integer_run(1, l);
    for (Rational s2(2 * m - 2 * t); s2 <= options.s_cap; s2 *= 2) {
      Perturbation pert;
      try {
        pert = perturb_lemma8(h, l, s1, s2);
      } catch (const SearchExhausted&) {
        continue;
      }
      int jitters = 0;
      auto r = case_ii_certify(
          "case-ii-ii", m, n, t, pert.c, rng, [&](const Poly& c) { return lemma8_ok(c, h, l, s1, s2); },
          [&](const Poly& c) {
            const Poly P1 = lemma8_q1(h, l, s1, s2) + c;
            return HyperellipticCurve{lin(s1) * lin(s2) * Poly::x() * ints * P1,
                                      P1 * lin(s1).pow(3) * lin(s2).pow(3) * Poly::monomial(Rational(1), 2 * h + 2) *
                                          ints.pow(4)};
          },
          jitters);
      if (!r) continue;
      for (const auto& [k, v] : pert.trace) r->parameters[k] = v;
      r->parameters["s"] = str(s2);
      r->parameters["jitters"] = str(jitters);
      return *r;
    }
    throw SearchExhausted("case (ii) " + where + ": no s certifies");
  }
  const int pm = m - 1;
  const int pn = n - 2;
  ConstructionResult base;
  if (in_case_i(pm, pn)) {
    base = construct_case_i(pm, pn, std::nullopt, options);
  } else if (in_case_ii(pm, pn) && pn < 2 * pm) {
    base = construct_case_ii(pm, pn, options);
  } else {
    throw PatternNotAchieved("case (ii) " + where + ": the reduced type (" + std::to_string(pm) + "," +
                             std::to_string(pn) + ") has no construction to lift");
  }
  auto r = lift(base.curve, std::nullopt, options);
  const int t = (n - 1) / 4;
  if (r.report.certified_count < t) throw SearchExhausted("case (ii) " + where + ": lift lost cycles");
  r.family = "case-ii-iii";
  r.advertised = t;
  for (const auto& [k, v] : base.parameters) r.parameters["base." + k] = v;
  r.parameters["base.family"] = base.family;
  return r;
}

ConstructionResult lift(const HyperellipticCurve& curve, const std::optional<Rational>& s,
                        const SearchOptions& options) {
  const int t = certify(curve).certified_count;
  auto build = [&](const Rational& v) {
    return HyperellipticCurve{curve.P * lin(v), curve.Q * lin(v).pow(2)};
  };
  if (s) {
    auto r = finish("lift", build(*s), t);
    r.parameters["s"] = str(*s);
    r.parameters["input_count"] = str(t);
    return r;
  }
  Rational v(floor_of(cauchy_bound(curve.Q)) + 1);
  for (; v <= options.s_cap; v *= 2) {
    ConstructionResult r;
    try {
      r = finish("lift", build(v), t);
    } catch (const NonPolynomialSystem&) {
      continue;
    }
    if (r.report.certified_count >= t) {
      r.parameters["s"] = str(v);
      r.parameters["input_count"] = str(t);
      return r;
    }
  }
  throw SearchExhausted("lift: no s up to the cap keeps the certified cycles");
}

ConstructionResult construct(int m, int n, const SearchOptions& options) {
  if (m < 2 || n < 1) throw OutOfRange("no construction below m = 2");
  if (n >= 2 * m + 1) return construct_high_n(m, n, options);
  if (n == 2 * m && m >= 3) return construct_n_2m(m, options);
  if (in_case_i(m, n)) return construct_case_i(m, n, std::nullopt, options);
  if (in_case_ii(m, n)) return construct_case_ii(m, n, options);
  throw OutOfRange("the lower bound for (" + std::to_string(m) + "," + std::to_string(n) + ") is zero");
}

}  // namespace hyperlc
