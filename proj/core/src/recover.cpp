#include "hyperlc/recover.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hyperlc/errors.hpp"
#include "mpoly.hpp"

namespace hyperlc {

namespace {

using detail::MPoly;
using detail::MPolyX;

struct Equation {
  MPoly poly;
  std::string family;
  int degree = 0;

  std::string label() const { return family + " x^" + std::to_string(degree); }
};

struct Layout {
  int m = 0;
  int n = 0;
  int N = 0;  // degree of Q
  std::size_t vars = 0;

  std::size_t p(int i) const { return static_cast<std::size_t>(i); }
  std::size_t q(int j) const { return static_cast<std::size_t>(m + 2 + j); }
  std::string name(std::size_t v) const {
    const int i = static_cast<int>(v);
    return i <= m + 1 ? "p" + std::to_string(i) : "q" + std::to_string(i - m - 2);
  }
};

struct State {
  std::vector<std::optional<Rational>> values;
  std::vector<Equation> equations;
  std::vector<EliminationStep> schedule;
};

struct Failure {
  std::string family;
  int degree;
};

struct Search {
  const Layout& layout;
  std::vector<bool> nonzero;
  std::vector<State> solved;
  std::optional<Failure> first_failure;
  int branches = 1;

  void fail(const Equation& e) {
    if (!first_failure) first_failure = Failure{e.family, e.degree};
  }

  void assign(State& s, std::size_t v, const Rational& value, const std::string& eq, const Rational& pivot) {
    s.values[v] = value;
    s.schedule.push_back({layout.name(v), eq, pivot, value});
    for (auto& e : s.equations) e.poly = e.poly.substitute(v, value);
  }

  // Returns false when an equation became a nonzero constant.
  bool tidy(State& s) {
    std::vector<Equation> kept;
    for (auto& e : s.equations) {
      e.poly = e.poly.strip(nonzero);
      if (auto c = e.poly.as_constant()) {
        if (*c != 0) {
          fail(e);
          return false;
        }
        continue;
      }
      kept.push_back(std::move(e));
    }
    s.equations = std::move(kept);
    return true;
  }

  // Gaussian elimination on the equations of total degree one. Returns -1 on
  // inconsistency, otherwise the number of unknowns fixed.
  int linear_step(State& s) {
    std::vector<const Equation*> rows_src;
    for (const auto& e : s.equations) {
      if (e.poly.total_degree() == 1) rows_src.push_back(&e);
    }
    if (rows_src.empty()) return 0;
    std::vector<std::size_t> cols;
    for (const auto* e : rows_src) {
      for (auto v : e->poly.occurring()) cols.push_back(v);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    // Unknowns with the highest index first: the top coefficients are the
    // ones the triangular chain fixes first.
    std::reverse(cols.begin(), cols.end());

    const std::size_t nc = cols.size();
    struct Row {
      std::vector<Rational> a;
      Rational rhs;
      std::string label;
      const Equation* src;
    };
    std::vector<Row> rows;
    for (const auto* e : rows_src) {
      Row r{std::vector<Rational>(nc), 0, e->label(), e};
      for (const auto& [mono, c] : e->poly.terms()) {
        auto it = std::find_if(mono.begin(), mono.end(), [](std::uint8_t x) { return x != 0; });
        if (it == mono.end()) {
          r.rhs -= c;
        } else {
          const auto v = static_cast<std::size_t>(it - mono.begin());
          const auto col = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), v) - cols.begin());
          r.a[col] += c;
        }
      }
      rows.push_back(std::move(r));
    }
    std::vector<Rational> pivots(rows.size());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p].a[c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      const Rational piv = rows[rank].a[c];
      pivots[rank] = piv;
      for (auto& x : rows[rank].a) x /= piv;
      rows[rank].rhs /= piv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r].a[c] == 0) continue;
        const Rational factor = rows[r].a[c];
        for (std::size_t k = 0; k < nc; ++k) rows[r].a[k] -= factor * rows[rank].a[k];
        rows[r].rhs -= factor * rows[rank].rhs;
      }
      ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r].rhs != 0) {
        fail(*rows[r].src);
        return -1;
      }
    }
    int fixed = 0;
    for (std::size_t r = 0; r < rank; ++r) {
      std::size_t count = 0;
      std::size_t col = 0;
      for (std::size_t k = 0; k < nc; ++k) {
        if (rows[r].a[k] != 0) {
          ++count;
          col = k;
        }
      }
      if (count != 1) continue;
      const std::size_t v = cols[col];
      if (s.values[v]) continue;
      if (nonzero[v] && rows[r].rhs == 0) {
        fail(*rows[r].src);
        return -1;
      }
      assign(s, v, rows[r].rhs, rows[r].label, pivots[r]);
      ++fixed;
    }
    return fixed;
  }

  void run(State s) {
    while (true) {
      if (!tidy(s)) return;
      if (s.equations.empty()) {
        for (std::size_t v = 0; v < s.values.size(); ++v) {
          if (!s.values[v]) throw DegenerateLeadingCoefficient("unknown " + layout.name(v) + " is not determined");
        }
        solved.push_back(std::move(s));
        return;
      }
      const int fixed = linear_step(s);
      if (fixed < 0) return;
      if (fixed > 0) continue;

      // No linear progress: split on the rational roots of a one-variable
      // equation of least degree.
      const Equation* best = nullptr;
      std::pair<std::size_t, Poly> best_uni;
      for (const auto& e : s.equations) {
        auto uni = e.poly.as_univariate();
        if (!uni) continue;
        if (!best || uni->second.degree() < best_uni.second.degree()) {
          best = &e;
          best_uni = std::move(*uni);
        }
      }
      if (!best) {
        throw DegenerateLeadingCoefficient("coefficient matching stalled: no equation isolates a single unknown");
      }
      const auto [v, poly] = best_uni;
      std::vector<Rational> roots;
      for (const auto& r : isolate_real_roots(poly)) {
        if (r.is_exact() && !(nonzero[v] && r.lo == 0)) roots.push_back(r.lo);
      }
      if (roots.empty()) {
        fail(*best);
        return;
      }
      branches += static_cast<int>(roots.size()) - 1;
      const std::string label = best->label();
      const Rational lead = poly.leading();
      for (const auto& r : roots) {
        State next = s;
        assign(next, v, r, label, lead);
        run(std::move(next));
      }
      return;
    }
  }
};

void add_equations(std::vector<Equation>& out, const MPolyX& lhs, const std::string& family, int from_degree) {
  for (std::size_t d = 0; d < lhs.size(); ++d) {
    if (static_cast<int>(d) < from_degree || lhs[d].is_zero()) continue;
    out.push_back({lhs[d], family, static_cast<int>(d)});
  }
}

}  // namespace

RecoveryOutcome recover_curve(const LienardSystem& sys, const RecoverOptions& options) {
  const int m = sys.m();
  const int n = sys.n();
  if (m < 0 || n < 1) throw OutOfRange("system needs deg f >= 0 and deg g >= 1");
  const bool boundary = n == 2 * m + 1;
  if (boundary && !options.allow_boundary_type) {
    throw UndeterminedType("type (m, 2m+1) is not covered by the uniqueness argument");
  }

  Layout L;
  L.m = m;
  L.n = n;
  L.N = n > 2 * m + 1 ? n + 1 : 2 * m + 2;
  L.vars = static_cast<std::size_t>(m + 2 + L.N + 1);

  MPolyX P(static_cast<std::size_t>(m + 2));
  MPolyX Q(static_cast<std::size_t>(L.N + 1));
  for (int i = 0; i <= m + 1; ++i) P[static_cast<std::size_t>(i)] = MPoly::variable(L.vars, L.p(i));
  for (int j = 0; j <= L.N; ++j) Q[static_cast<std::size_t>(j)] = MPoly::variable(L.vars, L.q(j));
  const MPolyX f = detail::from_poly(sys.f, L.vars);
  const MPolyX g = detail::from_poly(sys.g, L.vars);
  const MPolyX dP = detail::derivx(P, L.vars);
  const MPolyX dQ = detail::derivx(Q, L.vars);
  const MPolyX W = detail::addx(detail::mulx(P, P, L.vars), detail::scalex(Q, Rational(-1)), L.vars);

  const MPolyX two_q = detail::scalex(Q, Rational(2));
  const MPolyX f_rel = detail::addx(detail::mulx(two_q, detail::addx(f, detail::scalex(dP, Rational(-1)), L.vars), L.vars),
                                    detail::scalex(detail::mulx(P, dQ, L.vars), Rational(-1)), L.vars);
  const MPolyX g_rel = detail::addx(detail::mulx(two_q, g, L.vars), detail::scalex(detail::mulx(dQ, W, L.vars), Rational(-1)),
                                    L.vars);

  State start;
  start.values.assign(L.vars, std::nullopt);
  // Top degrees first so failures report the highest mismatching power.
  std::vector<Equation> eqs;
  if (n < 2 * m + 1) add_equations(eqs, W, "degree-cut", n + 2);
  add_equations(eqs, f_rel, "f-relation", 0);
  add_equations(eqs, g_rel, "g-relation", 0);
  std::stable_sort(eqs.begin(), eqs.end(), [](const Equation& a, const Equation& b) { return a.degree > b.degree; });
  start.equations = std::move(eqs);

  Search search{L, std::vector<bool>(L.vars, false), {}, std::nullopt, 1};
  search.nonzero[L.p(m + 1)] = true;
  search.nonzero[L.q(L.N)] = true;
  try {
    search.run(std::move(start));
  } catch (const DegenerateLeadingCoefficient& e) {
    if (boundary) throw UndeterminedType(std::string("boundary type: ") + e.what());
    throw;
  }

  RecoveryOutcome out;
  out.branches = search.branches;
  int found = 0;
  for (auto& s : search.solved) {
    std::vector<Rational> pc;
    std::vector<Rational> qc;
    for (int i = 0; i <= m + 1; ++i) pc.push_back(*s.values[L.p(i)]);
    for (int j = 0; j <= L.N; ++j) qc.push_back(*s.values[L.q(j)]);
    HyperellipticCurve curve{Poly(std::move(pc)), Poly(std::move(qc))};
    const Poly dq = derivative(curve.Q);
    const Poly lhs_f = curve.Q * sys.f * Rational(2);
    const Poly rhs_f = curve.Q * derivative(curve.P) * Rational(2) + curve.P * dq;
    const Poly lhs_g = curve.Q * sys.g * Rational(2);
    const Poly rhs_g = dq * (curve.P * curve.P - curve.Q);
    if (curve.Q.is_zero() || !(lhs_f == rhs_f) || !(lhs_g == rhs_g)) continue;
    if (found++ > 0) {
      if (boundary && !(*out.curve == curve)) throw UndeterminedType("boundary type: several curves fit");
      continue;
    }
    out.curve = std::move(curve);
    out.verified = true;
    out.schedule = std::move(s.schedule);
  }
  if (out.curve) return out;
  if (search.first_failure) {
    out.witness_family = search.first_failure->family;
    out.witness_degree = search.first_failure->degree;
  }
  return out;
}

}  // namespace hyperlc
