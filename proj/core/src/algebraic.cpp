#include "hyperlc/algebraic.hpp"

#include <algorithm>
#include <utility>

#include "hyperlc/errors.hpp"

namespace hyperlc {

RealRoot::RealRoot(Poly squarefree_poly, Rational lo, Rational hi)
    : poly_(std::move(squarefree_poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw OutOfRange("RealRoot interval has lo > hi");
  if (lo_ == hi_) {
    poly_ = Poly::linear_factor(lo_);
    return;
  }
  sign_at_lo_ = sign(eval(poly_, lo_));
  const int sign_at_hi = sign(eval(poly_, hi_));
  if (sign_at_lo_ == 0 || sign_at_hi == 0 || sign_at_lo_ == sign_at_hi) {
    throw OutOfRange("RealRoot interval does not bracket a simple root");
  }
}

RealRoot RealRoot::exact(const Rational& value) { return RealRoot(Poly::linear_factor(value), value, value); }

void RealRoot::bisect() {
  if (is_exact()) return;
  Rational mid = (lo_ + hi_) / 2;
  const int s = sign(eval(poly_, mid));
  if (s == 0) {
    lo_ = mid;
    hi_ = mid;
    poly_ = Poly::linear_factor(mid);
    sign_at_lo_ = 0;
  } else if (s == sign_at_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void RealRoot::refine_to_width(const Rational& width) {
  while (!is_exact() && hi_ - lo_ > width) bisect();
}

int RealRoot::sign_of(const Poly& f) {
  if (f.is_zero()) return 0;
  if (is_exact()) return sign(eval(f, lo_));
  const Poly g = gcd(f, poly_);
  if (g.degree() >= 1 && sign(eval(g, lo_)) * sign(eval(g, hi_)) < 0) return 0;
  separate_from(f);
  return sign(eval(f, lo_));
}

void RealRoot::separate_from(const Poly& f) {
  if (is_exact() || f.is_zero()) return;
  // Strip every factor shared with the defining polynomial; what is left
  // cannot vanish at this root.
  Poly rest = f;
  for (Poly g = gcd(rest, poly_); g.degree() >= 1; g = gcd(rest, poly_)) rest = divrem(rest, g).quotient;
  if (rest.degree() < 1) return;
  const SturmChain chain(rest);
  while (!is_exact()) {
    if (eval(rest, lo_) != 0 && eval(rest, hi_) != 0 && chain.count(lo_, hi_) == 0) return;
    bisect();
  }
}

double RealRoot::approx() const {
  if (is_exact()) return to_double(lo_);
  RealRoot copy = *this;
  const Rational tiny(Integer(1), Integer(1) << 64);
  copy.refine_to_width(tiny * (abs_value(lo_) + abs_value(hi_) + 1));
  return to_double((copy.lo_ + copy.hi_) / 2);
}

namespace {

// a lies entirely to the left of b.
bool before(const RealRoot& a, const RealRoot& b) {
  if (a.hi() < b.lo()) return true;
  return a.hi() == b.lo() && !(a.is_exact() && b.is_exact());
}

bool contains_root_of(RealRoot& r, const Poly& g) {
  if (g.degree() < 1) return false;
  if (r.is_exact()) return eval(g, r.lo()) == 0;
  return sign(eval(g, r.lo())) * sign(eval(g, r.hi())) < 0;
}

// Whether a and b denote the same real number.
bool same_number(RealRoot& a, RealRoot& b) {
  if (a.is_exact() && b.is_exact()) return a.lo() == b.lo();
  if (a.is_exact() || b.is_exact()) {
    RealRoot& point = a.is_exact() ? a : b;
    RealRoot& other = a.is_exact() ? b : a;
    const Rational& r = point.lo();
    return other.lo() < r && r < other.hi() && eval(other.poly(), r) == 0;
  }
  const Poly g = gcd(a.poly(), b.poly());
  if (!contains_root_of(a, g) || !contains_root_of(b, g)) return false;
  // Both are roots of g, which is square-free: equal iff the hull of the two
  // intervals holds a single root of g.
  const Rational lo = std::min(a.lo(), b.lo());
  const Rational hi = std::max(a.hi(), b.hi());
  if (eval(g, lo) == 0 || eval(g, hi) == 0) return false;
  if (a.hi() < b.lo() || b.hi() < a.lo()) return false;
  return sturm_count(g, lo, hi) == 1;
}

}  // namespace

bool separate_pair(RealRoot& a, RealRoot& b) {
  if (before(a, b) || before(b, a)) return true;
  if (same_number(a, b)) return false;
  while (!before(a, b) && !before(b, a)) {
    if (!a.is_exact() && (b.is_exact() || a.width() >= b.width())) {
      a.bisect();
    } else {
      b.bisect();
    }
  }
  return true;
}

namespace {

struct OpenSpan {
  Rational lo;
  Rational hi;
  Poly reduced;
};

// Open interval strictly between a and b on which f's roots are exactly the
// roots of f between the two numbers, with f reduced so that it is nonzero
// at both ends.
OpenSpan span_between(const Poly& f, RealRoot& a, RealRoot& b) {
  if (!separate_pair(a, b)) throw OutOfRange("roots coincide");
  if (!before(a, b)) throw OutOfRange("expected a < b");
  a.separate_from(f);
  b.separate_from(f);
  OpenSpan s{a.is_exact() ? a.lo() : a.hi(), b.lo(), f};
  for (const Rational* end : {&s.lo, &s.hi}) {
    const Poly lin = Poly::linear_factor(*end);
    while (s.reduced.degree() >= 1 && eval(s.reduced, *end) == 0) s.reduced = divrem(s.reduced, lin).quotient;
  }
  return s;
}

// Roots of the square-free poly a inside (lo, hi); a must not vanish at lo
// or hi.
void isolate_in(const Poly& a, const SturmChain& chain, const Rational& lo, const Rational& hi,
                std::vector<RealRoot>& out) {
  if (!(lo < hi)) return;
  const int n = chain.count(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(a, lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  if (eval(a, mid) != 0) {
    isolate_in(a, chain, lo, mid, out);
    isolate_in(a, chain, mid, hi, out);
    return;
  }
  Rational delta = (hi - lo) / 4;
  while (eval(a, mid - delta) == 0 || eval(a, mid + delta) == 0 || chain.count(mid - delta, mid + delta) != 1) {
    delta /= 2;
  }
  isolate_in(a, chain, lo, mid - delta, out);
  out.push_back(RealRoot::exact(mid));
  isolate_in(a, chain, mid + delta, hi, out);
}

std::vector<RealRoot> isolate_squarefree(const Poly& a) {
  std::vector<RealRoot> out;
  if (a.degree() < 1) return out;
  if (a.degree() == 1) {
    out.push_back(RealRoot::exact(-a.coeff(0) / a.coeff(1)));
    return out;
  }
  const Rational bound = cauchy_bound(a);
  isolate_in(a, SturmChain(a), -bound, bound, out);
  return out;
}

void force_rational(RealRoot& r) {
  if (r.is_exact()) return;
  const Poly prim = primitive_part(r.poly());
  const Rational lead = abs_value(prim.leading());
  while (!r.is_exact() && r.width() * lead >= 1) r.bisect();
  if (r.is_exact()) return;
  // A rational root p/q of an integer polynomial has q | lead, so it is a
  // multiple of 1/lead; the interval holds at most one such point.
  Rational scaled = r.lo() * lead;
  Integer k = scaled.get_num() / scaled.get_den();
  if (Rational(k) <= scaled) k += 1;
  const Rational candidate = Rational(k) / lead;
  if (candidate < r.hi() && eval(r.poly(), candidate) == 0) r = RealRoot::exact(candidate);
}

std::vector<RootWithMultiplicity> roots_impl(const Poly& f, bool exact_rationals) {
  if (f.is_zero()) throw DegreeZeroInput("zero polynomial has no isolated roots");
  std::vector<RootWithMultiplicity> all;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    for (auto& r : isolate_squarefree(factor)) {
      if (exact_rationals) force_rational(r);
      all.push_back({std::move(r), mult});
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) separate_pair(all[i].root, all[j].root);
  }
  for (auto& r : all) r.root.separate_from(f);
  std::sort(all.begin(), all.end(), [](const RootWithMultiplicity& x, const RootWithMultiplicity& y) {
    return before(x.root, y.root);
  });
  return all;
}

}  // namespace

int count_roots_between(const Poly& f, RealRoot& a, RealRoot& b) {
  if (f.is_zero()) throw OutOfRange("zero polynomial vanishes everywhere");
  OpenSpan s = span_between(f, a, b);
  if (!(s.lo < s.hi) || s.reduced.degree() < 1) return 0;
  return sturm_count(s.reduced, s.lo, s.hi);
}

SignVerdict sign_between(const Poly& f, RealRoot& a, RealRoot& b) {
  if (f.is_zero()) return SignVerdict::MixedOrZero;
  OpenSpan s = span_between(f, a, b);
  if (s.lo < s.hi && s.reduced.degree() >= 1 && sturm_count(s.reduced, s.lo, s.hi) > 0) {
    return SignVerdict::MixedOrZero;
  }
  const int v = sign(eval(f, (s.lo + s.hi) / 2));
  if (v > 0) return SignVerdict::Positive;
  if (v < 0) return SignVerdict::Negative;
  return SignVerdict::MixedOrZero;
}

std::vector<RealRoot> roots_between(const Poly& f, RealRoot& a, RealRoot& b) {
  if (f.is_zero()) throw OutOfRange("zero polynomial vanishes everywhere");
  OpenSpan s = span_between(f, a, b);
  std::vector<RealRoot> out;
  if (!(s.lo < s.hi) || s.reduced.degree() < 1) return out;
  const Poly sq = squarefree_part(s.reduced);
  isolate_in(sq, SturmChain(sq), s.lo, s.hi, out);
  return out;
}

std::vector<RootWithMultiplicity> real_roots(const Poly& f, bool exact_rationals) {
  return roots_impl(f, exact_rationals);
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& f) {
  std::vector<IsolatingInterval> out;
  for (auto& r : roots_impl(f, true)) out.push_back({r.root.lo(), r.root.hi(), r.multiplicity});
  return out;
}

IsolatingInterval refine_interval(const Poly& f, IsolatingInterval interval, const Rational& width) {
  if (interval.is_exact()) return interval;
  RealRoot r(squarefree_part(f), interval.lo, interval.hi);
  r.refine_to_width(width);
  interval.lo = r.lo();
  interval.hi = r.hi();
  return interval;
}

}  // namespace hyperlc
