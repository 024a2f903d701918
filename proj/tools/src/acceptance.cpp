#include "acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "hyperlc/errors.hpp"
#include "hyperlc/lienard.hpp"
#include "hyperlc/recover.hpp"
#include "hyperlc/rootclass.hpp"
#include "random_poly.hpp"

namespace hyperlc::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Built {
  std::string label;
  HyperellipticCurve curve;
  LienardSystem system;
};

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::vector<Built> curves;

  void fail(const std::string& why) {
    if (detail.tellp() > 0) detail << "; ";
    passed = false;
    detail << why;
  }
  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }
};

std::string cell(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

// Runs body, converting an escaping DomainError into a failure.
template <class F>
void guarded(Outcome& out, const std::string& label, F&& body) {
  try {
    body();
  } catch (const DomainError& e) {
    out.fail(label + ": " + e.code() + ": " + e.what());
  }
}

void expect_count(Outcome& out, const ConstructionResult& r, int want) {
  out.curves.push_back({cell(r.m, r.n), r.curve, r.system});
  const int got = r.report.certified_count;
  if (got != want) {
    out.fail(cell(r.m, r.n) + " certified " + std::to_string(got) + ", expected " + std::to_string(want));
  } else {
    out.note(cell(r.m, r.n) + "=" + std::to_string(got));
  }
}

Outcome criterion1() {
  Outcome out;
  for (int m = 2; m <= 5; ++m) {
    guarded(out, cell(m, 2 * m + 1), [&] { expect_count(out, construct_high_n(m, 2 * m + 1), m / 2); });
  }
  return out;
}

Outcome criterion2() {
  Outcome out;
  for (int m = 4; m <= 7; ++m) {
    guarded(out, cell(m, 2 * m), [&] {
      const auto r = construct_n_2m(m);
      expect_count(out, r, (2 * m - 1) / 4);
      const auto b = bounds(m, 2 * m);
      if (!b.exact || !b.upper || *b.upper != r.report.certified_count) {
        out.fail(cell(m, 2 * m) + " count does not meet an exact upper bound");
      }
    });
  }
  return out;
}

Outcome criterion3() {
  Outcome out;
  guarded(out, "(4,6)", [&] { expect_count(out, construct_case_i(4, 6), 1); });
  guarded(out, "(10,13)", [&] {
    expect_count(out, construct_case_i(10, 13), 2);
    const auto b = bounds(10, 13);
    if (b.lower != 2 || !b.upper || *b.upper != 3) out.fail("bounds(10,13) is not [2, 3]");
  });
  return out;
}

Outcome criterion4(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  int agree = 0;
  for (int i = 0; i < 500; ++i) {
    const Poly f = testing::random_test_poly(rng, 8);
    const Rational bound = cauchy_bound(f) + 1;
    const int sturm = SturmChain(squarefree_part(f)).count(-bound, bound);
    if (count_roots(f).distinct_real == sturm) {
      ++agree;
    } else if (out.passed) {
      out.fail("first disagreement on " + to_string(f));
    }
  }
  out.note("count_roots = Sturm on " + std::to_string(agree) + "/500");
  int hankel = 0;
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> deg(1, 8);
    const Poly f = testing::random_monic(rng, deg(rng));
    const int n = f.degree();
    const auto d = discriminant_sequence(f);
    const auto s = power_sums(f, 2 * n - 2);
    bool all = true;
    for (int k = 1; k <= n; ++k) all = all && d[k - 1] == hankel_determinant(s, k);
    if (all) {
      ++hankel;
    } else if (out.passed) {
      out.fail("D_k != S_k for " + to_string(f));
    }
  }
  out.note("D_k = S_k on " + std::to_string(hankel) + "/200");
  return out;
}

Outcome criterion5(const std::vector<Built>& curves) {
  Outcome out;
  int ok = 0;
  for (const auto& b : curves) {
    guarded(out, b.label, [&] {
      RecoverOptions opts;
      opts.allow_boundary_type = b.system.n() == 2 * b.system.m() + 1;
      const auto r = recover_curve(b.system, opts);
      if (!r.curve || !r.verified || *r.curve != b.curve) {
        out.fail(b.label + " did not round-trip");
      } else {
        ++ok;
      }
    });
  }
  out.note(std::to_string(ok) + "/" + std::to_string(curves.size()) + " curves recovered exactly");
  return out;
}

Outcome criterion6(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int witnesses = 0;
  int rejected = 0;
  for (int i = 0; i < 50; ++i) {
    const LienardSystem sys{testing::random_poly(rng, 2), testing::random_poly(rng, 4)};
    guarded(out, "draw " + std::to_string(i), [&] {
      const auto r = recover_curve(sys);
      if (!r.curve) {
        ++witnesses;
        return;
      }
      out.curves.push_back({"(2,4) draw " + std::to_string(i), *r.curve, sys});
      if (certify(*r.curve).certified_count == 0) {
        ++rejected;
      } else {
        out.fail("draw " + std::to_string(i) + " has a certified curve");
      }
    });
  }
  out.note(std::to_string(witnesses) + " no-curve witnesses, " + std::to_string(rejected) + " curves with 0 cycles");
  return out;
}

Outcome criterion8() {
  Outcome out;
  guarded(out, "lift", [&] {
    const auto base = construct_high_n(2, 5);
    out.curves.push_back({"(2,5)", base.curve, base.system});
    const auto once = lift(base.curve);
    const auto twice = lift(once.curve);
    for (const auto* r : {&once, &twice}) {
      out.curves.push_back({"lift " + cell(r->m, r->n), r->curve, r->system});
      out.note(cell(r->m, r->n) + "=" + std::to_string(r->report.certified_count));
    }
    if (once.m != 3 || once.n != 7 || twice.m != 4 || twice.n != 9) out.fail("lifted types are not (3,7), (4,9)");
    if (once.report.certified_count < 1 || twice.report.certified_count < 1) out.fail("a lifted curve lost its cycle");
  });
  return out;
}

Outcome criterion7(const std::vector<Built>& curves) {
  Outcome out;
  int zero = 0;
  for (const auto& b : curves) {
    if (invariance_residual(b.system, b.curve).is_zero()) {
      ++zero;
    } else {
      out.fail(b.label + " has a nonzero residual");
    }
  }
  if (curves.empty()) out.fail("no curves to check");
  out.note(std::to_string(zero) + "/" + std::to_string(curves.size()) + " residuals vanish");
  return out;
}

struct Timed {
  Outcome outcome;
  double seconds = 0;
};

Timed timed(const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Timed t{body(), 0};
  t.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return t;
}

CriterionResult finish(int id, const char* name, double limit, const Timed& t) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.seconds = t.seconds;
  r.limit_seconds = limit;
  r.passed = t.outcome.passed;
  r.detail = t.outcome.detail.str();
  if (limit > 0 && t.seconds >= limit) {
    r.passed = false;
    r.detail += "; over the time limit";
  }
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const SuiteOptions& options) {
  const auto policy = options.parallel ? std::launch::async : std::launch::deferred;
  auto f1 = std::async(policy, [] { return timed(criterion1); });
  auto f2 = std::async(policy, [] { return timed(criterion2); });
  auto f3 = std::async(policy, [] { return timed(criterion3); });
  auto f4 = std::async(policy, [&] { return timed([&] { return criterion4(options.seed); }); });
  auto f6 = std::async(policy, [&] { return timed([&] { return criterion6(options.seed); }); });
  auto f8 = std::async(policy, [] { return timed(criterion8); });

  const Timed t1 = f1.get();
  const Timed t2 = f2.get();
  const Timed t3 = f3.get();
  std::vector<Built> built;
  for (const Timed* t : {&t1, &t2, &t3}) built.insert(built.end(), t->outcome.curves.begin(), t->outcome.curves.end());
  const Timed t5 = timed([&] { return criterion5(built); });
  const Timed t4 = f4.get();
  const Timed t6 = f6.get();
  const Timed t8 = f8.get();

  std::vector<Built> all = built;
  for (const Timed* t : {&t6, &t8}) all.insert(all.end(), t->outcome.curves.begin(), t->outcome.curves.end());
  const Timed t7 = timed([&] { return criterion7(all); });

  return {finish(1, "case (iii) family", 60, t1),
          finish(2, "n = 2m family", 120, t2),
          finish(3, "case (i) family", 600, t3),
          finish(4, "root classification against Sturm", 60, t4),
          finish(5, "reconstruction round trip", 60, t5),
          finish(6, "random (2,4) negative control", 30, t6),
          finish(7, "invariance residual", 0, t7),
          finish(8, "lift monotonicity", 60, t8)};
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  }
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + timing +
         "): " + r.detail;
}

}  // namespace hyperlc::cli
