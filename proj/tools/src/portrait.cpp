#include "portrait.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hyperlc/algebraic.hpp"
#include "hyperlc/errors.hpp"

namespace hyperlc::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr int kSamples = 240;

// Horner in doubles; coefficients are rounded once.
struct DoublePoly {
  std::vector<double> c;

  explicit DoublePoly(const Poly& p) {
    for (const auto& v : p.coeffs()) c.push_back(to_double(v));
  }
  double operator()(double x) const {
    double r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  }
};

using Polyline = std::vector<std::pair<double, double>>;

// x-intervals inside [lo, hi] on which Q >= 0, cut at the real roots of Q.
std::vector<std::pair<double, double>> nonnegative_runs(const Poly& Q, double lo, double hi) {
  std::vector<double> cuts{lo};
  for (const auto& r : real_roots(Q)) {
    const double x = r.root.approx();
    if (x > lo && x < hi) cuts.push_back(x);
  }
  cuts.push_back(hi);
  const DoublePoly q(Q);
  std::vector<std::pair<double, double>> runs;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (b - a <= 0) continue;
    if (q(0.5 * (a + b)) > 0) runs.emplace_back(a, b);
  }
  return runs;
}

std::vector<Polyline> curve_branches(const HyperellipticCurve& curve, double lo, double hi) {
  const DoublePoly p(curve.P);
  const DoublePoly q(curve.Q);
  std::vector<Polyline> out;
  for (const auto& [a, b] : nonnegative_runs(curve.Q, lo, hi)) {
    Polyline upper;
    Polyline lower;
    for (int i = 0; i <= kSamples; ++i) {
      const double x = a + (b - a) * i / kSamples;
      const double root = std::sqrt(std::max(0.0, q(x)));
      upper.emplace_back(x, -p(x) + root);
      lower.emplace_back(x, -p(x) - root);
    }
    out.push_back(std::move(upper));
    out.push_back(std::move(lower));
  }
  return out;
}

Window default_window(const PortraitSpec& spec) {
  Window w;
  if (!spec.curve) return w;
  const auto roots = real_roots(spec.curve->Q);
  if (roots.empty()) return w;
  const double lo = roots.front().root.approx();
  const double hi = roots.back().root.approx();
  const double pad = std::max(0.5, 0.1 * (hi - lo));
  w.x_min = lo - pad;
  w.x_max = hi + pad;
  double y_lo = 0;
  double y_hi = 0;
  bool any = false;
  for (const auto& branch : curve_branches(*spec.curve, w.x_min, w.x_max)) {
    for (const auto& [x, y] : branch) {
      if (!std::isfinite(y)) continue;
      y_lo = any ? std::min(y_lo, y) : y;
      y_hi = any ? std::max(y_hi, y) : y;
      any = true;
    }
  }
  if (any && y_hi > y_lo) {
    const double ypad = 0.1 * (y_hi - y_lo);
    w.y_min = y_lo - ypad;
    w.y_max = y_hi + ypad;
  }
  return w;
}

bool inside(const Window& w, double x, double y) {
  return x >= w.x_min && x <= w.x_max && y >= w.y_min && y <= w.y_max;
}

Polyline integrate(const LienardSystem& sys, const Window& w, double x, double y, double h, int steps) {
  const DoublePoly f(sys.f);
  const DoublePoly g(sys.g);
  auto field = [&](double px, double py) { return std::pair{py, -f(px) * py - g(px)}; };
  Polyline out;
  if (!inside(w, x, y)) return out;
  out.emplace_back(x, y);
  const int every = std::max(1, steps / 2000);
  for (int i = 1; i <= steps; ++i) {
    const auto [k1x, k1y] = field(x, y);
    const auto [k2x, k2y] = field(x + 0.5 * h * k1x, y + 0.5 * h * k1y);
    const auto [k3x, k3y] = field(x + 0.5 * h * k2x, y + 0.5 * h * k2y);
    const auto [k4x, k4y] = field(x + h * k3x, y + h * k3y);
    x += h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
    y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    if (!std::isfinite(x) || !std::isfinite(y) || !inside(w, x, y)) break;
    if (i % every == 0) out.emplace_back(x, y);
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string points(const Polyline& line, const Window& w) {
  std::string out;
  for (const auto& [x, y] : line) {
    const double px = (x - w.x_min) / (w.x_max - w.x_min) * kWidth;
    const double py = (w.y_max - y) / (w.y_max - w.y_min) * kHeight;
    if (!out.empty()) out += ' ';
    out += fmt(px) + "," + fmt(py);
  }
  return out;
}

// Clips a polyline to the window's y-range, splitting where it leaves.
std::vector<Polyline> clip(const Polyline& line, const Window& w) {
  std::vector<Polyline> out;
  Polyline cur;
  for (const auto& pt : line) {
    if (inside(w, pt.first, pt.second)) {
      cur.push_back(pt);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Portrait render_portrait(const PortraitSpec& spec) {
  if (!(spec.step > 0) || spec.steps < 0) throw OutOfRange("portrait step must be positive");
  Portrait out;
  out.window = spec.window ? *spec.window : default_window(spec);
  const Window& w = out.window;
  if (!(w.x_max > w.x_min) || !(w.y_max > w.y_min)) throw OutOfRange("portrait window is empty");

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
                    fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  svg += "<desc>x in [" + fmt(w.x_min) + ", " + fmt(w.x_max) + "], y in [" + fmt(w.y_min) + ", " + fmt(w.y_max) +
         "]</desc>\n";
  svg += "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" fill=\"white\" stroke=\"black\"/>\n";
  if (w.y_min < 0 && w.y_max > 0) {
    svg += "<polyline class=\"axis\" fill=\"none\" stroke=\"#bbb\" points=\"" +
           points({{w.x_min, 0.0}, {w.x_max, 0.0}}, w) + "\"/>\n";
  }
  if (spec.curve) {
    svg += "<g class=\"curve\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\">\n";
    for (const auto& branch : curve_branches(*spec.curve, w.x_min, w.x_max)) {
      const auto pieces = clip(branch, w);
      if (pieces.empty()) continue;
      ++out.branches;
      for (const auto& piece : pieces) {
        svg += "<polyline class=\"curve-branch\" points=\"" + points(piece, w) + "\"/>\n";
      }
    }
    svg += "</g>\n";
  }
  svg += "<g class=\"trajectories\" fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"1\">\n";
  for (const auto& [x, y] : spec.seeds) {
    const auto line = integrate(spec.system, w, x, y, spec.step, spec.steps);
    if (line.size() < 2) continue;
    ++out.trajectories;
    svg += "<polyline class=\"trajectory\" points=\"" + points(line, w) + "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  out.svg = std::move(svg);
  return out;
}

}  // namespace hyperlc::cli
