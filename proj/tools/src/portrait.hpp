#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlc/lienard.hpp"

namespace hyperlc::cli {

struct Window {
  double x_min = -3;
  double x_max = 3;
  double y_min = -3;
  double y_max = 3;
};

struct PortraitSpec {
  LienardSystem system;
  std::optional<HyperellipticCurve> curve;
  // Picked from the curve (or a default box) when absent.
  std::optional<Window> window;
  double step = 1e-3;
  int steps = 20000;
  std::vector<std::pair<double, double>> seeds;
};

struct Portrait {
  std::string svg;
  Window window;
  int branches = 0;
  int trajectories = 0;
};

/// Throws OutOfRange for an empty window or a non-positive step.
Portrait render_portrait(const PortraitSpec& spec);

}  // namespace hyperlc::cli
