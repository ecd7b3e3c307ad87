#pragma once

#include <array>

#include "equiform/motion_params.hpp"
#include "equiform/tpoly.hpp"

namespace equiform {

/// The swept surface X(t, phi) = [I + t(s' I + Omega)] x(phi) + t b',
/// stored exactly. Each component has t-degree <= 1 and phi-content in
/// span{1, phi, cos phi, sin phi, phi cos phi, phi sin phi}.
struct SurfaceChart {
  std::array<TPoly, 7> components;
  MotionParams params;
};

SurfaceChart build_chart(const MotionParams& params);

struct TangentFields {
  std::array<TPoly, 7> x_t;    // (s' I + Omega) x + b', t-degree 0
  std::array<TPoly, 7> x_phi;  // [I + t(s' I + Omega)] x_phi, t-degree <= 1
};

/// Exact differentiation of the chart.
TangentFields tangent_fields(const SurfaceChart& chart);

}  // namespace equiform
