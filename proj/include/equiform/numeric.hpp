#pragma once

#include <array>
#include <functional>

#include "equiform/errors.hpp"
#include "equiform/motion_params.hpp"

namespace equiform {

/// Finite-difference settings for the numeric oracle. `step` is the
/// central-difference step applied to chart evaluations; derivatives of
/// the metric use larger internal steps derived for double precision.
struct FDConfig {
  double step = 1e-5;
  bool richardson = true;
  double tol = 1e-6;

  void validate() const;  // 0 < step <= 1e-3 required, tol > 0
};

struct Metric2 {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  double det() const { return g11 * g22 - g12 * g12; }
};

/// Metric as a plain function of (t, phi).
using MetricFn = std::function<Metric2(double, double)>;

/// Direct floating-point evaluation of X(t, phi); no symbolic machinery.
std::array<double, 7> numeric_chart_point(const MotionParams& params, double t,
                                          double phi);

/// First fundamental form from centrally-differenced chart evaluations.
Metric2 numeric_metric(const MotionParams& params, double t, double phi,
                       const FDConfig& config = {});

/// The numeric metric wrapped as a reusable callback.
MetricFn chart_metric_fn(const MotionParams& params,
                         const FDConfig& config = {});

/// Scalar curvature from finite-differenced Christoffel symbols of the
/// given metric. Throws SingularPoint when |det| < 1e-10.
double numeric_scalar_curvature(const MetricFn& metric, double t, double phi,
                                const FDConfig& config = {});
double numeric_scalar_curvature(const MotionParams& params, double t,
                                double phi, const FDConfig& config = {});

}  // namespace equiform
