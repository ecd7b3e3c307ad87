// Floating-point re-derivation of the metric and scalar curvature by
// finite differences. This translation unit deliberately stays away from
// the symbolic kernel (no trigpoly/tpoly/geometry includes): agreement
// with the exact pipeline is evidence, not tautology.

#include "equiform/numeric.hpp"

#include <cmath>

namespace equiform {

namespace {

// Double-precision snapshot of the motion; velocity[a][b] holds
// s' I + Omega.
struct DoubleMotion {
  double lambda = 0.0;
  double velocity[7][7] = {};
  double b_prime[7] = {};
};

DoubleMotion snapshot(const MotionParams& params) {
  DoubleMotion motion;
  motion.lambda = to_double(params.lambda);
  Mat7 omega = omega_matrix(params);
  double s_prime = to_double(params.s_prime);
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      motion.velocity[a][b] = to_double(omega[a][b]) + (a == b ? s_prime : 0.0);
    }
    motion.b_prime[a] = to_double(params.b_prime[a]);
  }
  return motion;
}

std::array<double, 7> chart_point(const DoubleMotion& motion, double t,
                                  double phi) {
  const std::array<double, 7> x = helix_point(motion.lambda, phi);
  std::array<double, 7> result{};
  for (int a = 0; a < 7; ++a) {
    double rate = motion.b_prime[a];
    for (int b = 0; b < 3; ++b) rate += motion.velocity[a][b] * x[b];
    result[a] = x[a] + t * rate;
  }
  return result;
}

// Central first difference of a scalar function, optionally with one
// Richardson extrapolation level (fourth order).
template <typename F>
double central_d1(const F& f, double x, double h, bool richardson) {
  auto stencil = [&](double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
  };
  double coarse = stencil(h);
  if (!richardson) return coarse;
  double fine = stencil(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

template <typename F>
double central_d2(const F& f, double x, double h, bool richardson) {
  auto stencil = [&](double step) {
    return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
  };
  double coarse = stencil(h);
  if (!richardson) return coarse;
  double fine = stencil(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

template <typename F>
double central_d2_mixed(const F& f, double x, double y, double h,
                        bool richardson) {
  auto stencil = [&](double step) {
    return (f(x + step, y + step) - f(x + step, y - step) -
            f(x - step, y + step) + f(x - step, y - step)) /
           (4.0 * step * step);
  };
  double coarse = stencil(h);
  if (!richardson) return coarse;
  double fine = stencil(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

Metric2 metric_from_chart(const DoubleMotion& motion, double t, double phi,
                          const FDConfig& config) {
  std::array<double, 7> x_t{};
  std::array<double, 7> x_phi{};
  for (int a = 0; a < 7; ++a) {
    x_t[a] = central_d1(
        [&](double s) { return chart_point(motion, s, phi)[a]; }, t,
        config.step, config.richardson);
    x_phi[a] = central_d1(
        [&](double p) { return chart_point(motion, t, p)[a]; }, phi,
        config.step, config.richardson);
  }
  Metric2 metric;
  for (int a = 0; a < 7; ++a) {
    metric.g11 += x_t[a] * x_t[a];
    metric.g12 += x_t[a] * x_phi[a];
    metric.g22 += x_phi[a] * x_phi[a];
  }
  return metric;
}

// Metric derivatives use steps well above the chart-level step: the metric
// carries the chart's rounding noise, and second differences divide by the
// square of the step. These values balance truncation against that noise
// for double precision.
constexpr double kFirstDerivStep = 3e-3;
constexpr double kSecondDerivStep = 1.5e-2;

double component(const Metric2& metric, int i, int j) {
  if (i == 0 && j == 0) return metric.g11;
  if (i == 1 && j == 1) return metric.g22;
  return metric.g12;
}

}  // namespace

void FDConfig::validate() const {
  if (!(step > 0.0) || step > 1e-3) {
    throw std::invalid_argument("FDConfig.step must lie in (0, 1e-3]");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("FDConfig.tol must be positive");
  }
}

std::array<double, 7> numeric_chart_point(const MotionParams& params, double t,
                                          double phi) {
  return chart_point(snapshot(params), t, phi);
}

Metric2 numeric_metric(const MotionParams& params, double t, double phi,
                       const FDConfig& config) {
  return metric_from_chart(snapshot(params), t, phi, config);
}

MetricFn chart_metric_fn(const MotionParams& params, const FDConfig& config) {
  DoubleMotion motion = snapshot(params);
  return [motion, config](double t, double phi) {
    return metric_from_chart(motion, t, phi, config);
  };
}

double numeric_scalar_curvature(const MetricFn& metric, double t, double phi,
                                const FDConfig& config) {
  const bool rich = config.richardson;
  Metric2 g0 = metric(t, phi);
  double det = g0.det();
  if (std::fabs(det) < 1e-10) {
    throw SingularPoint("numeric metric is singular at the requested point");
  }

  double ginv[2][2] = {{g0.g22 / det, -g0.g12 / det},
                       {-g0.g12 / det, g0.g11 / det}};

  auto metric_component = [&](int i, int j, double tt, double pp) {
    return component(metric(tt, pp), i, j);
  };

  // dg[k][i][j] = d g_ij / d x_k with x_0 = t, x_1 = phi.
  double dg[2][2][2];
  // d2g[k][l][i][j] = d^2 g_ij / d x_k d x_l.
  double d2g[2][2][2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = i; j < 2; ++j) {
      auto slice_t = [&](double s) { return metric_component(i, j, s, phi); };
      auto slice_p = [&](double p) { return metric_component(i, j, t, p); };
      dg[0][i][j] = central_d1(slice_t, t, kFirstDerivStep, rich);
      dg[1][i][j] = central_d1(slice_p, phi, kFirstDerivStep, rich);
      d2g[0][0][i][j] = central_d2(slice_t, t, kSecondDerivStep, rich);
      d2g[1][1][i][j] = central_d2(slice_p, phi, kSecondDerivStep, rich);
      d2g[0][1][i][j] = central_d2_mixed(
          [&](double s, double p) { return metric_component(i, j, s, p); }, t,
          phi, kSecondDerivStep, rich);
      d2g[1][0][i][j] = d2g[0][1][i][j];
      for (int k = 0; k < 2; ++k) {
        dg[k][j][i] = dg[k][i][j];
        for (int l = 0; l < 2; ++l) d2g[k][l][j][i] = d2g[k][l][i][j];
      }
    }
  }

  // d ginv / d x_k = -ginv (d g / d x_k) ginv.
  double dginv[2][2][2];
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      for (int m = 0; m < 2; ++m) {
        double total = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            total -= ginv[l][a] * dg[k][a][b] * ginv[b][m];
          }
        }
        dginv[k][l][m] = total;
      }
    }
  }

  double gamma[2][2][2];
  double dgamma[2][2][2][2];  // dgamma[k][l][i][j] = d Gamma^l_ij / d x_k
  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double total = 0.0;
        for (int m = 0; m < 2; ++m) {
          total += ginv[l][m] * (dg[i][j][m] + dg[j][i][m] - dg[m][i][j]);
        }
        gamma[l][i][j] = 0.5 * total;
        for (int k = 0; k < 2; ++k) {
          double chain = 0.0;
          for (int m = 0; m < 2; ++m) {
            chain += dginv[k][l][m] * (dg[i][j][m] + dg[j][i][m] - dg[m][i][j]);
            chain += ginv[l][m] * (d2g[k][i][j][m] + d2g[k][j][i][m] -
                                   d2g[k][m][i][j]);
          }
          dgamma[k][l][i][j] = 0.5 * chain;
        }
      }
    }
  }

  double curvature = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      double ricci = 0.0;
      for (int l = 0; l < 2; ++l) {
        ricci += dgamma[l][l][i][j] - dgamma[j][l][i][l];
        for (int m = 0; m < 2; ++m) {
          ricci += gamma[l][i][j] * gamma[m][l][m] -
                   gamma[m][i][l] * gamma[l][j][m];
        }
      }
      curvature += ginv[i][j] * ricci;
    }
  }
  return curvature;
}

double numeric_scalar_curvature(const MotionParams& params, double t,
                                double phi, const FDConfig& config) {
  // The curvature path differences the metric twice, so it wants metric
  // samples with the smallest rounding noise. That means the coarsest
  // permitted chart step, with a Richardson level soaking up the
  // truncation; config.step keeps governing the plain metric contract.
  FDConfig chart_config = config;
  chart_config.step = 1e-3;
  chart_config.richardson = true;
  return numeric_scalar_curvature(chart_metric_fn(params, chart_config), t,
                                  phi, config);
}

}  // namespace equiform
