#pragma once

#include "equiform/errors.hpp"
#include "equiform/motion.hpp"
#include "equiform/rational_expr.hpp"

namespace equiform {

/// First fundamental form of the chart, exact. Coordinates are x1 = t,
/// x2 = phi.
struct MetricField {
  TPoly g11, g12, g22;
  TPoly det;  // g11*g22 - g12^2, maintained alongside
};

/// g11 = X_t.X_t, g12 = X_t.X_phi, g22 = X_phi.X_phi. The t-degrees come
/// out as 0, <= 1 and <= 2 respectively.
MetricField first_fundamental_form(const SurfaceChart& chart);

/// Inject a metric directly (used for convention pins such as the round
/// sphere). The determinant is recomputed.
MetricField make_metric(TPoly g11, TPoly g12, TPoly g22);

/// Christoffel symbols of the second kind, gamma[l][i][j], symmetric in
/// (i, j), all sharing the denominator 2*det.
struct ChristoffelField {
  std::array<std::array<std::array<RationalExpr, 2>, 2>, 2> gamma;
};

/// Throws SingularMetric when det is identically zero.
ChristoffelField christoffel(const MetricField& metric);

struct CurvatureField {
  RationalExpr k;    // K(t, phi); denominator 4*det^3 by construction
  TrigPoly k0_num;   // exact substitution t = 0
  TrigPoly k0_den;
  CoeffTable coeff_num;
  CoeffTable coeff_den;
};

/// Full contraction K = g^{ij} [ d Gamma^l_{ij}/dx_l - d Gamma^l_{il}/dx_j
/// + Gamma^l_{ij} Gamma^m_{lm} - Gamma^m_{il} Gamma^l_{jm} ]. The sign and
/// factor convention is pinned by the unit-sphere test (K = 2).
CurvatureField scalar_curvature(const MetricField& metric,
                                const ChristoffelField& gamma);

/// Numeric bridge over the symbolic pipeline. Throws SingularPoint when
/// |det(t, phi)| < 1e-12.
double curvature_at(const MotionParams& params, double t, double phi);
double curvature_at(const CurvatureField& field, const MetricField& metric,
                    double t, double phi);

}  // namespace equiform
