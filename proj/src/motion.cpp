#include "equiform/motion.hpp"

namespace equiform {

SurfaceChart build_chart(const MotionParams& params) {
  params.validate();
  Mat7 omega = omega_matrix(params);

  // Helix components as TrigPoly: x_1 = cos phi, x_2 = sin phi,
  // x_3 = lambda * phi, the rest zero.
  std::array<TrigPoly, 3> helix = {
      TrigPoly::cosine(1),
      TrigPoly::sine(1),
      TrigPoly::phi().scaled(params.lambda),
  };

  SurfaceChart chart;
  chart.params = params;
  for (int a = 0; a < 7; ++a) {
    // Row a of M(t) = I + t (s' I + Omega), applied to x(phi), plus t b'_a.
    TrigPoly order0;  // coefficient of t^0
    TrigPoly order1;  // coefficient of t^1
    for (int b = 0; b < 3; ++b) {
      Rational velocity = omega[a][b];
      if (a == b) velocity += params.s_prime;
      if (a == b) order0 += helix[b];
      if (!is_zero(velocity)) order1 += helix[b].scaled(velocity);
    }
    order1 += TrigPoly::constant(params.b_prime[a]);
    chart.components[a] = TPoly::from_coeffs({order0, order1});
  }
  return chart;
}

TangentFields tangent_fields(const SurfaceChart& chart) {
  TangentFields fields;
  for (int a = 0; a < 7; ++a) {
    fields.x_t[a] = chart.components[a].diff_t();
    fields.x_phi[a] = chart.components[a].diff_phi();
  }
  return fields;
}

}  // namespace equiform
