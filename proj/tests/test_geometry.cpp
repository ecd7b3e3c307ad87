#include <doctest.h>

#include <cmath>

#include "equiform/analysis.hpp"
#include "equiform/geometry.hpp"
#include "test_util.hpp"

using namespace equiform;

namespace {

MetricField sphere_metric() {
  // Unit 2-sphere with colatitude phi and longitude t:
  // g11 = sin^2 phi = 1/2 - 1/2 cos 2phi, g12 = 0, g22 = 1.
  TrigPoly g11 = TrigPoly::constant(Rational(1, 2)) +
                 TrigPoly::term(0, 2, Kind::Cos, Rational(-1, 2));
  return make_metric(TPoly{g11}, TPoly{}, TPoly::constant(1));
}

double eval_metric(const MetricField& metric, int i, int j, double t,
                   double phi) {
  const TPoly& entry = (i == 0 && j == 0)   ? metric.g11
                       : (i == 1 && j == 1) ? metric.g22
                                            : metric.g12;
  return entry.eval(t, phi);
}

}  // namespace

TEST_CASE("first fundamental form") {
  SUBCASE("identity motion") {
    MotionParams params;
    params.lambda = Rational(3, 4);
    MetricField metric = first_fundamental_form(build_chart(params));
    CHECK(metric.g11.is_zero());
    CHECK(metric.g12.is_zero());
    CHECK(metric.g22 == TPoly::constant(Rational(25, 16)));
    CHECK(metric.det.is_zero());
    CHECK_THROWS_AS(christoffel(metric), SingularMetric);
  }
  SUBCASE("t-degrees and the g22 profile") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      MotionParams params = draw_params(rng);
      MetricField metric = first_fundamental_form(build_chart(params));
      CHECK(metric.g11.degree() <= 0);
      CHECK(metric.g12.degree() <= 1);
      CHECK(metric.g22.degree() <= 2);

      Rational one_plus_l2 = Rational(1) + params.lambda * params.lambda;
      CHECK(metric.g22.coeff(0) == TrigPoly::constant(one_plus_l2));
      CHECK(metric.g22.coeff(1) ==
            TrigPoly::constant(Rational(2) * params.s_prime * one_plus_l2));
    }
  }
}

TEST_CASE("christoffel symbols") {
  SUBCASE("flat constant metric") {
    MetricField metric = make_metric(TPoly::constant(1), TPoly{},
                                     TPoly::constant(Rational(13, 9)));
    ChristoffelField gamma = christoffel(metric);
    for (int l = 0; l < 2; ++l) {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          CHECK(gamma.gamma[l][i][j].is_zero());
        }
      }
    }
    CurvatureField field = scalar_curvature(metric, gamma);
    CHECK(field.k.is_zero());
  }
  SUBCASE("symmetry in the lower indices") {
    std::mt19937_64 rng(42);
    MotionParams params = draw_params(rng);
    MetricField metric = first_fundamental_form(build_chart(params));
    ChristoffelField gamma = christoffel(metric);
    for (int l = 0; l < 2; ++l) {
      CHECK(gamma.gamma[l][0][1].equals(gamma.gamma[l][1][0]));
      CHECK(gamma.gamma[l][0][1].den() == metric.det.scaled(2));
    }
  }
  SUBCASE("finite differences of the metric reproduce the symbols") {
    std::mt19937_64 rng(43);
    MotionParams params = draw_params(rng);
    MetricField metric = first_fundamental_form(build_chart(params));
    ChristoffelField gamma = christoffel(metric);

    const double step = 1e-5;
    for (int sample = 0; sample < 5; ++sample) {
      double t = 0.02 * static_cast<double>(rng() % 11);
      double phi = equiform::testing::random_angle(rng);
      double det = metric.det.eval(t, phi);
      if (std::fabs(det) < 1e-3) continue;

      double g[2][2] = {{eval_metric(metric, 0, 0, t, phi),
                         eval_metric(metric, 0, 1, t, phi)},
                        {eval_metric(metric, 0, 1, t, phi),
                         eval_metric(metric, 1, 1, t, phi)}};
      double ginv[2][2] = {{g[1][1] / det, -g[0][1] / det},
                           {-g[0][1] / det, g[0][0] / det}};
      double dg[2][2][2];
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          dg[0][i][j] = (eval_metric(metric, i, j, t + step, phi) -
                         eval_metric(metric, i, j, t - step, phi)) /
                        (2 * step);
          dg[1][i][j] = (eval_metric(metric, i, j, t, phi + step) -
                         eval_metric(metric, i, j, t, phi - step)) /
                        (2 * step);
        }
      }
      for (int l = 0; l < 2; ++l) {
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            double expected = 0.0;
            for (int m = 0; m < 2; ++m) {
              expected += 0.5 * ginv[l][m] *
                          (dg[i][j][m] + dg[j][i][m] - dg[m][i][j]);
            }
            CHECK(std::fabs(gamma.gamma[l][i][j].eval(t, phi) - expected) <
                  1e-6);
          }
        }
      }
    }
  }
}

TEST_CASE("scalar curvature convention is pinned by the sphere") {
  MetricField metric = sphere_metric();
  CurvatureField field = scalar_curvature(metric, christoffel(metric));
  // K == 2 exactly: num - 2 den == 0 in the ring
  CHECK((field.k.num() - field.k.den().scaled(2)).is_zero());
  CHECK((field.k0_num - field.k0_den.scaled(2)).is_zero());
  // and numerically, away from the poles
  CHECK(field.k.eval(0.3, 1.1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("zero-curvature family") {
  std::mt19937_64 rng(44);
  DrawOptions options;
  options.lambda_positive = true;
  options.s_prime_positive = true;
  for (int k = 0; k < 15; ++k) options.omega_zero[k] = true;

  MotionParams params = draw_params(rng, options);
  MetricField metric = first_fundamental_form(build_chart(params));
  CurvatureField field = scalar_curvature(metric, christoffel(metric));
  CHECK(field.k0_num.is_zero());

  for (int sample = 0; sample < 10; ++sample) {
    double t = 0.05 * static_cast<double>(rng() % 11);
    double phi = equiform::testing::random_angle(rng);
    if (std::fabs(metric.det.eval(t, phi)) < 1e-6) continue;
    CHECK(std::fabs(curvature_at(field, metric, t, phi)) < 1e-9);
  }
}

TEST_CASE("curvature_at") {
  SUBCASE("generic motions have nonconstant curvature") {
    std::mt19937_64 rng(45);
    DrawOptions options;
    options.s_prime_nonzero = true;
    options.omega_nonzero[1] = true;
    MotionParams params = draw_params(rng, options);
    double k1 = curvature_at(params, 0.0, 0.7);
    double k2 = curvature_at(params, 0.0, 2.3);
    CHECK(std::fabs(k1 - k2) > 1e-9);
  }
  SUBCASE("identity motion is singular") {
    MotionParams params;
    params.lambda = 1;
    CHECK_THROWS_AS(curvature_at(params, 0.1, 0.4), SingularPoint);
  }
}

TEST_CASE("curvature is invariant under t-reparametrization") {
  std::mt19937_64 rng(46);
  MotionParams params = draw_params(rng);
  MetricField metric = first_fundamental_form(build_chart(params));
  CurvatureField field = scalar_curvature(metric, christoffel(metric));

  const Rational c(5, 3);
  const double c_d = to_double(c);
  // metric of X(c t, phi): g11 scales by c^2, g12 by c, g22 unchanged
  MetricField scaled = make_metric(
      metric.g11.reparametrize_t(c).scaled(c * c),
      metric.g12.reparametrize_t(c).scaled(c),
      metric.g22.reparametrize_t(c));
  CurvatureField scaled_field = scalar_curvature(scaled, christoffel(scaled));

  for (int sample = 0; sample < 10; ++sample) {
    double t = -0.2 + 0.04 * static_cast<double>(rng() % 11);
    double phi = equiform::testing::random_angle(rng);
    if (std::fabs(scaled.det.eval(t, phi)) < 1e-3) continue;
    double lhs = scaled_field.k.eval(t, phi);
    double rhs = field.k.eval(c_d * t, phi);
    CHECK(std::fabs(lhs - rhs) < 1e-9);
  }
}

TEST_CASE("determinant positivity at regular samples") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 5; ++trial) {
    DrawOptions options;
    options.s_prime_nonzero = true;
    MotionParams params = draw_params(rng, options);
    MetricField metric = first_fundamental_form(build_chart(params));
    for (int sample = 0; sample < 20; ++sample) {
      double t = -0.3 + 0.06 * static_cast<double>(rng() % 11);
      double phi = equiform::testing::random_angle(rng);
      double det = metric.det.eval(t, phi);
      if (std::fabs(det) < 1e-6) continue;  // skip near-singular samples
      CHECK(det > 0.0);
    }
  }
}
