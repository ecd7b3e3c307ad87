#include <doctest.h>

#include <cmath>
#include <numbers>

#include "equiform/motion.hpp"
#include "equiform/numeric.hpp"
#include "test_util.hpp"

using namespace equiform;

namespace {

MotionParams scaling_only(Rational lambda, Rational s_prime = 0) {
  MotionParams params;
  params.lambda = std::move(lambda);
  params.s_prime = std::move(s_prime);
  return params;
}

MotionParams random_params(std::mt19937_64& rng) {
  MotionParams params;
  params.lambda = equiform::testing::random_coeff(rng, 16, 8);
  if (is_zero(params.lambda)) params.lambda = Rational(1, 2);
  params.s_prime = equiform::testing::random_coeff(rng, 16, 8);
  for (auto& w : params.omega) w = equiform::testing::random_coeff(rng, 16, 8);
  for (auto& b : params.b_prime) b = equiform::testing::random_coeff(rng, 16, 8);
  return params;
}

}  // namespace

TEST_CASE("helix points") {
  auto origin = helix_point(0.7, 0.0);
  CHECK(origin == std::array<double, 7>{1, 0, 0, 0, 0, 0, 0});

  auto quarter = helix_point(0.7, std::numbers::pi / 2);
  CHECK(std::fabs(quarter[0]) < 1e-15);
  CHECK(quarter[1] == doctest::Approx(1.0));
  CHECK(quarter[2] == doctest::Approx(0.7 * std::numbers::pi / 2));

  // one full turn climbs exactly one pitch unit when lambda = 1/(2 pi)
  auto turn = helix_point(1.0 / (2.0 * std::numbers::pi), 2.0 * std::numbers::pi);
  CHECK(std::fabs(turn[0] - 1.0) < 1e-12);
  CHECK(std::fabs(turn[1]) < 1e-12);
  CHECK(std::fabs(turn[2] - 1.0) < 1e-12);
}

TEST_CASE("omega matrix layout") {
  SUBCASE("all zero") {
    MotionParams params = scaling_only(1);
    Mat7 m = omega_matrix(params);
    for (const auto& row : m) {
      for (const auto& entry : row) CHECK(is_zero(entry));
    }
  }
  SUBCASE("omega_1 sits at (1,2)") {
    MotionParams params = scaling_only(1);
    params.omega[0] = 1;
    Mat7 m = omega_matrix(params);
    CHECK(m[0][1] == Rational(1));
    CHECK(m[1][0] == Rational(-1));
    int nonzero = 0;
    for (const auto& row : m) {
      for (const auto& entry : row) {
        if (!is_zero(entry)) ++nonzero;
      }
    }
    CHECK(nonzero == 2);
  }
  SUBCASE("the example slots") {
    MotionParams params = scaling_only(1);
    Rational mu(5, 4);
    params.omega[15] = mu;
    params.omega[19] = mu;
    params.omega[20] = mu;
    Mat7 m = omega_matrix(params);
    CHECK(m[3][4] == mu);
    CHECK(m[4][3] == -mu);
    CHECK(m[4][6] == mu);
    CHECK(m[6][4] == -mu);
    CHECK(m[5][6] == mu);
    CHECK(m[6][5] == -mu);
  }
  SUBCASE("skew-symmetry for random parameters") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      MotionParams params = random_params(rng);
      Mat7 m = omega_matrix(params);
      for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) {
          CHECK(m[i][j] + m[j][i] == Rational(0));
        }
      }
    }
  }
}

TEST_CASE("chart construction") {
  SUBCASE("identity motion sweeps the helix itself") {
    MotionParams params = scaling_only(Rational(2, 3));
    SurfaceChart chart = build_chart(params);
    CHECK(chart.components[0] == TPoly{TrigPoly::cosine(1)});
    CHECK(chart.components[1] == TPoly{TrigPoly::sine(1)});
    CHECK(chart.components[2] == TPoly{TrigPoly::phi().scaled(Rational(2, 3))});
    for (int a = 3; a < 7; ++a) CHECK(chart.components[a].is_zero());
  }
  SUBCASE("the frames coincide at the zero position") {
    std::mt19937_64 rng(32);
    MotionParams params = random_params(rng);
    SurfaceChart chart = build_chart(params);
    CHECK(chart.components[0].at_t0() == TrigPoly::cosine(1));
    CHECK(chart.components[1].at_t0() == TrigPoly::sine(1));
    CHECK(chart.components[2].at_t0() == TrigPoly::phi().scaled(params.lambda));
    for (int a = 3; a < 7; ++a) CHECK(chart.components[a].at_t0().is_zero());
  }
  SUBCASE("third component of the example motion") {
    MotionParams params = scaling_only(Rational(1, 3), Rational(5, 8));
    params.omega[15] = 1;
    params.omega[19] = 1;
    params.omega[20] = 1;
    params.b_prime = {Rational(1), Rational(2), Rational(3), Rational(0),
                      Rational(0), Rational(0), Rational(0)};
    SurfaceChart chart = build_chart(params);
    // X_3 = t b'_3 + lambda phi (1 + s' t)
    TrigPoly lphi = TrigPoly::phi().scaled(params.lambda);
    TPoly expected = TPoly::from_coeffs(
        {lphi, TrigPoly::constant(3) + lphi.scaled(params.s_prime)});
    CHECK(chart.components[2] == expected);
  }
  SUBCASE("degenerate pitch is rejected") {
    MotionParams params;
    params.lambda = 0;
    CHECK_THROWS_AS(build_chart(params), std::invalid_argument);
  }
  SUBCASE("components stay first order with unit phi-content") {
    std::mt19937_64 rng(33);
    MotionParams params = random_params(rng);
    SurfaceChart chart = build_chart(params);
    for (const TPoly& component : chart.components) {
      CHECK(component.degree() <= 1);
      for (const TrigPoly& coeff : component.coeffs()) {
        CHECK(coeff.max_power() <= 1);
        CHECK(coeff.max_freq() <= 1);
      }
    }
  }
}

TEST_CASE("tangent fields") {
  SUBCASE("identity motion has a vanishing time tangent") {
    MotionParams params = scaling_only(Rational(1, 2));
    TangentFields fields = tangent_fields(build_chart(params));
    for (const TPoly& component : fields.x_t) CHECK(component.is_zero());
  }
  SUBCASE("phi tangent at the zero position") {
    std::mt19937_64 rng(34);
    MotionParams params = random_params(rng);
    TangentFields fields = tangent_fields(build_chart(params));
    CHECK(fields.x_phi[0].at_t0() ==
          TrigPoly::sine(1).scaled(Rational(-1)));
    CHECK(fields.x_phi[1].at_t0() == TrigPoly::cosine(1));
    CHECK(fields.x_phi[2].at_t0() == TrigPoly::constant(params.lambda));

    TrigPoly speed_sq;
    for (const TPoly& component : fields.x_phi) {
      TrigPoly at0 = component.at_t0();
      speed_sq += at0 * at0;
    }
    Rational expected = Rational(1) + params.lambda * params.lambda;
    CHECK(speed_sq == TrigPoly::constant(expected));
  }
  SUBCASE("closed forms match exact differentiation") {
    std::mt19937_64 rng(35);
    MotionParams params = random_params(rng);
    SurfaceChart chart = build_chart(params);
    TangentFields fields = tangent_fields(chart);
    Mat7 omega = omega_matrix(params);

    std::array<TrigPoly, 3> helix = {
        TrigPoly::cosine(1), TrigPoly::sine(1),
        TrigPoly::phi().scaled(params.lambda)};
    std::array<TrigPoly, 3> helix_phi = {
        TrigPoly::sine(1).scaled(Rational(-1)), TrigPoly::cosine(1),
        TrigPoly::constant(params.lambda)};

    for (int a = 0; a < 7; ++a) {
      // X_t = (s' I + Omega) x + b'
      TrigPoly velocity = TrigPoly::constant(params.b_prime[a]);
      // X_phi = [I + t (s' I + Omega)] x_phi
      TrigPoly order0;
      TrigPoly order1;
      for (int b = 0; b < 3; ++b) {
        Rational rate = omega[a][b];
        if (a == b) rate += params.s_prime;
        if (!is_zero(rate)) {
          velocity += helix[b].scaled(rate);
          order1 += helix_phi[b].scaled(rate);
        }
        if (a == b) order0 += helix_phi[b];
      }
      CHECK(fields.x_t[a] == TPoly{velocity});
      CHECK(fields.x_phi[a] == TPoly::from_coeffs({order0, order1}));
    }
  }
  SUBCASE("symbolic evaluation agrees with direct matrix arithmetic") {
    std::mt19937_64 rng(36);
    MotionParams params = random_params(rng);
    SurfaceChart chart = build_chart(params);
    for (int sample = 0; sample < 50; ++sample) {
      double t = -1.0 + 0.04 * static_cast<double>(rng() % 51);
      double phi = equiform::testing::random_angle(rng);
      auto direct = numeric_chart_point(params, t, phi);
      for (int a = 0; a < 7; ++a) {
        CHECK(std::fabs(chart.components[a].eval(t, phi) - direct[a]) < 1e-12);
      }
    }
  }
}
