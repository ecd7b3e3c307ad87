#include <doctest.h>

#include <cmath>

#include "equiform/tpoly.hpp"
#include "test_util.hpp"

using namespace equiform;
using equiform::testing::random_angle;
using equiform::testing::random_trigpoly;

TEST_CASE("t-differentiation shifts the grading") {
  std::mt19937_64 rng(11);
  TrigPoly c0 = random_trigpoly(rng);
  TrigPoly c1 = random_trigpoly(rng);
  TrigPoly c2 = random_trigpoly(rng);
  TPoly poly = TPoly::from_coeffs({c0, c1, c2});
  TPoly expected = TPoly::from_coeffs({c1, c2.scaled(2)});
  CHECK(poly.diff_t() == expected);
}

TEST_CASE("product degrees add") {
  TPoly a = TPoly::from_coeffs({TrigPoly::cosine(1), TrigPoly::constant(2)});
  TPoly b = TPoly::from_coeffs({TrigPoly::phi(), TrigPoly::sine(1)});
  CHECK(a.degree() == 1);
  CHECK(b.degree() == 1);
  CHECK((a * b).degree() == 2);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    TPoly u = TPoly::from_coeffs({random_trigpoly(rng), random_trigpoly(rng)});
    TPoly v = TPoly::from_coeffs({random_trigpoly(rng), random_trigpoly(rng)});
    if (u.is_zero() || v.is_zero()) continue;
    CHECK((u * v).degree() == u.degree() + v.degree());
  }
}

TEST_CASE("trailing zeros are stripped") {
  TPoly poly = TPoly::from_coeffs({TrigPoly::cosine(1), TrigPoly{}, TrigPoly{}});
  CHECK(poly.degree() == 0);
  CHECK((poly - poly).is_zero());
  CHECK((poly - poly).degree() == -1);
}

TEST_CASE("evaluation matches per-term evaluation") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 20; ++i) {
    TrigPoly c0 = random_trigpoly(rng, true);
    TrigPoly c1 = random_trigpoly(rng, true);
    TrigPoly c2 = random_trigpoly(rng, true);
    TPoly poly = TPoly::from_coeffs({c0, c1, c2});
    double t = 0.01 * static_cast<double>(rng() % 100);
    double phi = random_angle(rng);
    double expected = c0.eval(phi) + t * c1.eval(phi) + t * t * c2.eval(phi);
    CHECK(std::fabs(poly.eval(t, phi) - expected) < 1e-12);
  }
}

TEST_CASE("substitutions") {
  TrigPoly c0 = TrigPoly::cosine(1);
  TrigPoly c1 = TrigPoly::sine(2);
  TPoly poly = TPoly::from_coeffs({c0, c1});

  SUBCASE("t = 0 keeps the constant coefficient") {
    CHECK(poly.at_t0() == c0);
  }
  SUBCASE("t -> c t scales the grading") {
    TPoly expected = TPoly::from_coeffs({c0, c1.scaled(Rational(3, 2))});
    CHECK(poly.reparametrize_t(Rational(3, 2)) == expected);
  }
}
