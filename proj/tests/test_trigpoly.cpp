#include <doctest.h>

#include <cmath>

#include "equiform/trigpoly.hpp"
#include "test_util.hpp"

using namespace equiform;
using equiform::testing::random_angle;
using equiform::testing::random_trigpoly;

namespace {
TrigPoly term(int power, int freq, Kind kind, Rational coeff = Rational(1)) {
  return TrigPoly::term(power, freq, kind, std::move(coeff));
}
}  // namespace

TEST_CASE("addition") {
  TrigPoly cos1 = TrigPoly::cosine(1);

  SUBCASE("additive inverse cancels to the empty map") {
    CHECK((cos1 + (-cos1)).is_zero());
  }
  SUBCASE("doubling a term") {
    TrigPoly phicos = term(1, 1, Kind::Cos);
    CHECK(phicos + phicos == term(1, 1, Kind::Cos, 2));
  }
  SUBCASE("merging across terms") {
    TrigPoly lhs = TrigPoly::cosine(2) + TrigPoly::sine(1);
    TrigPoly expected = TrigPoly::cosine(2) + term(0, 1, Kind::Sin, 2);
    CHECK(lhs + TrigPoly::sine(1) == expected);
  }
}

TEST_CASE("product-to-sum multiplication") {
  SUBCASE("cos^2 = 1/2 + 1/2 cos 2phi") {
    TrigPoly expected = TrigPoly::constant(Rational(1, 2)) +
                        term(0, 2, Kind::Cos, Rational(1, 2));
    CHECK(TrigPoly::cosine(1) * TrigPoly::cosine(1) == expected);
  }
  SUBCASE("sin cos = 1/2 sin 2phi") {
    CHECK(TrigPoly::sine(1) * TrigPoly::cosine(1) ==
          term(0, 2, Kind::Sin, Rational(1, 2)));
  }
  SUBCASE("(phi cos 2phi)(phi^2 sin 3phi) = 1/2 phi^3 sin 5phi + 1/2 phi^3 sin phi") {
    TrigPoly a = term(1, 2, Kind::Cos);
    TrigPoly b = term(2, 3, Kind::Sin);
    TrigPoly expected = term(3, 5, Kind::Sin, Rational(1, 2)) +
                        term(3, 1, Kind::Sin, Rational(1, 2));
    TrigPoly product = a * b;
    CHECK(product == expected);

    // cross-check through the evaluation homomorphism
    std::mt19937_64 rng(2026);
    for (int i = 0; i < 20; ++i) {
      double phi = random_angle(rng);
      CHECK(std::fabs(product.eval(phi) - a.eval(phi) * b.eval(phi)) < 1e-12);
    }
  }
  SUBCASE("negative frequencies normalize on construction") {
    CHECK(term(0, -2, Kind::Cos) == TrigPoly::cosine(2));
    CHECK(term(0, -2, Kind::Sin) == term(0, 2, Kind::Sin, Rational(-1)));
    CHECK(term(3, 0, Kind::Sin).is_zero());
  }
}

TEST_CASE("differentiation") {
  SUBCASE("d/dphi cos = -sin") {
    CHECK(TrigPoly::cosine(1).diff() == term(0, 1, Kind::Sin, Rational(-1)));
  }
  SUBCASE("d/dphi phi = 1") {
    CHECK(TrigPoly::phi().diff() == TrigPoly::constant(1));
  }
  SUBCASE("product rule on phi^2 sin 3phi") {
    TrigPoly expected = term(1, 3, Kind::Sin, 2) + term(2, 3, Kind::Cos, 3);
    CHECK(term(2, 3, Kind::Sin).diff() == expected);
  }
}

TEST_CASE("evaluation") {
  CHECK(TrigPoly::cosine(1).eval(0.0) == doctest::Approx(1.0));
  CHECK((TrigPoly::phi(2) + TrigPoly::sine(1)).eval(0.0) ==
        doctest::Approx(0.0));

  SUBCASE("multiplicative homomorphism on random bounded instances") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
      TrigPoly a = random_trigpoly(rng, /*bounded=*/true);
      TrigPoly b = random_trigpoly(rng, /*bounded=*/true);
      double phi = random_angle(rng);
      double lhs = (a * b).eval(phi);
      double rhs = a.eval(phi) * b.eval(phi);
      CHECK(std::fabs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("coefficient extraction") {
  SUBCASE("zero polynomial extracts to an empty table") {
    CoeffTable table = TrigPoly{}.extract_coeffs();
    CHECK(table.empty());
    CHECK(table.max_power == 0);
    CHECK(table.max_freq == 0);
  }
  SUBCASE("single term") {
    CoeffTable table = term(4, 6, Kind::Cos, 3).extract_coeffs();
    CHECK(table.entries.size() == 1);
    CHECK(table.value(4, 6, Kind::Cos) == Rational(3));
    CHECK(table.max_power == 4);
    CHECK(table.max_freq == 6);
  }
  SUBCASE("extraction is lossless") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
      TrigPoly a = random_trigpoly(rng);
      CHECK(a.extract_coeffs().entries == a.terms());
    }
  }
}
