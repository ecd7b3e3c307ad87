// Randomized kernel soundness suites: ring axioms, Leibniz rule,
// evaluation homomorphism and canonical-form invariants.

#include <doctest.h>

#include <cmath>

#include "equiform/trigpoly.hpp"
#include "test_util.hpp"

using namespace equiform;
using equiform::testing::random_angle;
using equiform::testing::random_trigpoly;

namespace {

constexpr int kTrials = 1000;

void check_canonical(const TrigPoly& value) {
  for (const auto& [key, coeff] : value.terms()) {
    CHECK(key.power >= 0);
    CHECK(key.freq >= 0);
    CHECK_FALSE(is_zero(coeff));
    // sin(0 phi) must never be observable
    CHECK_FALSE((key.kind == Kind::Sin && key.freq == 0));
  }
}

}  // namespace

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(0x5eed0001ULL);
  for (int i = 0; i < kTrials; ++i) {
    TrigPoly a = random_trigpoly(rng);
    TrigPoly b = random_trigpoly(rng);
    TrigPoly c = random_trigpoly(rng);

    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("Leibniz rule holds exactly") {
  std::mt19937_64 rng(0x5eed0002ULL);
  for (int i = 0; i < kTrials; ++i) {
    TrigPoly a = random_trigpoly(rng);
    TrigPoly b = random_trigpoly(rng);
    CHECK((a * b).diff() == a.diff() * b + a * b.diff());
  }
}

TEST_CASE("evaluation is a homomorphism up to rounding") {
  std::mt19937_64 rng(0x5eed0003ULL);
  for (int i = 0; i < kTrials; ++i) {
    TrigPoly a = random_trigpoly(rng, /*bounded=*/true);
    TrigPoly b = random_trigpoly(rng, /*bounded=*/true);
    double phi = random_angle(rng);
    CHECK(std::fabs((a + b).eval(phi) - (a.eval(phi) + b.eval(phi))) < 1e-12);
    CHECK(std::fabs((a * b).eval(phi) - a.eval(phi) * b.eval(phi)) < 1e-12);
  }
}

TEST_CASE("canonical form is stable under operation order") {
  std::mt19937_64 rng(0x5eed0004ULL);
  for (int i = 0; i < kTrials; ++i) {
    TrigPoly a = random_trigpoly(rng);
    TrigPoly b = random_trigpoly(rng);
    TrigPoly c = random_trigpoly(rng);

    // same expression along two different operation orders
    TrigPoly via_factor = (a + b) * c;
    TrigPoly via_expand = a * c + b * c;
    CHECK(via_factor.terms() == via_expand.terms());

    check_canonical(via_factor);
    check_canonical(a * b);
    check_canonical(a - b);
    check_canonical(a.diff());
  }
}

TEST_CASE("squares expand the way trig identities demand") {
  // (cos + sin)^2 == 1 + sin 2phi, assembled two ways
  TrigPoly tfn = TrigPoly::cosine(1) + TrigPoly::sine(1);
  TrigPoly square = tfn * tfn;
  TrigPoly expected = TrigPoly::constant(1) + TrigPoly::sine(2);
  CHECK(square == expected);

  TrigPoly alt = TrigPoly::cosine(1) * TrigPoly::cosine(1) +
                 TrigPoly::sine(1) * TrigPoly::sine(1) +
                 (TrigPoly::sine(1) * TrigPoly::cosine(1)).scaled(2);
  CHECK(alt == expected);
}
