#pragma once

#include <array>

#include "equiform/rational.hpp"

namespace equiform {

/// The 30 scalar parameters of a first-order equiform motion at the zero
/// position: helix pitch lambda, scaling derivative s', the 21 independent
/// entries of the skew-symmetric angular matrix, and the translation
/// derivative b'.
struct MotionParams {
  Rational lambda;
  Rational s_prime;
  std::array<Rational, 21> omega{};   // omega[0] holds omega_1
  std::array<Rational, 7> b_prime{};  // b_prime[0] holds b'_1

  /// lambda == 0 degenerates the helix to a circle and is rejected.
  void validate() const;
};

using Mat7 = std::array<std::array<Rational, 7>, 7>;

/// The skew-symmetric matrix Omega. Upper-triangle entries are
/// omega_1..omega_21 laid out row-major, (1,2) = +omega_1 through
/// (6,7) = +omega_21; the lower triangle is the negative transpose.
Mat7 omega_matrix(const MotionParams& params);

/// Point of the unit-cylinder helix (cos phi, sin phi, lambda*phi, 0,...,0).
std::array<double, 7> helix_point(double lambda, double phi);

}  // namespace equiform
