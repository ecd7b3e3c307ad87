#include "equiform/motion_params.hpp"

#include <cmath>
#include <stdexcept>

namespace equiform {

void MotionParams::validate() const {
  if (is_zero(lambda)) {
    throw std::invalid_argument(
        "lambda must be nonzero: the moving curve is a helix, not a circle");
  }
}

Mat7 omega_matrix(const MotionParams& params) {
  Mat7 m{};
  int next = 0;
  for (int row = 0; row < 7; ++row) {
    for (int col = row + 1; col < 7; ++col) {
      m[row][col] = params.omega[next];
      m[col][row] = -params.omega[next];
      ++next;
    }
  }
  return m;
}

std::array<double, 7> helix_point(double lambda, double phi) {
  return {std::cos(phi), std::sin(phi), lambda * phi, 0.0, 0.0, 0.0, 0.0};
}

}  // namespace equiform
