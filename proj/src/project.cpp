#include "equiform/project.hpp"

namespace equiform {

ProjectionMap ProjectionMap::standard() {
  ProjectionMap map;
  map.columns = {{
      {1.0, 0.0, 0.0},
      {0.0, 1.0, 0.0},
      {0.0, 0.0, 1.0},
      {1.0, 1.0, 0.0},
      {1.0, 0.0, 1.0},
      {0.0, 1.0, 1.0},
      {1.0, 1.0, 1.0},
  }};
  return map;
}

std::array<double, 3> axonometric_project(const std::array<double, 7>& point,
                                          const ProjectionMap& map) {
  std::array<double, 3> image{};
  for (int a = 0; a < 7; ++a) {
    for (int k = 0; k < 3; ++k) {
      image[k] += map.columns[a][k] * point[a];
    }
  }
  return image;
}

}  // namespace equiform
