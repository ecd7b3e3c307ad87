#pragma once

#include <array>

namespace equiform {

/// Linear axonometric map E^7 -> E^3. The first three basis vectors map to
/// the standard 3-basis; E_4..E_7 map to the prescribed images
/// (1,1,0), (1,0,1), (0,1,1), (1,1,1) by default.
struct ProjectionMap {
  std::array<std::array<double, 3>, 7> columns;

  static ProjectionMap standard();
};

std::array<double, 3> axonometric_project(const std::array<double, 7>& point,
                                          const ProjectionMap& map);

}  // namespace equiform
