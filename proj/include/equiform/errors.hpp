#pragma once

#include <stdexcept>
#include <string>

namespace equiform {

/// A rational expression was constructed with an identically-zero denominator.
struct ZeroDenominator : std::runtime_error {
  explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

/// The metric determinant is identically zero (degenerate immersion).
struct SingularMetric : std::runtime_error {
  explicit SingularMetric(const std::string& what) : std::runtime_error(what) {}
};

/// A pointwise evaluation hit a (numerically) singular metric.
struct SingularPoint : std::runtime_error {
  explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace equiform
