#pragma once

#include <array>
#include <stdexcept>
#include <vector>

// FWD load and deflection-basin value types shared by the forward solvers
// and the backcalculation chain.

namespace pavek {

/// Standard four-sensor FWD layout: 0, 30.48, 60.96, 91.44 cm offsets.
inline constexpr std::array<double, 4> kStandardSensorOffsets{0.0, 0.3048, 0.6096, 0.9144};

struct FwdLoad {
  double magnitude = 40000.0;  // N
  double radius = 0.15;        // loading-plate radius, m

  double pressure() const { return magnitude / (3.14159265358979323846 * radius * radius); }

  void validate() const {
    if (!(magnitude > 0 && radius > 0))
      throw std::invalid_argument("FwdLoad: magnitude and radius must be positive");
  }
};

struct DeflectionBasin {
  std::vector<double> offsets;      // radial distances, m, strictly increasing from 0
  std::vector<double> deflections;  // vertical deflections, m (positive down)

  void validate() const {
    if (offsets.size() != deflections.size())
      throw std::invalid_argument("DeflectionBasin: offsets/deflections size mismatch");
    if (offsets.empty() || offsets.front() != 0.0)
      throw std::invalid_argument("DeflectionBasin: offsets must start at 0");
    for (size_t i = 1; i < offsets.size(); ++i)
      if (!(offsets[i] > offsets[i - 1]))
        throw std::invalid_argument("DeflectionBasin: offsets must be strictly increasing");
  }
};

}  // namespace pavek
