#pragma once

#include <span>
#include <vector>

#include "pavek/basin.hpp"

// Axisymmetric thin plate on a dense-liquid (Winkler) foundation under a
// uniform circular load. The product solver is a finite-difference scheme on
// the split system  M = lap(w),  D lap(M) + k w = q  with nodal spring
// reactions, domain truncated at 20 l with a clamped far edge.

namespace pavek {

struct WinklerPlateConfig {
  int nodes = 4000;          // radial grid nodes (excluding the axis node)
  double domain_factor = 20.0;  // domain radius in multiples of l = (D/k)^(1/4)
  double max_radius = 0.0;   // optional hard cap on the domain radius, m (0 = none)
};

/// Flexural rigidity D = E h^3 / (12 (1 - nu^2)).
double flexural_rigidity(double e_modulus, double thickness, double nu);

/// Deflections of the plate (rigidity D) on foundation modulus k (Pa/m) at
/// the given radial offsets.
std::vector<double> winkler_plate_deflections(double d_rigidity, double k_foundation,
                                              const FwdLoad& load, std::span<const double> offsets,
                                              const WinklerPlateConfig& cfg = {});

/// Convenience wrapper building a DeflectionBasin at the standard FWD sensor
/// offsets from (h_eq, E, nu, k).
DeflectionBasin winkler_plate_basin(double h_eq, double e_slab, double nu, double k_foundation,
                                    const FwdLoad& load, const WinklerPlateConfig& cfg = {});

}  // namespace pavek
