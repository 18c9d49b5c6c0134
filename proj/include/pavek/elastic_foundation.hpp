#pragma once

#include <span>
#include <vector>

#include "pavek/basin.hpp"

// Axisymmetric plate resting on an elastic foundation solved in the Hankel
// domain:  w_hat(xi) = q_hat(xi) / (D xi^4 + 1/Lambda(xi)),  where Lambda is
// the surface compliance of the foundation. Lambda covers both the elastic
// half-space and the finite-depth layer on a rough rigid base.

namespace pavek {

/// Surface compliance of an elastic layer (modulus E, Poisson ratio nu,
/// depth H) on a rough rigid base, per unit pressure amplitude at radial
/// wavenumber xi. H <= 0 or H = inf selects the half-space limit
/// 2 (1 - nu^2) / (E xi).
double foundation_surface_compliance(double xi, double e_modulus, double nu, double depth);

struct ElasticFoundationConfig {
  double depth = 0.0;        // layer depth, m; 0 = half-space
  double rel_tol = 1e-4;     // successive-refinement convergence target
  int max_refinements = 8;
};

/// Deflections of a plate with rigidity D on the elastic foundation at the
/// given radial offsets. Oscillatory Hankel integral evaluated by composite
/// Gauss panels, refined until successive estimates differ by < rel_tol.
std::vector<double> elastic_foundation_deflections(double d_rigidity, double e_modulus, double nu,
                                                   const FwdLoad& load,
                                                   std::span<const double> offsets,
                                                   const ElasticFoundationConfig& cfg = {});

/// Plate on elastic half-space at the standard FWD sensor offsets.
DeflectionBasin halfspace_plate_basin(double h_eq, double e_slab, double nu, double e_subgrade,
                                      double nu_subgrade, const FwdLoad& load,
                                      const ElasticFoundationConfig& cfg = {});

}  // namespace pavek
