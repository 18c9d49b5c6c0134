#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pavek/basin.hpp"
#include "pavek/slab_structure.hpp"

// Forward model of the full pavement structure under FWD loading: an
// axisymmetric finite-element model with a bending plate for the slab
// (carrying the delta-weighted composite coupling of the transformed
// section) resting on a bounded block of base course over subgrade. The
// bounded domain with a fixed outer wall mirrors the finite extents of the
// reference finite-element pavement models; it is what makes the
// backcalculated k-value respond to stiffening the way field-calibrated
// models report.

namespace pavek {

struct FullStructureConfig {
  double domain_radius = 3.0;   // outer wall radius, m
  double subgrade_depth = 3.0;  // subgrade thickness below the base, m
  int radial_cells = 96;
  int subgrade_cells = 26;
  double radial_grading = 2.6;    // sinh grading strength toward the axis
  double subgrade_grading = 1.5;  // power grading toward the base contact
};

/// Surface deflections of the full structure at the given offsets.
/// The slab enters as a plate with EI = E_slab (I_slab + delta * coupling);
/// the base course and subgrade are continuum layers. e_base_override
/// substitutes a moisture-adjusted base modulus for the section's value.
std::vector<double> full_structure_deflections(const PavementSection& sec, const FwdLoad& load,
                                               std::span<const double> offsets,
                                               std::optional<double> e_base_override = {},
                                               const FullStructureConfig& cfg = {});

/// Basin at the standard FWD sensor offsets.
DeflectionBasin full_structure_basin(const PavementSection& sec, const FwdLoad& load,
                                     std::optional<double> e_base_override = {},
                                     const FullStructureConfig& cfg = {});

}  // namespace pavek
