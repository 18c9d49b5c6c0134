#pragma once

#include <optional>

#include "pavek/basin.hpp"
#include "pavek/full_structure.hpp"
#include "pavek/resilient_modulus.hpp"
#include "pavek/slab_structure.hpp"
#include "pavek/swcc.hpp"

// The AREA method: four-sensor basin -> basin area -> effective relative
// stiffness length -> deflection coefficient -> modulus of subgrade reaction.
// The regression constants are unit-bound (inches, lbf, pci), so this module
// computes in US customary units internally and converts at the boundary.

namespace pavek {

struct AreaConstants {
  double k1 = 36.0;
  double k2 = 1812.597;
  double k3 = 2.559;
  double inv_k4 = 4.387;   // the exponent applied to the log bracket
  double a = 0.12450;      // deflection-coefficient regression, loading point
  double b = 0.14707;
  double c = 0.07565;
  double sensor_spacing_in = 12.0;
};

struct KValue {
  double pci;
  double pa_per_m;
};

struct AreaChainResult {
  double basin_area_in;   // BA, inches
  double eff_length_in;   // l_e, inches
  double defl_coeff;      // d*, dimensionless
  KValue k;
};

/// Basin area BA = SS/(2 D0) [D0 + 2(D1 + D2) + D3], inches. Requires the
/// standard 4-sensor layout at 0/12/24/36 in; deflections in any common unit.
double basin_area(const DeflectionBasin& basin, const AreaConstants& c = {});

/// Effective relative stiffness length from the basin area, inches.
/// Singular as BA -> 36 (rigid-body basin).
double effective_length(double ba_in, const AreaConstants& c = {});

/// Dimensionless deflection coefficient at the loading point.
double deflection_coefficient(double l_e_in, const AreaConstants& c = {});

/// Full chain: basin (meters) + load (lbf) -> BA, l_e, d*, k.
AreaChainResult k_from_basin(const DeflectionBasin& basin, double p_lbf,
                             const AreaConstants& c = {});

struct ModifiedKOptions {
  StressState stress = kDefaultStress;
  FullStructureConfig structure;
  AreaConstants area;
  MrCoefficients mr_coeffs{1.0, 0.0, 0.0};  // used only when moisture given
  bool shear_plus_one = false;
};

/// End-to-end modified k: moisture state (optional) -> base modulus via the
/// suction model -> full-structure basin under the FWD load (linearly scaled
/// to exactly 9000 lbf before the chain) -> AREA chain. Without a moisture
/// state the section's base modulus is used as-is.
AreaChainResult modified_k(const PavementSection& sec, const std::optional<MoistureState>& m,
                           const FwdLoad& load, const ModifiedKOptions& opt = {});

}  // namespace pavek
