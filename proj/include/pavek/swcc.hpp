#pragma once

#include <stdexcept>

// Fredlund-Xing soil-water characteristic curve and the 1:1 equilibrium
// suction-depth profile. Suction heads are magnitudes in cm of water unless
// noted; conversion to kPa happens at the module boundary (units.hpp).

namespace pavek {

/// Upper suction bound of the Fredlund-Xing correction factor, cm of water.
inline constexpr double kSwccMaxSuctionCm = 1.021e7;

struct SwccParams {
  double a_f;        // fitting parameter, cm of water head
  double b_f;        // dimensionless
  double c_f;        // dimensionless
  double h_r;        // residual-suction parameter, cm of water head
  double theta_sat;  // saturated volumetric water content, fraction

  void validate() const {
    if (!(a_f > 0) || !(b_f > 0) || !(c_f > 0) || !(h_r > 0))
      throw std::invalid_argument("SwccParams: fitting parameters must be positive");
    if (!(theta_sat > 0 && theta_sat < 1))
      throw std::invalid_argument("SwccParams: theta_sat must lie in (0,1)");
  }
};

/// Equilibrium suction profile: signed pressure head h_ref (cm, negative =
/// suction) anchored at elevation z_ref (cm), unit slope dh/dz = -1.
struct SuctionProfile {
  double z_ref;  // elevation of the moisture-active-zone depth, cm
  double h_ref;  // signed pressure head at z_ref, cm of water (<= 0)

  void validate() const {
    if (h_ref > 0) throw std::invalid_argument("SuctionProfile: h_ref must be <= 0");
  }
};

struct MoistureState {
  double theta;        // volumetric water content, fraction
  double saturation;   // S, fraction in [0,1]
  double suction_kpa;  // matric suction magnitude, kPa
  double f;            // saturation factor, 1 <= f <= 1/theta
};

/// Saturation threshold above which the factor f switches to 1/theta.
inline constexpr double kSaturationThreshold = 0.999;

/// Correction factor C(h) of the SWCC. C(0) = 1, C(1.021e7) = 0,
/// nonincreasing in h.
double swcc_correction(double h_cm, double h_r);

/// Degree of saturation S(h) for suction head h >= 0 (cm of water).
double swcc_saturation(double h_cm, const SwccParams& p);

/// Signed pressure head at elevation z: h(z) = h_ref - (z - z_ref).
double suction_at_elevation(const SuctionProfile& profile, double z_cm);

/// Full moisture state at suction head h (cm): saturation via the SWCC,
/// theta = S * theta_sat, f = 1/theta at/above the saturation threshold
/// else 1.
MoistureState moisture_state(const SwccParams& p, double h_cm);

/// Inverse SWCC: suction head h (cm) with S(h) = target_S, bisection on
/// [0, 1.021e7] to 1e-8 absolute in S. Throws if target_S is unattainable.
double invert_swcc(double target_s, const SwccParams& p);

}  // namespace pavek
