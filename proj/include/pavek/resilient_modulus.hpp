#pragma once

#include <stdexcept>

#include "pavek/swcc.hpp"

// Resilient-modulus models for unbound base/subgrade material: the NCHRP
// 1-28A stress-state model, the Pavement-ME moisture adjustment, and the
// suction/water-content model. All stresses and moduli in kPa.

namespace pavek {

struct MrCoefficients {
  double k1;  // > 0
  double k2;
  double k3;

  void validate() const {
    if (!(k1 > 0)) throw std::invalid_argument("MrCoefficients: k1 must be positive");
  }
};

struct StressState {
  double i1;                // bulk stress sigma1+sigma2+sigma3, kPa
  double tau_oct;           // octahedral shear stress, kPa
  double p_a = 101.325;     // atmospheric pressure, kPa

  void validate() const {
    if (!(p_a > 0)) throw std::invalid_argument("StressState: p_a must be positive");
    if (tau_oct < 0) throw std::invalid_argument("StressState: tau_oct must be >= 0");
  }
};

/// Default evaluation stress state for the sensitivity studies. The source
/// tables never state the stress level behind their modulus values, so this
/// is an explicit, overridable input.
inline constexpr StressState kDefaultStress{208.0, 48.6, 101.325};

struct MeMoistureParams {
  double a;       // lower log-ratio asymptote (< 0)
  double b;       // upper log-ratio asymptote (> 0)
  double k_m;     // slope parameter
  double s_opt;   // optimum saturation, fraction
  double mr_opt;  // reference modulus, kPa

  void validate() const {
    if (!(a < 0 && b > 0))
      throw std::invalid_argument("MeMoistureParams: need a < 0 < b");
    if (!(mr_opt > 0)) throw std::invalid_argument("MeMoistureParams: mr_opt must be positive");
  }
};

/// NCHRP 1-28A: M_R = k1 * Pa * (I1/Pa)^k2 * (tau_oct/Pa + 1)^k3.
double mr_nchrp(const MrCoefficients& c, const StressState& s);

/// Pavement-ME moisture ratio: mr_opt * 10^(a + (b-a)/(1+exp[ln(-b/a)+k_m(S-S_opt)])).
double mr_me_ratio(const MeMoistureParams& p, double s_now);

/// Suction model: M_R = k1 * Pa * ((I1 - 3*theta*f*h_m)/Pa)^k2 * (tau_oct/Pa)^k3
/// with h_m the *signed* matric suction (negative). The shear term has no +1
/// guard as printed; `shear_plus_one` switches the NCHRP-style guard back on
/// for tau_oct -> 0 studies.
double mr_suction(const MrCoefficients& c, const StressState& s, const MoistureState& m,
                  bool shear_plus_one = false);

}  // namespace pavek
