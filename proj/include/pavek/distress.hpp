#pragma once

#include <span>
#include <string>
#include <vector>

// MEPDG transverse-cracking and joint-faulting models evaluated over
// user-supplied load-case tables.

namespace pavek {

struct FatigueCase {
  double applied_n;        // load applications
  double stress_psi;       // tensile stress
  double modulus_rupture;  // PCC modulus of rupture, psi
  std::string label;       // age/month/axle/load/dT/path tag, free-form

  void validate() const;
};

struct FaultingMonth {
  double faultmax_in;  // maximum mean joint faulting, in
  double de;           // differential energy for the month
  void validate() const;
};

struct CornerDeflections {
  double loaded_m;
  double unloaded_m;
  double k_pa_per_m;
  void validate() const;
};

/// Fatigue-model calibration constants. C1/C2/C34 are required configuration;
/// the defaults follow the customary MEPDG calibration and are not tied to
/// any one data source.
struct DistressConstants {
  double c1 = 2.0;
  double c2 = 1.22;
  double c34 = 0.005;
};

/// Cracked fraction CRK = 1/(1 + FD^-1.68); the FD = 0 limit is 0.
double crack_fraction(double fatigue_damage);

/// Total cracking percent: union of bottom-up and top-down fractions x 100.
double total_crack(double bottom_up, double top_down);

/// Allowable load applications: N = 10^(C1 (MR/sigma)^C2 + 0.4371).
double allowable_loads(double modulus_rupture_psi, double stress_psi, double c1, double c2);

/// Miner's accumulation FD = sum n_i / N_i.
double miner_damage(std::span<const FatigueCase> cases, double c1, double c2);

/// Differential deformation energy DE = k/2 (d_loaded^2 - d_unloaded^2).
double differential_energy(const CornerDeflections& c);

struct FaultingStep {
  double increment_in;
  double fault_in;  // cumulative
  bool clamped;     // increment hit the FAULTMAX envelope
};

/// Monthly faulting recursion Fault_m = sum C34 (FAULTMAX_{i-1} - Fault_{i-1})^2 DE_i,
/// starting from zero. Overshoot past the envelope is clamped with a flag.
std::vector<FaultingStep> accumulate_faulting(std::span<const FaultingMonth> months, double c34);

}  // namespace pavek
