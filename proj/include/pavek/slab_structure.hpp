#pragma once

#include <optional>
#include <stdexcept>
#include <string>

// Transformed-section mechanics for the partially bonded slab-base composite
// and the Coulomb interface contact parameters. Unit width b = 1 m
// throughout; SI units.

namespace pavek {

struct PavementSection {
  std::string id;          // e.g. SHRP id "27-4034"; empty for synthetic sections
  double h_s;              // slab thickness, m
  double h_b;              // base thickness, m
  double e_slab;           // Pa
  double e_base;           // Pa
  double e_subgrade;       // Pa
  double nu_slab = 0.15;
  double nu_base = 0.35;
  double nu_subgrade = 0.40;
  double delta;            // slab-base bond ratio in [0,1]

  void validate() const {
    if (!(h_s > 0 && h_b > 0))
      throw std::invalid_argument("PavementSection: thicknesses must be positive");
    if (!(e_slab > 0 && e_base > 0 && e_subgrade > 0))
      throw std::invalid_argument("PavementSection: moduli must be positive");
    if (!(delta >= 0 && delta <= 1))
      throw std::invalid_argument("PavementSection: bond ratio must lie in [0,1]");
    for (double nu : {nu_slab, nu_base, nu_subgrade})
      if (!(nu >= 0 && nu < 0.5))
        throw std::invalid_argument("PavementSection: Poisson ratio must lie in [0,0.5)");
  }
};

struct TransformedSection {
  double i_slab;      // slab inertia per unit width, m^3 (in slab-modulus units)
  double i_base;      // modular-ratio transformed base inertia, m^3
  double coupling;    // sum A_i * dbar_i^2 about the full-composite axis, m^3
  double i_tr;        // i_slab + i_base + delta * coupling
  double z_bar;       // neutral-axis depth from slab top for the given delta, m
  double h_eq;        // equivalent slab thickness, m
};

struct ContactParams {
  std::optional<double> mu;  // friction coefficient; empty when delta = 0
  double n_pressure;         // vertical pressure N, Pa
  double tau_max;            // limiting interface shear, Pa
  double k_l;                // horizontal shear stiffness, Pa/m
  double f_slip;             // maximum elastic slip, m
};

/// Composite transformed section for bond ratio sec.delta. The coupling term
/// is evaluated about the full-composite neutral axis so i_tr is exactly
/// linear in delta; z_bar uses delta-weighted first moments (slab centroid at
/// delta = 0, full-composite axis at delta = 1).
TransformedSection transformed_section(const PavementSection& sec);

/// Vertical contact pressure under a point load (Timoshenko half-space):
/// N = 3 P h_s^3 / (2 pi (h_s^2 + a^2)^{5/2}).
double contact_pressure(double p_load, double h_s, double a);

/// Limiting interface shear at radial distance a; linear in delta, zero at
/// delta = 0. z_bar must lie strictly between h_s/2 and h_s + h_b/2.
double interface_shear_capacity(double p_load, double h_s, double h_b, double a, double z_bar,
                                double delta);

/// Full Coulomb-contact parameter set (mu, tau_max, k_l, f_slip) for an FWD
/// load P at radial distance a. At delta = 0 the interface is frictionless:
/// mu is empty and f_slip = 0.
ContactParams contact_params(const PavementSection& sec, double p_load, double a);

}  // namespace pavek
