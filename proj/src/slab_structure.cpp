#include "pavek/slab_structure.hpp"

#include <cmath>
#include <numbers>

namespace pavek {

TransformedSection transformed_section(const PavementSection& sec) {
  sec.validate();
  const double n = sec.e_base / sec.e_slab;  // modular ratio
  const double a_s = sec.h_s;                // areas per unit width
  const double a_b = n * sec.h_b;
  const double c_s = sec.h_s / 2.0;
  const double c_b = sec.h_s + sec.h_b / 2.0;

  // Full-composite neutral axis and the parallel-axis coupling term.
  const double z_full = (a_s * c_s + a_b * c_b) / (a_s + a_b);
  const double coupling =
      a_s * (z_full - c_s) * (z_full - c_s) + a_b * (c_b - z_full) * (c_b - z_full);

  TransformedSection t;
  t.i_slab = sec.h_s * sec.h_s * sec.h_s / 12.0;
  t.i_base = n * sec.h_b * sec.h_b * sec.h_b / 12.0;
  t.coupling = coupling;
  t.i_tr = t.i_slab + t.i_base + sec.delta * coupling;
  t.z_bar = (a_s * c_s + sec.delta * a_b * c_b) / (a_s + sec.delta * a_b);
  t.h_eq = std::cbrt(12.0 * t.i_tr * (1.0 - sec.nu_slab * sec.nu_slab));
  return t;
}

double contact_pressure(double p_load, double h_s, double a) {
  if (!(h_s > 0)) throw std::invalid_argument("contact_pressure: slab thickness must be positive");
  const double d2 = h_s * h_s + a * a;
  return 3.0 * p_load * h_s * h_s * h_s / (2.0 * std::numbers::pi * d2 * d2 * std::sqrt(d2));
}

double interface_shear_capacity(double p_load, double h_s, double h_b, double a, double z_bar,
                                double delta) {
  if (delta == 0.0) return 0.0;
  if (!(z_bar > h_s / 2.0 && z_bar < h_s + h_b / 2.0))
    throw std::domain_error("interface_shear_capacity: z_bar at a singular value");
  const double d2 = h_s * h_s + a * a;
  const double radial = a * h_s * h_s / (d2 * d2 * std::sqrt(d2));
  const double section = h_b * (h_s + h_b / 2.0 - z_bar) / (h_s * (z_bar - h_s / 2.0));
  return delta * 3.0 * p_load / (2.0 * std::numbers::pi) * radial * section;
}

ContactParams contact_params(const PavementSection& sec, double p_load, double a) {
  sec.validate();
  if (!(sec.nu_base > 0))
    throw std::invalid_argument("contact_params: shear stiffness is singular at nu_base = 0");

  ContactParams cp;
  cp.n_pressure = contact_pressure(p_load, sec.h_s, a);

  const double g = sec.e_base / (2.0 * (1.0 + sec.nu_base));
  const double l =
      std::cbrt(4.0 * sec.h_b * sec.h_b * sec.h_b * sec.nu_base / std::numbers::pi);
  cp.k_l = std::numbers::pi * g / (l * sec.nu_base);

  if (sec.delta == 0.0) {
    cp.mu = std::nullopt;  // unbonded interface: friction undefined
    cp.tau_max = 0.0;
    cp.f_slip = 0.0;
    return cp;
  }
  const double z_bar = transformed_section(sec).z_bar;
  cp.tau_max = interface_shear_capacity(p_load, sec.h_s, sec.h_b, a, z_bar, sec.delta);
  cp.mu = cp.n_pressure / cp.tau_max;
  cp.f_slip = cp.tau_max / cp.k_l;
  return cp;
}

}  // namespace pavek
