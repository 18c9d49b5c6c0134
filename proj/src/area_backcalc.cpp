#include "pavek/area_backcalc.hpp"

#include <cmath>
#include <stdexcept>

#include "pavek/units.hpp"

namespace pavek {

double basin_area(const DeflectionBasin& basin, const AreaConstants& c) {
  basin.validate();
  if (basin.offsets.size() != 4)
    throw std::invalid_argument("basin_area: expected exactly 4 sensors");
  const double ss_m = units::m_from_in(c.sensor_spacing_in);
  for (int i = 0; i < 4; ++i)
    if (std::abs(basin.offsets[i] - i * ss_m) > 1e-6)
      throw std::invalid_argument("basin_area: sensors must sit at 0/12/24/36 in spacing");
  const auto& d = basin.deflections;
  if (!(d[0] > 0)) throw std::invalid_argument("basin_area: center deflection must be positive");
  return c.sensor_spacing_in / (2.0 * d[0]) * (d[0] + 2.0 * (d[1] + d[2]) + d[3]);
}

double effective_length(double ba_in, const AreaConstants& c) {
  if (!(ba_in < c.k1))
    throw std::domain_error("effective_length: basin area at or above the rigid-body bound 36");
  if (!(ba_in > 0)) throw std::invalid_argument("effective_length: basin area must be positive");
  // The bracket ln((36-BA)/k2)/(-k3) is positive for all BA < 36 since
  // 36 - BA < k2 always.
  const double bracket = std::log((c.k1 - ba_in) / c.k2) / (-c.k3);
  return std::pow(bracket, c.inv_k4);
}

double deflection_coefficient(double l_e_in, const AreaConstants& c) {
  if (l_e_in < 0) throw std::invalid_argument("deflection_coefficient: l_e must be >= 0");
  return c.a * std::exp(-c.b * std::exp(-c.c * l_e_in));
}

AreaChainResult k_from_basin(const DeflectionBasin& basin, double p_lbf, const AreaConstants& c) {
  AreaChainResult r;
  r.basin_area_in = basin_area(basin, c);
  r.eff_length_in = effective_length(r.basin_area_in, c);
  r.defl_coeff = deflection_coefficient(r.eff_length_in, c);
  const double d0_in = units::in_from_m(basin.deflections[0]);
  r.k.pci = p_lbf * r.defl_coeff / (d0_in * r.eff_length_in * r.eff_length_in);
  r.k.pa_per_m = units::pam_from_pci(r.k.pci);
  return r;
}

AreaChainResult modified_k(const PavementSection& sec, const std::optional<MoistureState>& m,
                           const FwdLoad& load, const ModifiedKOptions& opt) {
  std::optional<double> e_base;
  if (m) e_base = mr_suction(opt.mr_coeffs, opt.stress, *m, opt.shear_plus_one) * 1e3;  // kPa->Pa

  DeflectionBasin basin = full_structure_basin(sec, load, e_base, opt.structure);

  // The chain is defined at exactly 9000 lbf; the 40 kN forward load is
  // 8992.6 lbf, so scale the (linear) basin onto the reference load.
  constexpr double kRefLbf = 9000.0;
  const double scale = units::n_from_lbf(kRefLbf) / load.magnitude;
  for (double& d : basin.deflections) d *= scale;
  return k_from_basin(basin, kRefLbf, opt.area);
}

}  // namespace pavek
