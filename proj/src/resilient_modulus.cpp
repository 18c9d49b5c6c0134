#include "pavek/resilient_modulus.hpp"

#include <cmath>

namespace pavek {

double mr_nchrp(const MrCoefficients& c, const StressState& s) {
  c.validate();
  s.validate();
  if (s.i1 <= 0 && c.k2 != std::floor(c.k2))
    throw std::domain_error("mr_nchrp: nonpositive bulk stress with noninteger k2");
  return c.k1 * s.p_a * std::pow(s.i1 / s.p_a, c.k2) * std::pow(s.tau_oct / s.p_a + 1.0, c.k3);
}

double mr_me_ratio(const MeMoistureParams& p, double s_now) {
  p.validate();
  const double log_ratio =
      p.a + (p.b - p.a) / (1.0 + std::exp(std::log(-p.b / p.a) + p.k_m * (s_now - p.s_opt)));
  return p.mr_opt * std::pow(10.0, log_ratio);
}

double mr_suction(const MrCoefficients& c, const StressState& s, const MoistureState& m,
                  bool shear_plus_one) {
  c.validate();
  s.validate();
  const double h_m = -m.suction_kpa;  // stored as magnitude, model wants signed
  const double confinement = s.i1 - 3.0 * m.theta * m.f * h_m;
  if (confinement <= 0)
    throw std::domain_error("mr_suction: nonpositive confinement term");
  const double shear = shear_plus_one ? s.tau_oct / s.p_a + 1.0 : s.tau_oct / s.p_a;
  if (shear <= 0 && c.k3 < 0)
    throw std::domain_error("mr_suction: zero octahedral shear with negative k3");
  return c.k1 * s.p_a * std::pow(confinement / s.p_a, c.k2) * std::pow(shear, c.k3);
}

}  // namespace pavek
