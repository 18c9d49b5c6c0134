#include "pavek/swcc.hpp"

#include <cmath>

#include "pavek/units.hpp"

namespace pavek {

double swcc_correction(double h_cm, double h_r) {
  if (!(h_r > 0)) throw std::invalid_argument("swcc_correction: h_r must be positive");
  if (h_cm < 0) throw std::invalid_argument("swcc_correction: suction head must be >= 0");
  return 1.0 - std::log1p(h_cm / h_r) / std::log1p(kSwccMaxSuctionCm / h_r);
}

double swcc_saturation(double h_cm, const SwccParams& p) {
  p.validate();
  if (h_cm < 0) throw std::invalid_argument("swcc_saturation: suction head must be >= 0");
  const double c = swcc_correction(h_cm, p.h_r);
  const double bracket = std::log(std::exp(1.0) + std::pow(h_cm / p.a_f, p.b_f));
  double s = c / std::pow(bracket, p.c_f);
  if (s < 0) s = 0;  // C(h) < 0 beyond the 1.021e7 anchor
  if (s > 1) s = 1;
  return s;
}

double suction_at_elevation(const SuctionProfile& profile, double z_cm) {
  profile.validate();
  return profile.h_ref - (z_cm - profile.z_ref);
}

MoistureState moisture_state(const SwccParams& p, double h_cm) {
  const double s = swcc_saturation(h_cm, p);
  const double theta = s * p.theta_sat;
  MoistureState m;
  m.saturation = s;
  m.theta = theta;
  m.suction_kpa = units::kpa_from_cm_head(h_cm);
  if (s >= kSaturationThreshold) {
    if (theta <= 0)
      throw std::domain_error("moisture_state: f undefined, theta = 0 at saturation");
    m.f = 1.0 / theta;
  } else {
    m.f = 1.0;
  }
  return m;
}

double invert_swcc(double target_s, const SwccParams& p) {
  p.validate();
  if (!(target_s > 0 && target_s <= 1))
    throw std::invalid_argument("invert_swcc: target saturation must lie in (0,1]");
  double lo = 0.0, hi = kSwccMaxSuctionCm;
  double s_lo = swcc_saturation(lo, p);   // = 1
  double s_hi = swcc_saturation(hi, p);   // = 0
  if (target_s > s_lo + 1e-8 || target_s < s_hi - 1e-8)
    throw std::domain_error("invert_swcc: target saturation outside attainable range");
  // S is nonincreasing in h; bisect until the S-gap closes.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double s_mid = swcc_saturation(mid, p);
    if (s_mid >= target_s) {
      lo = mid;
      s_lo = s_mid;
    } else {
      hi = mid;
      s_hi = s_mid;
    }
    if (s_lo - s_hi <= 1e-8 || hi - lo <= 1e-9) break;
  }
  // Prefer the endpoint whose saturation is closest to the target.
  return (std::abs(s_lo - target_s) <= std::abs(s_hi - target_s)) ? lo : hi;
}

}  // namespace pavek
