#include "pavek/distress.hpp"

#include <cmath>
#include <stdexcept>

namespace pavek {

void FatigueCase::validate() const {
  if (!(applied_n > 0 && stress_psi > 0 && modulus_rupture > 0))
    throw std::invalid_argument("FatigueCase: fields must be positive");
}

void FaultingMonth::validate() const {
  if (!(faultmax_in >= 0 && de >= 0))
    throw std::invalid_argument("FaultingMonth: FAULTMAX and DE must be >= 0");
}

void CornerDeflections::validate() const {
  if (!(unloaded_m >= 0) || loaded_m < unloaded_m)
    throw std::invalid_argument("CornerDeflections: need loaded >= unloaded >= 0");
}

double crack_fraction(double fatigue_damage) {
  if (fatigue_damage < 0) throw std::invalid_argument("crack_fraction: damage must be >= 0");
  if (fatigue_damage == 0.0) return 0.0;  // limit of 1/(1+FD^-1.68)
  return 1.0 / (1.0 + std::pow(fatigue_damage, -1.68));
}

double total_crack(double bottom_up, double top_down) {
  for (double v : {bottom_up, top_down})
    if (!(v >= 0 && v <= 1))
      throw std::invalid_argument("total_crack: fractions must lie in [0,1]");
  return (bottom_up + top_down - bottom_up * top_down) * 100.0;
}

double allowable_loads(double modulus_rupture_psi, double stress_psi, double c1, double c2) {
  if (!(stress_psi > 0)) throw std::invalid_argument("allowable_loads: stress must be positive");
  return std::pow(10.0, c1 * std::pow(modulus_rupture_psi / stress_psi, c2) + 0.4371);
}

double miner_damage(std::span<const FatigueCase> cases, double c1, double c2) {
  double fd = 0.0;
  for (const auto& c : cases) {
    c.validate();
    fd += c.applied_n / allowable_loads(c.modulus_rupture, c.stress_psi, c1, c2);
  }
  return fd;
}

double differential_energy(const CornerDeflections& c) {
  c.validate();
  return c.k_pa_per_m / 2.0 * (c.loaded_m * c.loaded_m - c.unloaded_m * c.unloaded_m);
}

std::vector<FaultingStep> accumulate_faulting(std::span<const FaultingMonth> months, double c34) {
  std::vector<FaultingStep> out;
  out.reserve(months.size());
  double fault = 0.0;
  for (const auto& m : months) {
    m.validate();
    const double gap = m.faultmax_in - fault;
    FaultingStep step{};
    if (gap <= 0.0) {
      step.increment_in = 0.0;
      step.clamped = true;
    } else {
      step.increment_in = c34 * gap * gap * m.de;
      if (step.increment_in > gap) {  // inconsistent user schedule: cap at the envelope
        step.increment_in = gap;
        step.clamped = true;
      }
    }
    fault += step.increment_in;
    step.fault_in = fault;
    out.push_back(step);
  }
  return out;
}

}  // namespace pavek
