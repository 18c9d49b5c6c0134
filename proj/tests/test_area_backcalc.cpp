#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pavek/area_backcalc.hpp"
#include "pavek/rng.hpp"
#include "pavek/units.hpp"

using namespace pavek;

namespace {
DeflectionBasin basin_in_inches(double d0, double d1, double d2, double d3) {
  DeflectionBasin b;
  b.offsets = {0.0, 0.3048, 0.6096, 0.9144};
  b.deflections = {units::m_from_in(d0), units::m_from_in(d1), units::m_from_in(d2),
                   units::m_from_in(d3)};
  return b;
}
}  // namespace

TEST_CASE("basin area hand values") {
  CHECK(basin_area(basin_in_inches(1.0, 0.8, 0.6, 0.45)) == doctest::Approx(25.5).epsilon(1e-12));
  CHECK(basin_area(basin_in_inches(1.0, 1.0, 1.0, 1.0)) == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(basin_area(basin_in_inches(1.0, 0.0, 0.0, 0.0)) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK_THROWS_AS(basin_area(basin_in_inches(0.0, 0.0, 0.0, 0.0)), std::invalid_argument);

  DeflectionBasin wrong;
  wrong.offsets = {0.0, 0.25, 0.5, 0.75};
  wrong.deflections = {1e-4, 8e-5, 6e-5, 5e-5};
  CHECK_THROWS_AS(basin_area(wrong), std::invalid_argument);
}

TEST_CASE("effective length hand values and monotonicity") {
  CHECK(effective_length(25.5) == doctest::Approx(21.523649256385536).epsilon(1e-12));
  // inverse construction: bracket exactly 1
  const double ba_unit = 36.0 - 1812.597 * std::exp(-2.559);
  CHECK(effective_length(ba_unit) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(effective_length(30.0) > effective_length(25.0));
  CHECK_THROWS_AS(effective_length(36.0), std::domain_error);
  CHECK_THROWS_AS(effective_length(37.0), std::domain_error);
}

TEST_CASE("deflection coefficient bounds and hand values") {
  CHECK(deflection_coefficient(0.0) == doctest::Approx(0.10747257684463868).epsilon(1e-12));
  CHECK(deflection_coefficient(21.523649256385536) ==
        doctest::Approx(0.12095762630475287).epsilon(1e-12));
  CHECK(deflection_coefficient(1e9) == doctest::Approx(0.12450).epsilon(1e-9));
  double prev = 0.0;
  for (double le = 0.0; le < 200.0; le += 5.0) {
    const double d = deflection_coefficient(le);
    CHECK(d > prev);
    CHECK(d < 0.12450 + 1e-12);
    prev = d;
  }
}

TEST_CASE("chained k from the worked four-sensor example") {
  const AreaChainResult r = k_from_basin(basin_in_inches(0.020, 0.016, 0.012, 0.009), 9000.0);
  CHECK(r.basin_area_in == doctest::Approx(25.5).epsilon(1e-12));
  CHECK(r.eff_length_in == doctest::Approx(21.523649256385536).epsilon(1e-12));
  CHECK(r.defl_coeff == doctest::Approx(0.12095762630475287).epsilon(1e-12));
  CHECK(r.k.pci == doctest::Approx(117.49353128126431).epsilon(1e-12));
  CHECK(r.k.pa_per_m == doctest::Approx(117.49353128126431 * 271447.14).epsilon(1e-12));
}

TEST_CASE("homogeneity: scaling deflections by s scales k by 1/s") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const double d0 = rng.uniform(0.005, 0.05);
    const double d1 = d0 * rng.uniform(0.6, 0.95);
    const double d2 = d1 * rng.uniform(0.6, 0.95);
    const double d3 = d2 * rng.uniform(0.6, 0.95);
    const double s = std::exp(rng.uniform(std::log(0.2), std::log(5.0)));
    const AreaChainResult r1 = k_from_basin(basin_in_inches(d0, d1, d2, d3), 9000.0);
    const AreaChainResult r2 =
        k_from_basin(basin_in_inches(s * d0, s * d1, s * d2, s * d3), 9000.0);
    CHECK(r2.basin_area_in == doctest::Approx(r1.basin_area_in).epsilon(1e-12));
    CHECK(r2.k.pci == doctest::Approx(r1.k.pci / s).epsilon(1e-12));
  }
}

TEST_CASE("chain monotonicity: proportionally smaller deflections give larger k") {
  const AreaChainResult soft = k_from_basin(basin_in_inches(0.03, 0.024, 0.018, 0.0135), 9000.0);
  const AreaChainResult stiff = k_from_basin(basin_in_inches(0.02, 0.016, 0.012, 0.009), 9000.0);
  CHECK(stiff.k.pci > soft.k.pci);
}

TEST_CASE("modified k: bond and moisture directions on a Table-5-like section") {
  PavementSection s;
  s.h_s = units::m_from_in(10.0);
  s.h_b = units::m_from_in(3.6);
  s.e_slab = units::pa_from_psi(6.95e6);
  s.e_base = units::pa_from_psi(22000.0);
  s.e_subgrade = units::pa_from_psi(28000.0);

  // bond: k nondecreasing in delta (trend of the bonded composite)
  double k_prev = 0.0;
  for (double d : {0.0, 0.52, 1.0}) {
    s.delta = d;
    const double k = modified_k(s, std::nullopt, FwdLoad{}).k.pci;
    CHECK(k >= k_prev);
    k_prev = k;
  }

  // moisture: drier (more suction) stiffens the base and raises k
  s.delta = 0.52;
  ModifiedKOptions opt;
  opt.mr_coeffs = {689.3, 0.66, -0.03};
  const MoistureState saturated{0.174, 1.0, 1.43, 1.0 / 0.174};
  const MoistureState equilibrium{0.011, 0.0628, 237.0, 1.0};
  const MoistureState dry{0.009, 0.0514, 315.0, 1.0};
  const double k_sat = modified_k(s, saturated, FwdLoad{}, opt).k.pci;
  const double k_eq = modified_k(s, equilibrium, FwdLoad{}, opt).k.pci;
  const double k_dry = modified_k(s, dry, FwdLoad{}, opt).k.pci;
  CHECK(k_sat <= k_eq);
  CHECK(k_eq <= k_dry);
}

TEST_CASE("modified k is deterministic") {
  PavementSection s;
  s.h_s = 0.254;
  s.h_b = 0.1;
  s.e_slab = 4.5e10;
  s.e_base = 2e8;
  s.e_subgrade = 2e8;
  s.delta = 0.5;
  const AreaChainResult a = modified_k(s, std::nullopt, FwdLoad{});
  const AreaChainResult b = modified_k(s, std::nullopt, FwdLoad{});
  CHECK(a.k.pci == b.k.pci);
  CHECK(a.basin_area_in == b.basin_area_in);
}
