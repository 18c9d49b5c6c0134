#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pavek/winkler_plate.hpp"
#include "support/winkler_series.hpp"

using namespace pavek;

namespace {
constexpr double kD = 7e7;   // N m
constexpr double kK = 8e7;   // Pa/m
const FwdLoad kLoad{40000.0, 0.15};
const double kSensors[4] = {0.0, 0.3048, 0.6096, 0.9144};
}  // namespace

TEST_CASE("series oracle reproduces frozen reference values") {
  // Frozen from an independent quadrature of the Hankel-transform solution.
  const double expected[4] = {6.598900971910533e-05, 6.167879663956389e-05,
                              5.3161112759196885e-05, 4.36696775821858e-05};
  for (int i = 0; i < 4; ++i)
    CHECK(testing::winkler_series_deflection(kSensors[i], kD, kK, 40000.0, 0.15) ==
          doctest::Approx(expected[i]).epsilon(1e-9));
}

TEST_CASE("finite-difference solver matches the series solution") {
  const auto w = winkler_plate_deflections(kD, kK, kLoad, kSensors);
  for (int i = 0; i < 4; ++i) {
    const double ref = testing::winkler_series_deflection(kSensors[i], kD, kK, 40000.0, 0.15);
    CHECK(w[i] == doctest::Approx(ref).epsilon(2e-4));
  }
}

TEST_CASE("point-load limit approaches P/(8 k l^2)") {
  const double ell = std::pow(kD / kK, 0.25);
  const FwdLoad point{40000.0, 0.02 * ell};
  WinklerPlateConfig cfg;
  cfg.nodes = 8000;
  const auto w = winkler_plate_deflections(kD, kK, point, kSensors, cfg);
  CHECK(w[0] == doctest::Approx(40000.0 / (8.0 * kK * ell * ell)).epsilon(0.02));
}

TEST_CASE("grid convergence: halving the step changes the center deflection < 0.5%") {
  WinklerPlateConfig coarse, fine;
  coarse.nodes = 2000;
  fine.nodes = 4000;
  const auto wc = winkler_plate_deflections(kD, kK, kLoad, kSensors, coarse);
  const auto wf = winkler_plate_deflections(kD, kK, kLoad, kSensors, fine);
  CHECK(std::abs(wf[0] - wc[0]) / wf[0] < 0.005);
}

TEST_CASE("deflections decrease with offset and with stiffer foundation") {
  const auto w = winkler_plate_deflections(kD, kK, kLoad, kSensors);
  for (int i = 1; i < 4; ++i) CHECK(w[i] < w[i - 1]);
  const auto w2 = winkler_plate_deflections(kD, 2.0 * kK, kLoad, kSensors);
  for (int i = 0; i < 4; ++i) CHECK(w2[i] < w[i]);
  const auto w3 = winkler_plate_deflections(2.0 * kD, kK, kLoad, kSensors);
  CHECK(w3[0] < w[0]);
}

TEST_CASE("linearity in load") {
  const auto w1 = winkler_plate_deflections(kD, kK, kLoad, kSensors);
  const auto w2 = winkler_plate_deflections(kD, kK, FwdLoad{80000.0, 0.15}, kSensors);
  for (int i = 0; i < 4; ++i) CHECK(w2[i] == doctest::Approx(2.0 * w1[i]).epsilon(1e-10));
}

TEST_CASE("far-field decay: deflection at 3 m is a few percent of center") {
  const double sensors[2] = {0.0, 3.0};
  const auto w = winkler_plate_deflections(kD, kK, kLoad, sensors);
  CHECK(std::abs(w[1]) <= 0.05 * w[0]);
  const double ref = testing::winkler_series_deflection(3.0, kD, kK, 40000.0, 0.15);
  CHECK(w[1] == doctest::Approx(ref).epsilon(5e-3));
}

TEST_CASE("basin wrapper produces the standard sensor layout") {
  const DeflectionBasin b = winkler_plate_basin(0.25, 3e10, 0.15, kK, kLoad);
  REQUIRE(b.offsets.size() == 4);
  CHECK(b.offsets[1] == doctest::Approx(0.3048));
  CHECK(b.deflections[0] > 0.0);
  b.validate();
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(winkler_plate_deflections(-1.0, kK, kLoad, kSensors), std::invalid_argument);
  CHECK_THROWS_AS(winkler_plate_deflections(kD, 0.0, kLoad, kSensors), std::invalid_argument);
  CHECK_THROWS_AS(winkler_plate_deflections(kD, kK, FwdLoad{0.0, 0.15}, kSensors),
                  std::invalid_argument);
}
