#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pavek/distress.hpp"
#include "pavek/rng.hpp"

using namespace pavek;

TEST_CASE("crack fraction anchors") {
  CHECK(crack_fraction(0.0) == 0.0);
  CHECK(crack_fraction(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(crack_fraction(0.25) == doctest::Approx(0.08875156315734897).epsilon(1e-12));
  CHECK(crack_fraction(1e9) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(crack_fraction(-0.1), std::invalid_argument);
  double prev = 0.0;
  for (double fd = 0.01; fd < 50.0; fd *= 1.7) {
    const double c = crack_fraction(fd);
    CHECK(c > prev);
    CHECK(c < 1.0);
    prev = c;
  }
}

TEST_CASE("total crack union") {
  CHECK(total_crack(0.5, 0.5) == doctest::Approx(75.0).epsilon(1e-14));
  CHECK(total_crack(0.0, 0.3) == doctest::Approx(30.0).epsilon(1e-14));
  CHECK(total_crack(1.0, 0.77) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(total_crack(0.2, 0.7) == doctest::Approx(total_crack(0.7, 0.2)).epsilon(1e-14));
  CHECK(total_crack(0.3, 0.4) >= 100.0 * 0.4);
  CHECK_THROWS_AS(total_crack(-0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(total_crack(0.1, 1.5), std::invalid_argument);
}

TEST_CASE("allowable loads hand value and monotonicity") {
  CHECK(allowable_loads(700.0, 700.0, 2.0, 1.22) ==
        doctest::Approx(std::pow(10.0, 2.4371)).epsilon(1e-12));
  CHECK(allowable_loads(1400.0, 700.0, 2.0, 1.22) ==
        doctest::Approx(124748.21665922199).epsilon(1e-12));
  CHECK(allowable_loads(700.0, 350.0, 2.0, 1.22) > allowable_loads(700.0, 700.0, 2.0, 1.22));
  CHECK_THROWS_AS(allowable_loads(700.0, 0.0, 2.0, 1.22), std::invalid_argument);
}

TEST_CASE("miner damage additivity and permutation invariance") {
  const FatigueCase a{1e4, 350.0, 700.0, "a"};
  const FatigueCase b{5e3, 500.0, 700.0, "b"};
  const FatigueCase c{2e3, 650.0, 700.0, "c"};
  const std::vector<FatigueCase> abc{a, b, c}, cba{c, b, a};
  CHECK(miner_damage(abc, 2.0, 1.22) ==
        doctest::Approx(miner_damage(cba, 2.0, 1.22)).epsilon(1e-15));
  const std::vector<FatigueCase> ab{a, b}, cc{c};
  CHECK(miner_damage(abc, 2.0, 1.22) ==
        doctest::Approx(miner_damage(ab, 2.0, 1.22) + miner_damage(cc, 2.0, 1.22)).epsilon(1e-15));
  // single case with n = N gives FD = 1
  const double n_allow = allowable_loads(700.0, 450.0, 2.0, 1.22);
  const std::vector<FatigueCase> unit{{n_allow, 450.0, 700.0, ""}};
  CHECK(miner_damage(unit, 2.0, 1.22) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(miner_damage(std::vector<FatigueCase>{}, 2.0, 1.22) == 0.0);
  // two equal cases double the damage
  const std::vector<FatigueCase> twice{a, a};
  CHECK(miner_damage(twice, 2.0, 1.22) ==
        doctest::Approx(2.0 * miner_damage(std::vector<FatigueCase>{a}, 2.0, 1.22))
            .epsilon(1e-15));
}

TEST_CASE("differential energy") {
  CHECK(differential_energy({0.02, 0.02, 1e8}) == 0.0);
  CHECK(differential_energy({0.03, 0.01, 100.0}) == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(differential_energy({0.03, 0.01, 200.0}) == doctest::Approx(0.08).epsilon(1e-15));
  CHECK_THROWS_AS(differential_energy({0.01, 0.03, 100.0}), std::invalid_argument);
  // quadratic scaling in the deflection pair
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const double du = rng.uniform(0.0, 0.01);
    const double dl = du + rng.uniform(0.0, 0.02);
    const double k = rng.uniform(1e7, 3e8);
    const double s = rng.uniform(0.5, 3.0);
    CHECK(differential_energy({s * dl, s * du, k}) ==
          doctest::Approx(s * s * differential_energy({dl, du, k})).epsilon(1e-12));
  }
}

TEST_CASE("faulting recursion matches the 3-step hand recursion") {
  // C34 = 0.005, FAULTMAX = 0.1 in, DE = 0.04 per month:
  // dF1 = 0.005*0.1^2*0.04 = 2.0e-6 and the gap stays ~0.1.
  const std::vector<FaultingMonth> months{{0.1, 0.04}, {0.1, 0.04}, {0.1, 0.04}};
  const auto series = accumulate_faulting(months, 0.005);
  REQUIRE(series.size() == 3);
  CHECK(series[0].fault_in == doctest::Approx(2.0000000000000003e-06).epsilon(1e-10));
  CHECK(series[1].fault_in == doctest::Approx(3.999920000800001e-06).epsilon(1e-10));
  CHECK(series[2].fault_in == doctest::Approx(5.999760007199841e-06).epsilon(1e-10));
  for (const auto& s : series) CHECK_FALSE(s.clamped);
}

TEST_CASE("faulting is nondecreasing and bounded by its envelope") {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    std::vector<FaultingMonth> months;
    const double fmax = rng.uniform(0.02, 0.3);
    for (int i = 0; i < 36; ++i) months.push_back({fmax, rng.uniform(0.0, 5.0)});
    const auto series = accumulate_faulting(months, 0.05);
    double prev = 0.0;
    for (const auto& s : series) {
      CHECK(s.fault_in >= prev);
      CHECK(s.fault_in <= fmax + 1e-15);
      prev = s.fault_in;
    }
  }
}

TEST_CASE("faulting fixed point and zero-energy month") {
  const std::vector<FaultingMonth> months{{0.0, 10.0}, {0.0, 10.0}};
  const auto at_cap = accumulate_faulting(months, 0.005);
  CHECK(at_cap[1].fault_in == 0.0);  // FAULTMAX 0: increment always 0
  const std::vector<FaultingMonth> quiet{{0.1, 0.0}, {0.1, 0.0}};
  const auto q = accumulate_faulting(quiet, 0.005);
  CHECK(q[1].fault_in == 0.0);
}

TEST_CASE("faulting converges toward the envelope for constant forcing") {
  std::vector<FaultingMonth> months(4000, FaultingMonth{0.05, 3.0});
  const auto series = accumulate_faulting(months, 0.05);
  CHECK(series.back().fault_in > 0.045);
  CHECK(series.back().fault_in <= 0.05 + 1e-15);
}
