#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pavek/kelvin.hpp"

using namespace pavek;

namespace {
struct Ref {
  double x, ber, bei, ker, kei, berp, beip, kerp, keip;
};

// Frozen from an independent special-function library evaluation.
const Ref kRefs[] = {
    {0.5, 0.9990234639908382, 0.06249321838219946, 0.8559058721186341, -0.6715816950943675,
     -0.007812076147507734, 0.24991862111621022, -1.8197997533173529, 0.33320379160332986},
    {1.0, 0.984381781213087, 0.24956604003665972, 0.28670620872831604, -0.49499463651872,
     -0.06244575217903096, 0.49739651146809727, -0.6946038911006908, 0.3523699133361705},
    {2.0, 0.7517341827138083, 0.9722916273066612, -0.04166451399150959, -0.20240006776470437,
     -0.49306712470943914, 0.9170136133840363, -0.10660096588105275, 0.21980790991960555},
    {3.7, -1.6932599842696003, 2.341297714476542, -0.04597172314251213, -0.007076703761047,
     -2.660778961539917, 0.13148675950617325, 0.03340297354282785, 0.038636378725527644},
    {5.0, -6.230082478666358, 0.11603438155020042, -0.011511727199492405, 0.011187586509870114,
     -3.8453394732621544, -4.354140514843111, 0.017193403828394, -0.0008199865436310269},
    {8.0, 20.973955610730247, -35.01672516488151, 0.0014858340684896772, 0.00036958395614160815,
     38.31132570089802, -7.660318413649827, -0.0008797240991814695, -0.0013363129148433108},
    {12.0, -128.51162615774032, 546.9485524630747, -6.307713705210742e-05,
     -3.899959497124564e-05, -472.56881635370206, 272.67002155389184, 1.9593852092301425e-05,
     7.381496296013578e-05},
};
}  // namespace

TEST_CASE("kelvin functions match reference values") {
  for (const Ref& r : kRefs) {
    const KelvinValues v = kelvin(r.x);
    CAPTURE(r.x);
    CHECK(v.ber == doctest::Approx(r.ber).epsilon(1e-11));
    CHECK(v.bei == doctest::Approx(r.bei).epsilon(1e-11));
    CHECK(v.ker == doctest::Approx(r.ker).epsilon(1e-10));
    CHECK(v.kei == doctest::Approx(r.kei).epsilon(1e-10));
    CHECK(v.berp == doctest::Approx(r.berp).epsilon(1e-11));
    CHECK(v.beip == doctest::Approx(r.beip).epsilon(1e-11));
    CHECK(v.kerp == doctest::Approx(r.kerp).epsilon(1e-10));
    CHECK(v.keip == doctest::Approx(r.keip).epsilon(1e-10));
  }
}

TEST_CASE("values at zero") {
  const KelvinValues v = kelvin(0.0);
  CHECK(v.ber == 1.0);
  CHECK(v.bei == 0.0);
  CHECK(v.kei == doctest::Approx(-3.14159265358979 / 4.0).epsilon(1e-12));
  CHECK(std::isinf(v.ker));
  CHECK(v.berp == 0.0);
  CHECK(v.beip == 0.0);
}

TEST_CASE("derivatives match central differences") {
  for (double x : {0.3, 0.9, 1.7, 3.1, 6.3, 9.5, 14.0}) {
    const double h = 1e-6 * std::max(1.0, x);
    const KelvinValues lo = kelvin(x - h), hi = kelvin(x + h), mid = kelvin(x);
    CAPTURE(x);
    CHECK(mid.berp == doctest::Approx((hi.ber - lo.ber) / (2 * h)).epsilon(1e-6));
    CHECK(mid.beip == doctest::Approx((hi.bei - lo.bei) / (2 * h)).epsilon(1e-6));
    CHECK(mid.kerp == doctest::Approx((hi.ker - lo.ker) / (2 * h)).epsilon(1e-5));
    CHECK(mid.keip == doctest::Approx((hi.kei - lo.kei) / (2 * h)).epsilon(1e-5));
  }
}

TEST_CASE("continuity across the series/asymptotic switch points") {
  for (double x0 : {8.0, 17.0}) {
    const KelvinValues lo = kelvin(x0 - 1e-9), hi = kelvin(x0 + 1e-9);
    CAPTURE(x0);
    CHECK(lo.ber == doctest::Approx(hi.ber).epsilon(1e-9));
    CHECK(lo.bei == doctest::Approx(hi.bei).epsilon(1e-9));
    CHECK(lo.ker == doctest::Approx(hi.ker).epsilon(1e-8));
    CHECK(lo.kei == doctest::Approx(hi.kei).epsilon(1e-8));
  }
}
