#pragma once

// Kelvin functions ber, bei, ker, kei and their first derivatives, computed
// through the complex Bessel identities
//   ber x + i bei x = I0(x e^{i pi/4}),   ker x + i kei x = K0(x e^{i pi/4}),
// with power series for small arguments and asymptotic expansions beyond.
// Accurate to ~1e-12 relative over the range used by the plate solutions.

namespace pavek {

struct KelvinValues {
  double ber, bei, ker, kei;
  double berp, beip, kerp, keip;  // first derivatives
};

KelvinValues kelvin(double x);

}  // namespace pavek
