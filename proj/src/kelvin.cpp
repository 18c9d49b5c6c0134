#include "pavek/kelvin.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace pavek {
namespace {

using cplx = std::complex<double>;

constexpr double kEulerGamma = 0.57721566490153286060651209;

// Modified Bessel I0/I1 by power series; converges for all z, usable in
// double precision for |z| up to ~20 along arg(z) = pi/4.
cplx bessel_i0_series(cplx z) {
  const cplx q = z * z / 4.0;
  cplx term{1.0, 0.0}, sum{1.0, 0.0};
  for (int k = 1; k < 80; ++k) {
    term *= q / double(k * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

cplx bessel_i1_series(cplx z) {
  const cplx q = z * z / 4.0;
  cplx term{1.0, 0.0}, sum{1.0, 0.0};
  for (int k = 1; k < 80; ++k) {
    term *= q / double(k * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return z / 2.0 * sum;
}

// K0/K1 by the logarithmic series (small |z|).
cplx bessel_k0_series(cplx z) {
  const cplx q = z * z / 4.0;
  const cplx lg = std::log(z / 2.0) + kEulerGamma;
  cplx term{1.0, 0.0}, sum{0.0, 0.0};
  double h = 0.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / double(k * k);
    h += 1.0 / k;
    sum += term * h;
    if (std::abs(term) * h < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return -lg * bessel_i0_series(z) + sum;
}

cplx bessel_k1_series(cplx z) {
  const cplx q = z * z / 4.0;
  cplx term{1.0, 0.0}, sum{0.0, 0.0};
  double hk = 0.0, hk1 = 1.0;
  sum = term * (hk + hk1 - 2.0 * kEulerGamma);
  for (int k = 1; k < 80; ++k) {
    term *= q / double(k * (k + 1));
    hk += 1.0 / k;
    hk1 += 1.0 / (k + 1);
    const cplx add = term * (hk + hk1 - 2.0 * kEulerGamma);
    sum += add;
    if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return 1.0 / z + std::log(z / 2.0) * bessel_i1_series(z) - z / 4.0 * sum;
}

// Asymptotic expansions for large |z|, Re z > 0 (A&S 9.7).
cplx bessel_i_asym(cplx z, double mu) {
  cplx term{1.0, 0.0}, sum{1.0, 0.0};
  double prev = 1e300;
  for (int k = 1; k < 40; ++k) {
    const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= -num / (8.0 * double(k)) / z;
    const double mag = std::abs(term);
    if (mag > prev) break;  // divergent tail
    sum += term;
    prev = mag;
    if (mag < 1e-17) break;
  }
  return std::exp(z) / std::sqrt(2.0 * std::numbers::pi * z) * sum;
}

cplx bessel_k_asym(cplx z, double mu) {
  cplx term{1.0, 0.0}, sum{1.0, 0.0};
  double prev = 1e300;
  for (int k = 1; k < 40; ++k) {
    const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= num / (8.0 * double(k)) / z;
    const double mag = std::abs(term);
    if (mag > prev) break;
    sum += term;
    prev = mag;
    if (mag < 1e-17) break;
  }
  return std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z) * sum;
}

}  // namespace

KelvinValues kelvin(double x) {
  if (x < 0) {
    // Only nonnegative arguments arise from radial coordinates.
    x = -x;
  }
  const cplx c = std::polar(1.0, std::numbers::pi / 4.0);
  const cplx z = x * c;

  cplx i0, i1, k0, k1;
  if (x == 0.0) {
    KelvinValues v{};
    v.ber = 1.0;
    v.bei = 0.0;
    v.ker = std::numeric_limits<double>::infinity();
    v.kei = -std::numbers::pi / 4.0;
    v.berp = 0.0;
    v.beip = 0.0;
    v.kerp = -std::numeric_limits<double>::infinity();
    v.keip = 0.0;
    return v;
  }
  if (x <= 17.0) {
    i0 = bessel_i0_series(z);
    i1 = bessel_i1_series(z);
  } else {
    i0 = bessel_i_asym(z, 0.0);
    i1 = bessel_i_asym(z, 4.0);
  }
  if (x <= 8.0) {
    k0 = bessel_k0_series(z);
    k1 = bessel_k1_series(z);
  } else {
    k0 = bessel_k_asym(z, 0.0);
    k1 = bessel_k_asym(z, 4.0);
  }

  // d/dx f(x c) = c f'(x c); I0' = I1, K0' = -K1.
  const cplx dber = c * i1;
  const cplx dker = -c * k1;

  KelvinValues v;
  v.ber = i0.real();
  v.bei = i0.imag();
  v.ker = k0.real();
  v.kei = k0.imag();
  v.berp = dber.real();
  v.beip = dber.imag();
  v.kerp = dker.real();
  v.keip = dker.imag();
  return v;
}

}  // namespace pavek
