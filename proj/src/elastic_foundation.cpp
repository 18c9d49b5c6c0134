#include "pavek/elastic_foundation.hpp"

#include <cmath>
#include <stdexcept>

namespace pavek {
namespace {

// 7-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGx[7] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                           0.0,
                           0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
constexpr double kGw[7] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                           0.4179591836734694,
                           0.3818300505051189, 0.2797053914892766, 0.1294849661688697};

}  // namespace

double foundation_surface_compliance(double xi, double e_modulus, double nu, double depth) {
  const double halfspace = 2.0 * (1.0 - nu * nu) / (e_modulus * xi);
  if (depth <= 0.0 || !std::isfinite(depth)) return halfspace;
  const double u = xi * depth;
  const double kap = 3.0 - 4.0 * nu;
  double ratio;
  if (u > 300.0) {
    ratio = 1.0;
  } else if (u < 1e-6) {
    // oedometric-column limit of the layer kernel
    ratio = 8.0 * (1.0 - 2.0 * nu) * u / (16.0 * (1.0 - nu) * (1.0 - nu));
  } else {
    const double num = 2.0 * kap * std::sinh(2.0 * u) - 4.0 * u;
    const double den = 2.0 * kap * std::cosh(2.0 * u) + 4.0 * u * u + 1.0 + kap * kap;
    ratio = num / den;
  }
  return halfspace * ratio;
}

std::vector<double> elastic_foundation_deflections(double d_rigidity, double e_modulus, double nu,
                                                   const FwdLoad& load,
                                                   std::span<const double> offsets,
                                                   const ElasticFoundationConfig& cfg) {
  load.validate();
  if (!(d_rigidity > 0 && e_modulus > 0))
    throw std::invalid_argument("elastic_foundation: rigidity and modulus must be positive");

  const double p = load.pressure();
  const double a = load.radius;
  // Characteristic length of the plate/half-space system sets the low-xi scale.
  const double c_found = e_modulus / (2.0 * (1.0 - nu * nu));
  const double ell = std::cbrt(d_rigidity / c_found);

  std::vector<double> out;
  out.reserve(offsets.size());
  for (double r : offsets) {
    const auto integrand = [&](double xi) {
      const double lam = foundation_surface_compliance(xi, e_modulus, nu, cfg.depth);
      const double j1a = std::cyl_bessel_j(1.0, xi * a);
      const double j0r = (r == 0.0) ? 1.0 : std::cyl_bessel_j(0.0, xi * r);
      return p * a * j1a * j0r * lam / (d_rigidity * xi * xi * xi * xi * lam + 1.0);
    };

    // Panel width resolves both Bessel oscillations and the kernel scale.
    const double osc = std::max(std::max(a, r), 1e-3);
    double xi_max = std::max(60.0 / ell, 240.0 / osc);
    const auto integrate = [&](int panels_scale) {
      const double base_width = std::min(3.141592653589793 / (4.0 * osc), 0.25 / ell) /
                                panels_scale;
      double sum = 0.0;
      double lo = 0.0;
      while (lo < xi_max) {
        const double hi = std::min(lo + base_width, xi_max);
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double s = 0.0;
        for (int g = 0; g < 7; ++g) s += kGw[g] * integrand(mid + half * kGx[g]);
        sum += s * half;
        lo = hi;
      }
      return sum;
    };

    double prev = integrate(1);
    double cur = prev;
    bool converged = false;
    for (int ref = 1; ref <= cfg.max_refinements; ++ref) {
      cur = integrate(1 << ref);
      if (std::abs(cur - prev) <= cfg.rel_tol * std::abs(cur)) {
        converged = true;
        break;
      }
      prev = cur;
    }
    if (!converged)
      throw std::runtime_error("elastic_foundation: quadrature did not converge at offset " +
                               std::to_string(r));
    out.push_back(cur);
  }
  return out;
}

DeflectionBasin halfspace_plate_basin(double h_eq, double e_slab, double nu, double e_subgrade,
                                      double nu_subgrade, const FwdLoad& load,
                                      const ElasticFoundationConfig& cfg) {
  if (!(h_eq > 0 && e_slab > 0 && e_subgrade > 0))
    throw std::invalid_argument("halfspace_plate_basin: inputs must be positive");
  const double d = e_slab * h_eq * h_eq * h_eq / (12.0 * (1.0 - nu * nu));
  DeflectionBasin b;
  b.offsets.assign(kStandardSensorOffsets.begin(), kStandardSensorOffsets.end());
  b.deflections =
      elastic_foundation_deflections(d, e_subgrade, nu_subgrade, load, b.offsets, cfg);
  return b;
}

}  // namespace pavek
