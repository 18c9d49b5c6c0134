#include "pavek/winkler_plate.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <stdexcept>

namespace pavek {

double flexural_rigidity(double e_modulus, double thickness, double nu) {
  return e_modulus * thickness * thickness * thickness / (12.0 * (1.0 - nu * nu));
}

std::vector<double> winkler_plate_deflections(double d_rigidity, double k_foundation,
                                              const FwdLoad& load, std::span<const double> offsets,
                                              const WinklerPlateConfig& cfg) {
  load.validate();
  if (!(d_rigidity > 0 && k_foundation > 0))
    throw std::invalid_argument("winkler_plate: rigidity and foundation modulus must be positive");

  const double ell = std::pow(d_rigidity / k_foundation, 0.25);
  double radius = cfg.domain_factor * ell;
  if (cfg.max_radius > 0.0 && radius > cfg.max_radius) radius = cfg.max_radius;
  double max_off = 0.0;
  for (double r : offsets) max_off = std::max(max_off, r);
  if (radius < 1.5 * max_off) radius = 1.5 * max_off;

  const int n = cfg.nodes;  // nodes 0..n, spacing h
  const double h = radius / n;
  const double p = load.pressure();
  const double a = load.radius;

  // Unknowns interleaved per node: x[2i] = w_i, x[2i+1] = M_i with M = lap(w).
  using Trip = Eigen::Triplet<double>;
  std::vector<Trip> trips;
  trips.reserve(8 * (n + 1));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * (n + 1));
  const auto iw = [](int i) { return 2 * i; };
  const auto im = [](int i) { return 2 * i + 1; };
  const double ih2 = 1.0 / (h * h);

  // Cell-averaged load: node i owns the annulus [r_i - h/2, r_i + h/2].
  const auto cell_pressure = [&](int i) {
    const double lo = std::max(i * h - h / 2.0, 0.0);
    const double hi = i * h + h / 2.0;
    if (lo >= a) return 0.0;
    const double covered = std::min(a, hi);
    return p * (covered * covered - lo * lo) / (hi * hi - lo * lo);
  };

  // Axis node: lap(f)(0) = 4 (f_1 - f_0)/h^2 by symmetry.
  trips.emplace_back(iw(0), im(0), 1.0);
  trips.emplace_back(iw(0), iw(0), 4.0 * ih2);
  trips.emplace_back(iw(0), iw(1), -4.0 * ih2);
  trips.emplace_back(im(0), im(0), -4.0 * d_rigidity * ih2);
  trips.emplace_back(im(0), im(1), 4.0 * d_rigidity * ih2);
  trips.emplace_back(im(0), iw(0), k_foundation);
  rhs[im(0)] = cell_pressure(0);

  for (int i = 1; i < n; ++i) {
    const double ri = i * h;
    const double lo_c = ih2 - 1.0 / (2.0 * h * ri);
    const double hi_c = ih2 + 1.0 / (2.0 * h * ri);
    // M_i - lap(w)_i = 0
    trips.emplace_back(iw(i), im(i), 1.0);
    trips.emplace_back(iw(i), iw(i - 1), -lo_c);
    trips.emplace_back(iw(i), iw(i), 2.0 * ih2);
    trips.emplace_back(iw(i), iw(i + 1), -hi_c);
    // D lap(M)_i + k w_i = q_i
    trips.emplace_back(im(i), im(i - 1), d_rigidity * lo_c);
    trips.emplace_back(im(i), im(i), -2.0 * d_rigidity * ih2);
    trips.emplace_back(im(i), im(i + 1), d_rigidity * hi_c);
    trips.emplace_back(im(i), iw(i), k_foundation);
    rhs[im(i)] = cell_pressure(i);
  }

  // Clamped far edge: w_n = 0 and w'(R) = 0 (ghost w_{n+1} = w_{n-1}).
  trips.emplace_back(iw(n), im(n), 1.0);
  trips.emplace_back(iw(n), iw(n - 1), -2.0 * ih2);
  trips.emplace_back(im(n), iw(n), 1.0);
  rhs[im(n)] = 0.0;

  Eigen::SparseMatrix<double> mat(2 * (n + 1), 2 * (n + 1));
  mat.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.analyzePattern(mat);
  solver.factorize(mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("winkler_plate: factorization failed");
  const Eigen::VectorXd x = solver.solve(rhs);
  const double residual = (mat * x - rhs).norm() / rhs.norm();
  if (solver.info() != Eigen::Success || residual > 1e-8)
    throw std::runtime_error("winkler_plate: solve did not converge, residual " +
                             std::to_string(residual));

  std::vector<double> out;
  out.reserve(offsets.size());
  for (double r : offsets) {
    const double s = r / h;
    int i = static_cast<int>(s);
    if (i >= n) i = n - 1;
    const double t = s - i;
    out.push_back((1.0 - t) * x[iw(i)] + t * x[iw(i + 1)]);
  }
  return out;
}

DeflectionBasin winkler_plate_basin(double h_eq, double e_slab, double nu, double k_foundation,
                                    const FwdLoad& load, const WinklerPlateConfig& cfg) {
  const double d = flexural_rigidity(e_slab, h_eq, nu);
  DeflectionBasin b;
  b.offsets.assign(kStandardSensorOffsets.begin(), kStandardSensorOffsets.end());
  b.deflections = winkler_plate_deflections(d, k_foundation, load, b.offsets, cfg);
  return b;
}

}  // namespace pavek
