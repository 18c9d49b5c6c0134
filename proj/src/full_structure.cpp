#include "pavek/full_structure.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace pavek {
namespace {

constexpr double kGauss2[2] = {-0.5773502691896257, 0.5773502691896257};
constexpr double kGauss3x[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kGauss3w[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

// Axisymmetric bilinear-quad stiffness for a rectangular element
// [r1,r2]x[z1,z2]; dof order (u1,w1,...,u4,w4), nodes CCW from (r1,z1).
// The common 2*pi factor is dropped consistently (stiffness and loads).
void quad_stiffness(double r1, double r2, double z1, double z2, double e_mod, double nu,
                    std::array<std::array<double, 8>, 8>& ke) {
  const double lam = e_mod * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const double mu = e_mod / (2.0 * (1.0 + nu));
  const double d00 = lam + 2.0 * mu;
  // D rows: [err, ezz, ett, grz]
  const double dmat[4][4] = {{d00, lam, lam, 0},
                             {lam, d00, lam, 0},
                             {lam, lam, d00, 0},
                             {0, 0, 0, mu}};
  const double rv[4] = {r1, r2, r2, r1};
  const double zv[4] = {z1, z1, z2, z2};
  for (auto& row : ke) row.fill(0.0);
  for (double xi : kGauss2) {
    for (double et : kGauss2) {
      const double n[4] = {(1 - xi) * (1 - et) / 4, (1 + xi) * (1 - et) / 4,
                           (1 + xi) * (1 + et) / 4, (1 - xi) * (1 + et) / 4};
      const double dxi[4] = {-(1 - et) / 4, (1 - et) / 4, (1 + et) / 4, -(1 + et) / 4};
      const double det_[4] = {-(1 - xi) / 4, -(1 + xi) / 4, (1 + xi) / 4, (1 - xi) / 4};
      double j00 = 0, j01 = 0, j10 = 0, j11 = 0, rr = 0;
      for (int i = 0; i < 4; ++i) {
        j00 += dxi[i] * rv[i];
        j01 += dxi[i] * zv[i];
        j10 += det_[i] * rv[i];
        j11 += det_[i] * zv[i];
        rr += n[i] * rv[i];
      }
      const double detj = j00 * j11 - j01 * j10;
      const double i00 = j11 / detj, i01 = -j01 / detj, i10 = -j10 / detj, i11 = j00 / detj;
      double b[4][8] = {};
      for (int i = 0; i < 4; ++i) {
        const double dr = i00 * dxi[i] + i01 * det_[i];
        const double dz = i10 * dxi[i] + i11 * det_[i];
        b[0][2 * i] = dr;
        b[1][2 * i + 1] = dz;
        b[2][2 * i] = n[i] / rr;
        b[3][2 * i] = dz;
        b[3][2 * i + 1] = dr;
      }
      const double wgt = detj * rr;  // unit Gauss weights for 2x2
      for (int p = 0; p < 8; ++p) {
        double db[4];
        for (int q = 0; q < 4; ++q)
          db[q] = dmat[q][0] * b[0][p] + dmat[q][1] * b[1][p] + dmat[q][2] * b[2][p] +
                  dmat[q][3] * b[3][p];
        for (int q = p; q < 8; ++q) {
          const double v =
              (b[0][q] * db[0] + b[1][q] * db[1] + b[2][q] * db[2] + b[3][q] * db[3]) * wgt;
          ke[p][q] += v;
          if (q != p) ke[q][p] += v;
        }
      }
    }
  }
}

}  // namespace

std::vector<double> full_structure_deflections(const PavementSection& sec, const FwdLoad& load,
                                               std::span<const double> offsets,
                                               std::optional<double> e_base_override,
                                               const FullStructureConfig& cfg) {
  sec.validate();
  load.validate();
  const double e_base = e_base_override.value_or(sec.e_base);
  if (!(e_base > 0)) throw std::invalid_argument("full_structure: base modulus must be positive");

  // Plate rigidity: slab inertia plus the bonded share of the composite
  // coupling (Eq-19 split: the base course's own inertia lives in the
  // continuum block below).
  PavementSection tsec_in = sec;
  tsec_in.e_base = e_base;
  const TransformedSection ts = transformed_section(tsec_in);
  const double ei = sec.e_slab * (ts.i_slab + sec.delta * ts.coupling);
  const double d_rigidity = ei / (1.0 - sec.nu_slab * sec.nu_slab);

  // Radial grid, sinh-graded toward the axis.
  const int nr = cfg.radial_cells;
  std::vector<double> r(nr + 1);
  for (int i = 0; i <= nr; ++i) {
    const double g = double(i) / nr;
    r[i] = cfg.domain_radius * std::sinh(cfg.radial_grading * g) / std::sinh(cfg.radial_grading);
  }
  r[0] = 0.0;

  // Block rows: base layer then power-graded subgrade. z positive downward
  // from the slab/base contact plane.
  const int nzb = std::max(3, std::min(8, int(std::lround(sec.h_b / 0.04))));
  const int nzg = cfg.subgrade_cells;
  std::vector<double> z;
  for (int i = 0; i <= nzb; ++i) z.push_back(sec.h_b * i / nzb);
  for (int i = 1; i <= nzg; ++i)
    z.push_back(sec.h_b + cfg.subgrade_depth * std::pow(double(i) / nzg, cfg.subgrade_grading));
  const int nzn = int(z.size());
  const int n_nodes = nzn * (nr + 1);
  const auto nid = [&](int iz, int ir) { return iz * (nr + 1) + ir; };

  // Dofs: block (u, w) per node, then plate rotations per surface node.
  const int ndof = 2 * n_nodes + (nr + 1);
  const auto dof_u = [&](int iz, int ir) { return 2 * nid(iz, ir); };
  const auto dof_w = [&](int iz, int ir) { return 2 * nid(iz, ir) + 1; };
  const auto dof_th = [&](int ir) { return 2 * n_nodes + ir; };

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(size_t(nzn) * nr * 64 + size_t(nr) * 16);

  std::array<std::array<double, 8>, 8> ke;
  for (int iz = 0; iz < nzn - 1; ++iz) {
    const double zmid = 0.5 * (z[iz] + z[iz + 1]);
    const bool in_base = zmid < sec.h_b;
    const double e_mod = in_base ? e_base : sec.e_subgrade;
    const double nu = in_base ? sec.nu_base : sec.nu_subgrade;
    for (int ir = 0; ir < nr; ++ir) {
      quad_stiffness(r[ir], r[ir + 1], z[iz], z[iz + 1], e_mod, nu, ke);
      const int nodes[4] = {nid(iz, ir), nid(iz, ir + 1), nid(iz + 1, ir + 1), nid(iz + 1, ir)};
      int dof[8];
      for (int i = 0; i < 4; ++i) {
        dof[2 * i] = 2 * nodes[i];
        dof[2 * i + 1] = 2 * nodes[i] + 1;
      }
      for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) trips.emplace_back(dof[p], dof[q], ke[p][q]);
    }
  }

  // Hermite plate bending elements on the surface row; dof order
  // (w1, th1, w2, th2) with the rotation dofs scaled by the element length.
  const double db00 = d_rigidity, db01 = d_rigidity * sec.nu_slab;
  for (int e = 0; e < nr; ++e) {
    const double el = r[e + 1] - r[e];
    double kp[4][4] = {};
    for (int g = 0; g < 3; ++g) {
      const double s = 0.5 * (kGauss3x[g] + 1.0);
      const double rr = r[e] + s * el;
      const double h2[4] = {(-6 + 12 * s) / (el * el), (-4 + 6 * s) / el, (6 - 12 * s) / (el * el),
                            (-2 + 6 * s) / el};
      const double h1[4] = {(-6 * s + 6 * s * s) / el, 1 - 4 * s + 3 * s * s,
                            (6 * s - 6 * s * s) / el, -2 * s + 3 * s * s};
      // curvature rows: [w'', w'/r]
      const double b0[4] = {h2[0], h2[1], h2[2], h2[3]};
      const double b1[4] = {h1[0] / rr, h1[1] / rr, h1[2] / rr, h1[3] / rr};
      const double wgt = rr * (el / 2.0) * kGauss3w[g];
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          kp[p][q] += (b0[p] * (db00 * b0[q] + db01 * b1[q]) +
                       b1[p] * (db01 * b0[q] + db00 * b1[q])) *
                      wgt;
    }
    const int dof[4] = {dof_w(0, e), dof_th(e), dof_w(0, e + 1), dof_th(e + 1)};
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q) trips.emplace_back(dof[p], dof[q], kp[p][q]);
  }

  // Consistent plate load: uniform pressure over r <= load.radius.
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ndof);
  const double p = load.pressure();
  for (int e = 0; e < nr; ++e) {
    if (r[e] >= load.radius) break;
    const double el = r[e + 1] - r[e];
    const double lc = std::min(r[e + 1], load.radius) - r[e];
    for (int g = 0; g < 3; ++g) {
      const double sp = 0.5 * (kGauss3x[g] + 1.0) * lc;  // physical offset within element
      const double s = sp / el;
      const double rr = r[e] + sp;
      const double hv[4] = {1 - 3 * s * s + 2 * s * s * s, (s - 2 * s * s + s * s * s) * el,
                            3 * s * s - 2 * s * s * s, (-s * s + s * s * s) * el};
      const double wgt = p * rr * (lc / 2.0) * kGauss3w[g];
      rhs[dof_w(0, e)] += hv[0] * wgt;
      rhs[dof_th(e)] += hv[1] * wgt;
      rhs[dof_w(0, e + 1)] += hv[2] * wgt;
      rhs[dof_th(e + 1)] += hv[3] * wgt;
    }
  }

  // Boundary conditions: axis u = 0 and plate rotation 0; outer wall and
  // bottom fully fixed (including the plate end at the wall).
  std::vector<bool> fixed(ndof, false);
  for (int iz = 0; iz < nzn; ++iz) {
    fixed[dof_u(iz, 0)] = true;
    fixed[dof_u(iz, nr)] = true;
    fixed[dof_w(iz, nr)] = true;
  }
  for (int ir = 0; ir <= nr; ++ir) {
    fixed[dof_u(nzn - 1, ir)] = true;
    fixed[dof_w(nzn - 1, ir)] = true;
  }
  fixed[dof_th(0)] = true;
  fixed[dof_th(nr)] = true;

  // Condense fixed dofs by renumbering.
  std::vector<int> remap(ndof, -1);
  int nfree = 0;
  for (int i = 0; i < ndof; ++i)
    if (!fixed[i]) remap[i] = nfree++;
  std::vector<Eigen::Triplet<double>> ft;
  ft.reserve(trips.size());
  for (const auto& t : trips) {
    const int i = remap[t.row()], j = remap[t.col()];
    if (i >= 0 && j >= 0) ft.emplace_back(i, j, t.value());
  }
  Eigen::VectorXd b(nfree);
  for (int i = 0; i < ndof; ++i)
    if (remap[i] >= 0) b[remap[i]] = rhs[i];

  Eigen::SparseMatrix<double> mat(nfree, nfree);
  mat.setFromTriplets(ft.begin(), ft.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("full_structure: factorization failed");
  const Eigen::VectorXd x = solver.solve(b);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("full_structure: solve failed");

  // Surface deflection, linear interpolation on the graded grid.
  const auto surface_w = [&](int ir) {
    const int d = remap[dof_w(0, ir)];
    return d >= 0 ? x[d] : 0.0;
  };
  std::vector<double> out;
  out.reserve(offsets.size());
  for (double ro : offsets) {
    if (ro >= r[nr]) {
      out.push_back(0.0);
      continue;
    }
    int i = int(std::upper_bound(r.begin(), r.end(), ro) - r.begin()) - 1;
    if (i >= nr) i = nr - 1;
    const double t = (ro - r[i]) / (r[i + 1] - r[i]);
    out.push_back((1.0 - t) * surface_w(i) + t * surface_w(i + 1));
  }
  return out;
}

DeflectionBasin full_structure_basin(const PavementSection& sec, const FwdLoad& load,
                                     std::optional<double> e_base_override,
                                     const FullStructureConfig& cfg) {
  DeflectionBasin basin;
  basin.offsets.assign(kStandardSensorOffsets.begin(), kStandardSensorOffsets.end());
  basin.deflections = full_structure_deflections(sec, load, basin.offsets, e_base_override, cfg);
  return basin;
}

}  // namespace pavek
