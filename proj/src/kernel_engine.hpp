#pragma once

#include <memory>
#include <vector>

#include "gsqg/geometry.hpp"

namespace gsqg::detail {

// Per (alpha, M) data for product quadrature on an M-node circle grid.
struct KernelTables {
  int M = 0;
  double alpha = 0.0;
  // Circulant weights: the integral against |w_j - tau|^{-alpha} of the trig
  // interpolant of g is w_j sum_l g_l V[(l-j) mod M]. For alpha = 1 the
  // weights use the subtracted moments and carry no w_j factor.
  std::vector<cplx> V;
  std::vector<double> chord2;   // |1 - e^{2 pi i d/M}|^2
  std::vector<cplx> inv_diff;   // 1 / (1 - e^{2 pi i d/M}), d != 0
};

std::shared_ptr<const KernelTables> kernel_tables(double alpha, int M);

struct SampledMap {
  std::vector<cplx> w, z, dz;
};

SampledMap sample(const FourierBoundary& bnd, const UnitGrid& grid);

// Number of symmetry sectors that can share one evaluation.
int target_fold(int M, const FourierBoundary& bnd, const std::vector<FourierBoundary>& dirs,
                bool use_symmetry);

// Principal integral of phi'(tau)/|phi(w)-phi(tau)|^alpha over the circle (no C_alpha).
std::vector<cplx> principal_integral(const SampledMap& s, double alpha, const UnitGrid& grid,
                                     int fold);

// Mean over tau of (tau phi'(tau) - w phi'(w)) / |phi(w) - phi(tau)|.
std::vector<cplx> sqg_integral(const SampledMap& s, const UnitGrid& grid, int fold);

// Directional derivative of the residual values, one row per direction.
std::vector<std::vector<double>> linearized_values(const FourierBoundary& bnd,
                                                   const std::vector<FourierBoundary>& dirs,
                                                   double omega, double alpha,
                                                   const UnitGrid& grid, int fold);

}  // namespace gsqg::detail
