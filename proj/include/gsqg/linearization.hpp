#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gsqg/geometry.hpp"
#include "gsqg/kernels.hpp"

namespace gsqg {

// Diagonal action of the linearized functional at the disc:
// direction conj(w)^n goes to mult[n] i (w^{n+1} - conj(w)^{n+1}).
struct MultiplierSpectrum {
  double alpha = 0.0;
  double omega = 0.0;
  int N = 0;
  std::vector<double> mult;
};

MultiplierSpectrum multiplier_at_disc(double alpha, double omega, int N);

// Linearized residual in direction h. alpha in (0,1) uses the closed
// derivative formula; alpha = 1 falls back to central differences.
ResidualField gateaux_derivative(const FourierBoundary& bnd, const FourierBoundary& h,
                                 double omega, double alpha, const UnitGrid& grid,
                                 const QuadratureOptions& opts = {});
std::vector<ResidualField> gateaux_derivatives(const FourierBoundary& bnd,
                                               const std::vector<FourierBoundary>& dirs,
                                               double omega, double alpha, const UnitGrid& grid,
                                               const QuadratureOptions& opts = {});

// d/dOmega of the residual: Im{phi conj(w) conj(phi')}.
ResidualField omega_derivative(const FourierBoundary& bnd, const UnitGrid& grid);
// d/dOmega of the linearized residual in direction h.
ResidualField mixed_derivative(const FourierBoundary& bnd, const FourierBoundary& h,
                               const UnitGrid& grid);

// Rows: sine modes 1..N+1. Columns: perturbation modes conj(w)^n, n = 0..N.
struct JacobianMatrix {
  Eigen::MatrixXd entries;
  Eigen::VectorXd omega_column;  // sine modes of d/dOmega G
  Eigen::MatrixXd mixed;         // d/dOmega of each column
};

// Central differences of the residual with step eps in [1e-8, 1e-4]; warns
// when the step-2eps result differs by more than 1e-5 relative.
JacobianMatrix numerical_jacobian(const FourierBoundary& bnd, double omega, double alpha,
                                  const UnitGrid& grid, double eps = 1e-6, int N = -1);

// Same layout from the derivative formula.
JacobianMatrix gateaux_jacobian(const FourierBoundary& bnd, double omega, double alpha,
                                const UnitGrid& grid, int N = -1);

struct KernelInfo {
  int dimension = 0;           // singular values below rel_tol * largest
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double mode_mass = 0.0;      // weight of the null vector on the given column
  double complement_sigma_min = 0.0;  // with that column removed
};

KernelInfo kernel_analysis(const Eigen::MatrixXd& J, int mode, double rel_tol = 1e-9);

struct ScanResult {
  double alpha = 0.0;
  int m = 0;
  double omega_located = 0.0;
  double omega_closed_form = 0.0;
  double gap = 0.0;
  int iterations = 0;
  KernelInfo kernel;
};

// Default bracket: midpoints to the neighbouring dispersion values.
std::pair<double, double> default_scan_window(double alpha, int m);

// Bisection on the mode-(m-1) diagonal entry of the quadrature-assembled
// disc Jacobian.
ScanResult bifurcation_scan(double alpha, int m, std::pair<double, double> window,
                            const UnitGrid& grid, int N = -1);

struct TransversalityReport {
  bool transversal = false;
  double projection = 0.0;  // |<cokernel, column>| / |column|
  double sigma_min = 0.0;
  double complement_sigma_min = 0.0;
};

// column: replaces the d/dOmega column (tests the negative case).
TransversalityReport transversality_report(double alpha, int m, const UnitGrid& grid, double tol,
                                           const Eigen::VectorXd* column = nullptr, int N = -1);
bool transversality_check(double alpha, int m, const UnitGrid& grid, double tol);

// Least-squares slope of Omega_n^1 against log n over log-spaced n.
double sqg_log_slope(int n_lo, int n_hi);

}  // namespace gsqg
