#pragma once

#include <vector>

#include "gsqg/geometry.hpp"

namespace gsqg {

// (1/2 pi) int e^{i j eta} |1 - e^{i eta}|^{-alpha} d eta, for integer j.
double circle_moment(double alpha, int j);

// Scalar factors of the basic singular integrals; the powers of w are
// stripped (w^{n+1} for I, w^{n+2} for J, conj(w)^n for Z).
double singular_moment_I(double alpha, int n);
double singular_moment_J(double alpha, int n);
double singular_moment_Z(double alpha, int n);

struct MomentTable {
  double alpha = 0.0;
  int max_n = 0;
  std::vector<double> I, J, Z;
};

MomentTable moment_table(double alpha, int max_n);

// alpha = 1 analogues: factor of w^n and of w^{n+2}.
double sqg_moment_1(int n);
double sqg_moment_2(int n);

struct ResidualField {
  UnitGrid grid;
  std::vector<double> values;
  std::vector<double> sine_coeffs;    // g_n, index n
  std::vector<double> cosine_coeffs;  // should vanish

  double norm() const;             // sup |g_n|
  double cosine_residue() const;   // sup |c_n|
};

ResidualField make_residual_field(const UnitGrid& grid, std::vector<double> values);

struct QuadratureOptions {
  // Evaluate only one symmetry sector of targets and copy the rest.
  bool use_symmetry = true;
};

// C_alpha times the principal integral of phi'(tau)/|phi(w)-phi(tau)|^alpha,
// spectral product quadrature against exact moments.
std::vector<cplx> s_phi(const FourierBoundary& bnd, double alpha, const UnitGrid& grid,
                        const QuadratureOptions& opts = {});

// Independent check: midpoint trapezoid with the local zeta correction.
// Each target gets its own source ring of `sources` nodes offset by half a step.
std::vector<cplx> s_phi_trapezoid(const FourierBoundary& bnd, double alpha,
                                  const std::vector<cplx>& targets, int sources);

ResidualField functional_G(double omega, const FourierBoundary& bnd, double alpha,
                           const UnitGrid& grid, const QuadratureOptions& opts = {});

// alpha = 1 functional with the subtracted numerator; no C_alpha.
ResidualField functional_G_sqg(double omega, const FourierBoundary& bnd, const UnitGrid& grid,
                               const QuadratureOptions& opts = {});

// functional_G for alpha < 1, functional_G_sqg for alpha = 1.
ResidualField residual_field(double omega, const FourierBoundary& bnd, double alpha,
                             const UnitGrid& grid, const QuadratureOptions& opts = {});

// Coefficient of (w^4 - conj(w)^4) in G(Omega, w + Q conj(w)).
double ellipse_fourth_coefficient(double omega, double Q, double alpha, const UnitGrid& grid);

// Ratio of the two circle integrals that decide the ellipse obstruction.
double ellipse_moment_ratio(double alpha);

}  // namespace gsqg
