#pragma once

#include <complex>
#include <vector>

namespace gsqg {

using cplx = std::complex<double>;

// Exterior conformal map restricted to the unit circle:
//   phi(w) = scale * w + sum_{n=0}^{N} coeffs[n] * conj(w)^n.
// scale is 1 except for dilated boundaries; as a perturbation direction it is
// usually 0.
struct FourierBoundary {
  std::vector<double> coeffs;
  double scale = 1.0;

  int N() const { return static_cast<int>(coeffs.size()) - 1; }
};

FourierBoundary identity_boundary(int N);
FourierBoundary ellipse_boundary(double Q, int N = 1);
// Direction h(w) = conj(w)^n with zero leading term, padded to N.
FourierBoundary mode_direction(int n, int N);

// m-fold map: a[k] multiplies conj(w)^{(k+1)m-1}.
struct MFoldBoundary {
  int m = 2;
  std::vector<double> a;
};

struct UnitGrid {
  int M = 0;
  bool offset = false;

  double angle(int j) const;
  cplx node(int j) const;
  std::vector<cplx> nodes() const;
};

// Throws on odd or tiny M.
UnitGrid make_grid(int M, bool offset = true);
// 16 (N+1), the default oversampling for singular evaluations.
int default_grid_size(int N);
UnitGrid default_grid(const FourierBoundary& bnd);

std::vector<cplx> eval_map(const FourierBoundary& bnd, const UnitGrid& grid);
std::vector<cplx> eval_deriv(const FourierBoundary& bnd, const UnitGrid& grid);
// d/dw of conj(phi(w)) on the circle, i.e. -conj(w)^2 conj(phi'(w)).
std::vector<cplx> eval_conj_deriv(const FourierBoundary& bnd, const UnitGrid& grid);

// Pointwise evaluation at arbitrary w on the circle.
cplx map_at(const FourierBoundary& bnd, cplx w);
cplx deriv_at(const FourierBoundary& bnd, cplx w);

// Univalence proxy: min |phi'| over an M-point grid.
double min_abs_deriv(const FourierBoundary& bnd, int M);

// Largest f such that phi(e^{2 pi i/f} w) = e^{2 pi i/f} phi(w) holds for
// the nonzero modes; 0 for the identity (every rotation).
int symmetry_fold(const FourierBoundary& bnd);

struct Dilation {
  FourierBoundary boundary;
  double omega_scale = 1.0;
};

// lambda * phi and the factor lambda^{-alpha} for the angular velocity.
Dilation dilate(const FourierBoundary& bnd, double lambda, double alpha);

FourierBoundary embed_mfold(const MFoldBoundary& red, int N = -1);

struct MFoldProjection {
  MFoldBoundary boundary;
  double discarded_energy = 0.0;  // l2 norm of the non-m-fold coefficients
};

// strict: throw when discarded_energy exceeds 1e-12.
MFoldProjection project_mfold(const FourierBoundary& bnd, int m, bool strict = false);

}  // namespace gsqg
