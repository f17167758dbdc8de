#include "gsqg/geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gsqg/error.hpp"

namespace gsqg {

namespace {

void check_aliasing(const FourierBoundary& bnd, const UnitGrid& grid) {
  if (grid.M < 2 * (bnd.N() + 1))
    warn("grid of " + std::to_string(grid.M) + " nodes aliases a boundary with N=" +
         std::to_string(bnd.N()));
}

// p(z) = sum b_n z^n and z^2 p'(z) by Horner.
void horner(const std::vector<double>& b, cplx z, cplx& p, cplx& zzdp) {
  cplx v = 0.0, d = 0.0;
  for (int n = static_cast<int>(b.size()) - 1; n >= 0; --n) {
    d = d * z + v;
    v = v * z + b[n];
  }
  p = v;
  zzdp = z * z * d;
}

}  // namespace

FourierBoundary identity_boundary(int N) {
  return FourierBoundary{std::vector<double>(N + 1, 0.0), 1.0};
}

FourierBoundary ellipse_boundary(double Q, int N) {
  FourierBoundary b = identity_boundary(std::max(N, 1));
  b.coeffs[1] = Q;
  return b;
}

FourierBoundary mode_direction(int n, int N) {
  FourierBoundary h{std::vector<double>(std::max(N, n) + 1, 0.0), 0.0};
  h.coeffs[n] = 1.0;
  return h;
}

double UnitGrid::angle(int j) const {
  return 2.0 * std::numbers::pi * (j + (offset ? 0.5 : 0.0)) / M;
}

cplx UnitGrid::node(int j) const {
  const double t = angle(j);
  return {std::cos(t), std::sin(t)};
}

std::vector<cplx> UnitGrid::nodes() const {
  std::vector<cplx> w(M);
  for (int j = 0; j < M; ++j) w[j] = node(j);
  return w;
}

UnitGrid make_grid(int M, bool offset) {
  if (M < 4 || M % 2 != 0)
    throw Error(ErrorKind::invalid_input, "grid size must be even and >= 4, got " + std::to_string(M));
  return UnitGrid{M, offset};
}

int default_grid_size(int N) { return 16 * (N + 1); }

UnitGrid default_grid(const FourierBoundary& bnd) {
  return make_grid(default_grid_size(std::max(bnd.N(), 1)), true);
}

cplx map_at(const FourierBoundary& bnd, cplx w) {
  cplx p, zzdp;
  horner(bnd.coeffs, std::conj(w), p, zzdp);
  return bnd.scale * w + p;
}

cplx deriv_at(const FourierBoundary& bnd, cplx w) {
  cplx p, zzdp;
  horner(bnd.coeffs, std::conj(w), p, zzdp);
  return bnd.scale - zzdp;
}

std::vector<cplx> eval_map(const FourierBoundary& bnd, const UnitGrid& grid) {
  check_aliasing(bnd, grid);
  std::vector<cplx> out(grid.M);
  for (int j = 0; j < grid.M; ++j) out[j] = map_at(bnd, grid.node(j));
  return out;
}

std::vector<cplx> eval_deriv(const FourierBoundary& bnd, const UnitGrid& grid) {
  check_aliasing(bnd, grid);
  std::vector<cplx> out(grid.M);
  for (int j = 0; j < grid.M; ++j) out[j] = deriv_at(bnd, grid.node(j));
  return out;
}

std::vector<cplx> eval_conj_deriv(const FourierBoundary& bnd, const UnitGrid& grid) {
  std::vector<cplx> d = eval_deriv(bnd, grid);
  for (int j = 0; j < grid.M; ++j) {
    const cplx wb = std::conj(grid.node(j));
    d[j] = -wb * wb * std::conj(d[j]);
  }
  return d;
}

double min_abs_deriv(const FourierBoundary& bnd, int M) {
  const UnitGrid g{M, true};
  double mn = INFINITY;
  for (int j = 0; j < M; ++j) mn = std::min(mn, std::abs(deriv_at(bnd, g.node(j))));
  return mn;
}

int symmetry_fold(const FourierBoundary& bnd) {
  int f = 0;
  for (int n = 0; n <= bnd.N(); ++n)
    if (bnd.coeffs[n] != 0.0) f = std::gcd(f, n + 1);
  return f;
}

Dilation dilate(const FourierBoundary& bnd, double lambda, double alpha) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::domain, "dilate: lambda must be positive");
  Dilation d{bnd, std::pow(lambda, -alpha)};
  d.boundary.scale *= lambda;
  for (double& c : d.boundary.coeffs) c *= lambda;
  return d;
}

FourierBoundary embed_mfold(const MFoldBoundary& red, int N) {
  const int m = red.m;
  if (m < 2) throw Error(ErrorKind::invalid_input, "embed_mfold: m must be >= 2");
  const int K = static_cast<int>(red.a.size());
  if (N < 0) N = std::max(K * m - 1, m - 1);
  if (N < m - 1) throw Error(ErrorKind::invalid_input, "embed_mfold: N must be >= m-1");
  FourierBoundary b = identity_boundary(N);
  for (int k = 0; k < K; ++k) {
    const int n = (k + 1) * m - 1;
    if (n <= N) {
      b.coeffs[n] = red.a[k];
    } else if (red.a[k] != 0.0) {
      throw Error(ErrorKind::invalid_input,
                  "embed_mfold: coefficient of mode " + std::to_string(n) + " exceeds N");
    }
  }
  return b;
}

MFoldProjection project_mfold(const FourierBoundary& bnd, int m, bool strict) {
  if (m < 2) throw Error(ErrorKind::invalid_input, "project_mfold: m must be >= 2");
  MFoldProjection p;
  p.boundary.m = m;
  double e2 = 0.0;
  for (int n = 0; n <= bnd.N(); ++n) {
    if ((n + 1) % m == 0) {
      p.boundary.a.push_back(bnd.coeffs[n]);
    } else {
      e2 += bnd.coeffs[n] * bnd.coeffs[n];
    }
  }
  p.discarded_energy = std::sqrt(e2);
  if (strict && p.discarded_energy > 1e-12)
    throw Error(ErrorKind::not_symmetric, "project_mfold: boundary is not " + std::to_string(m) +
                                              "-fold (discarded energy " +
                                              std::to_string(p.discarded_energy) + ")");
  return p;
}

}  // namespace gsqg
