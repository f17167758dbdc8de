#include "gsqg/linearization.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/specfun.hpp"
#include "kernel_engine.hpp"

namespace gsqg {

namespace {

FourierBoundary padded(const FourierBoundary& b, int N) {
  FourierBoundary p = b;
  if (p.N() < N) p.coeffs.resize(N + 1, 0.0);
  return p;
}

FourierBoundary axpy(const FourierBoundary& b, double t, const FourierBoundary& h) {
  FourierBoundary p = padded(b, h.N());
  p.scale += t * h.scale;
  for (int n = 0; n <= h.N(); ++n) p.coeffs[n] += t * h.coeffs[n];
  return p;
}

void check_rows(const UnitGrid& grid, int N) {
  if (N + 2 > grid.M / 2)
    throw Error(ErrorKind::invalid_input, "grid of " + std::to_string(grid.M) +
                                              " nodes cannot resolve sine mode " + std::to_string(N + 1));
}

Eigen::VectorXd sine_rows(const ResidualField& f, int N) {
  Eigen::VectorXd v(N + 1);
  for (int r = 0; r <= N; ++r) v[r] = f.sine_coeffs[r + 1];
  return v;
}

ResidualField fd_direction(const FourierBoundary& bnd, const FourierBoundary& h, double omega,
                           double alpha, const UnitGrid& grid, double eps,
                           const QuadratureOptions& opts) {
  const ResidualField p = residual_field(omega, axpy(bnd, eps, h), alpha, grid, opts);
  const ResidualField m = residual_field(omega, axpy(bnd, -eps, h), alpha, grid, opts);
  std::vector<double> v(grid.M);
  for (int j = 0; j < grid.M; ++j) v[j] = (p.values[j] - m.values[j]) / (2.0 * eps);
  return make_residual_field(grid, std::move(v));
}

}  // namespace

MultiplierSpectrum multiplier_at_disc(double alpha, double omega, int N) {
  if (N < 2) throw Error(ErrorKind::invalid_input, "multiplier_at_disc: N must be >= 2");
  MultiplierSpectrum s{alpha, omega, N, std::vector<double>(N + 1)};
  s.mult[0] = 0.5 * omega;
  for (int n = 1; n <= N; ++n) s.mult[n] = 0.5 * (n + 1) * (omega - omega_dispersion(alpha, n + 1));
  return s;
}

std::vector<ResidualField> gateaux_derivatives(const FourierBoundary& bnd,
                                               const std::vector<FourierBoundary>& dirs,
                                               double omega, double alpha, const UnitGrid& grid,
                                               const QuadratureOptions& opts) {
  std::vector<ResidualField> out;
  out.reserve(dirs.size());
  if (alpha == 1.0) {
    for (const FourierBoundary& h : dirs)
      out.push_back(fd_direction(bnd, h, omega, alpha, grid, 1e-6, opts));
    return out;
  }
  const int fold = detail::target_fold(grid.M, bnd, dirs, opts.use_symmetry);
  auto rows = detail::linearized_values(bnd, dirs, omega, alpha, grid, fold);
  for (auto& v : rows) out.push_back(make_residual_field(grid, std::move(v)));
  return out;
}

ResidualField gateaux_derivative(const FourierBoundary& bnd, const FourierBoundary& h, double omega,
                                 double alpha, const UnitGrid& grid, const QuadratureOptions& opts) {
  return std::move(gateaux_derivatives(bnd, {h}, omega, alpha, grid, opts).front());
}

ResidualField omega_derivative(const FourierBoundary& bnd, const UnitGrid& grid) {
  const std::vector<cplx> z = eval_map(bnd, grid), dz = eval_deriv(bnd, grid);
  std::vector<double> v(grid.M);
  for (int j = 0; j < grid.M; ++j) v[j] = (z[j] * std::conj(grid.node(j) * dz[j])).imag();
  return make_residual_field(grid, std::move(v));
}

ResidualField mixed_derivative(const FourierBoundary& bnd, const FourierBoundary& h,
                               const UnitGrid& grid) {
  const std::vector<cplx> z = eval_map(bnd, grid), dz = eval_deriv(bnd, grid);
  const std::vector<cplx> hz = eval_map(h, grid), dh = eval_deriv(h, grid);
  std::vector<double> v(grid.M);
  for (int j = 0; j < grid.M; ++j) {
    const cplx wb = std::conj(grid.node(j));
    v[j] = (z[j] * wb * std::conj(dh[j]) + hz[j] * wb * std::conj(dz[j])).imag();
  }
  return make_residual_field(grid, std::move(v));
}

namespace {

JacobianMatrix jacobian_frame(const FourierBoundary& bnd, const UnitGrid& grid, int N) {
  JacobianMatrix J;
  J.entries.resize(N + 1, N + 1);
  J.mixed.resize(N + 1, N + 1);
  J.omega_column = sine_rows(omega_derivative(bnd, grid), N);
  for (int n = 0; n <= N; ++n)
    J.mixed.col(n) = sine_rows(mixed_derivative(bnd, mode_direction(n, N), grid), N);
  return J;
}

}  // namespace

JacobianMatrix numerical_jacobian(const FourierBoundary& bnd, double omega, double alpha,
                                  const UnitGrid& grid, double eps, int N) {
  if (!(eps >= 1e-8 && eps <= 1e-4))
    throw Error(ErrorKind::invalid_input, "numerical_jacobian: eps must lie in [1e-8, 1e-4]");
  if (N < 0) N = bnd.N();
  check_rows(grid, N);
  JacobianMatrix J = jacobian_frame(bnd, grid, N);
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    const FourierBoundary h = mode_direction(n, N);
    const Eigen::VectorXd c1 = sine_rows(fd_direction(bnd, h, omega, alpha, grid, eps, {}), N);
    const Eigen::VectorXd c2 = sine_rows(fd_direction(bnd, h, omega, alpha, grid, 2.0 * eps, {}), N);
    J.entries.col(n) = c1;
    worst = std::max(worst, (c1 - c2).cwiseAbs().maxCoeff() / std::max(1.0, c1.cwiseAbs().maxCoeff()));
  }
  if (worst > 1e-5)
    warn("numerical_jacobian: step sensitivity " + std::to_string(worst) + " exceeds 1e-5");
  return J;
}

JacobianMatrix gateaux_jacobian(const FourierBoundary& bnd, double omega, double alpha,
                                const UnitGrid& grid, int N) {
  if (N < 0) N = bnd.N();
  check_rows(grid, N);
  JacobianMatrix J = jacobian_frame(bnd, grid, N);
  // One pass per column keeps the per-direction symmetry reduction.
  for (int n = 0; n <= N; ++n) {
    const ResidualField f = gateaux_derivative(bnd, mode_direction(n, N), omega, alpha, grid);
    J.entries.col(n) = sine_rows(f, N);
  }
  return J;
}

KernelInfo kernel_analysis(const Eigen::MatrixXd& J, int mode, double rel_tol) {
  KernelInfo k;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  k.sigma_max = s[0];
  k.sigma_min = s[s.size() - 1];
  for (int i = 0; i < s.size(); ++i)
    if (s[i] < rel_tol * k.sigma_max) ++k.dimension;
  const Eigen::VectorXd v = svd.matrixV().col(s.size() - 1);
  k.mode_mass = v[mode] * v[mode] / v.squaredNorm();
  Eigen::MatrixXd R(J.rows(), J.cols() - 1);
  R << J.leftCols(mode), J.rightCols(J.cols() - mode - 1);
  Eigen::JacobiSVD<Eigen::MatrixXd> svr(R);
  k.complement_sigma_min = svr.singularValues()[svr.singularValues().size() - 1];
  return k;
}

std::pair<double, double> default_scan_window(double alpha, int m) {
  const double lo = m == 2 ? 0.0 : omega_dispersion(alpha, m - 1);
  const double mid = omega_dispersion(alpha, m);
  const double hi = omega_dispersion(alpha, m + 1);
  return {0.5 * (lo + mid), 0.5 * (mid + hi)};
}

namespace {

int default_disc_N(int m) { return std::max(16, 2 * m); }

double disc_entry(double alpha, int m, double omega, const UnitGrid& grid, int N) {
  const FourierBoundary id = identity_boundary(N);
  return gateaux_derivative(id, mode_direction(m - 1, N), omega, alpha, grid).sine_coeffs[m];
}

}  // namespace

ScanResult bifurcation_scan(double alpha, int m, std::pair<double, double> window,
                            const UnitGrid& grid, int N) {
  if (m < 2) throw Error(ErrorKind::invalid_input, "bifurcation_scan: m must be >= 2");
  if (N < 0) N = default_disc_N(m);
  check_rows(grid, N);
  double lo = window.first, hi = window.second;
  double flo = disc_entry(alpha, m, lo, grid, N);
  const double fhi = disc_entry(alpha, m, hi, grid, N);
  if (!(flo * fhi < 0.0))
    throw Error(ErrorKind::no_bracket, "bifurcation_scan: window does not bracket a sign change");
  ScanResult r;
  r.alpha = alpha;
  r.m = m;
  while (hi - lo > 1e-14 * std::max(1.0, std::abs(hi)) && r.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    const double fm = disc_entry(alpha, m, mid, grid, N);
    ++r.iterations;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  r.omega_located = 0.5 * (lo + hi);
  r.omega_closed_form = omega_dispersion(alpha, m);
  r.gap = std::abs(r.omega_located - r.omega_closed_form);
  const JacobianMatrix J = gateaux_jacobian(identity_boundary(N), r.omega_located, alpha, grid, N);
  r.kernel = kernel_analysis(J.entries, m - 1);
  return r;
}

TransversalityReport transversality_report(double alpha, int m, const UnitGrid& grid, double tol,
                                           const Eigen::VectorXd* column, int N) {
  if (N < 0) N = default_disc_N(m);
  const JacobianMatrix J =
      gateaux_jacobian(identity_boundary(N), omega_dispersion(alpha, m), alpha, grid, N);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J.entries, Eigen::ComputeFullU);
  const Eigen::Index last = svd.singularValues().size() - 1;
  const Eigen::VectorXd u = svd.matrixU().col(last);
  const Eigen::VectorXd c = column ? *column : Eigen::VectorXd(J.mixed.col(m - 1));
  TransversalityReport t;
  t.sigma_min = svd.singularValues()[last];
  t.projection = std::abs(u.dot(c)) / c.norm();
  t.complement_sigma_min = kernel_analysis(J.entries, m - 1).complement_sigma_min;
  t.transversal = t.projection > tol;
  return t;
}

bool transversality_check(double alpha, int m, const UnitGrid& grid, double tol) {
  return transversality_report(alpha, m, grid, tol).transversal;
}

double sqg_log_slope(int n_lo, int n_hi) {
  const int samples = 64;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < samples; ++i) {
    const double t = std::log(n_lo) + (std::log(n_hi) - std::log(n_lo)) * i / (samples - 1);
    const int n = static_cast<int>(std::lround(std::exp(t)));
    const double x = std::log(n), y = omega_dispersion(1.0, n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (samples * sxy - sx * sy) / (samples * sxx - sx * sx);
}

}  // namespace gsqg
