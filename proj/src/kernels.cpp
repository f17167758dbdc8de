#include "gsqg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "fastpow.hpp"
#include "gsqg/error.hpp"
#include "gsqg/spectral.hpp"
#include "gsqg/specfun.hpp"
#include "kernel_engine.hpp"

namespace gsqg {

namespace {

void require_open_unit(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorKind::domain, std::string(who) + ": alpha must lie in (0,1)");
}

double mu0(double alpha) {
  const double g = std::tgamma(1.0 - 0.5 * alpha);
  return std::tgamma(1.0 - alpha) / (g * g);
}

// (a)_n / (b)_n
double poch_ratio(double a, double b, int n) {
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= (a + k) / (b + k);
  return r;
}

constexpr double min_h2 = 1e-16;  // H >= 1e-8

[[noreturn]] void throw_self_intersection(int j) {
  throw Error(ErrorKind::near_self_intersection,
              "boundary nearly self-intersects at node " + std::to_string(j));
}

}  // namespace

double circle_moment(double alpha, int j) {
  require_open_unit(alpha, "circle_moment");
  const int a = std::abs(j);
  return mu0(alpha) * poch_ratio(0.5 * alpha, 1.0 - 0.5 * alpha, a);
}

double singular_moment_I(double alpha, int n) { return circle_moment(alpha, n + 1); }

double singular_moment_J(double alpha, int n) {
  require_open_unit(alpha, "singular_moment_J");
  return (1.0 + 0.5 * alpha) * mu0(alpha) / (2.0 - alpha) *
         (1.0 - poch_ratio(2.0 + 0.5 * alpha, 2.0 - 0.5 * alpha, n));
}

double singular_moment_Z(double alpha, int n) {
  require_open_unit(alpha, "singular_moment_Z");
  return -0.5 * mu0(alpha) * (1.0 - poch_ratio(0.5 * alpha, -0.5 * alpha, n));
}

MomentTable moment_table(double alpha, int max_n) {
  MomentTable t{alpha, max_n, {}, {}, {}};
  for (int n = 0; n <= max_n; ++n) {
    t.I.push_back(singular_moment_I(alpha, n));
    t.J.push_back(singular_moment_J(alpha, n));
    t.Z.push_back(singular_moment_Z(alpha, n));
  }
  return t;
}

double sqg_moment_1(int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += 1.0 / (2.0 * k + 1.0);
  return -2.0 / std::numbers::pi * s;
}

double sqg_moment_2(int n) {
  double s = 0.0;
  for (int k = 1; k <= n; ++k) s += 1.0 / (2.0 * k + 1.0);
  return 2.0 / std::numbers::pi * s;
}

double ResidualField::norm() const {
  double mx = 0.0;
  for (std::size_t n = 1; n < sine_coeffs.size(); ++n) mx = std::max(mx, std::abs(sine_coeffs[n]));
  return mx;
}

double ResidualField::cosine_residue() const {
  double mx = 0.0;
  for (double c : cosine_coeffs) mx = std::max(mx, std::abs(c));
  return mx;
}

ResidualField make_residual_field(const UnitGrid& grid, std::vector<double> values) {
  TrigCoefficients t = trig_coefficients(values, grid);
  return ResidualField{grid, std::move(values), std::move(t.sine), std::move(t.cosine)};
}

namespace detail {

std::shared_ptr<const KernelTables> kernel_tables(double alpha, int M) {
  static std::mutex mtx;
  static std::map<std::pair<double, int>, std::shared_ptr<const KernelTables>> cache;
  std::lock_guard lock(mtx);
  auto it = cache.find({alpha, M});
  if (it != cache.end()) return it->second;

  auto t = std::make_shared<KernelTables>();
  t->M = M;
  t->alpha = alpha;
  // moment of Fourier mode k of the smooth factor
  std::vector<double> mom(M / 2 + 2);
  if (alpha == 1.0) {
    for (int k = 0; k <= M / 2 + 1; ++k) mom[k] = sqg_moment_1(k);
  } else {
    mom[0] = mu0(alpha);
    for (int k = 0; k <= M / 2; ++k)
      mom[k + 1] = mom[k] * (0.5 * alpha + k) / (1.0 - 0.5 * alpha + k);
  }
  // alpha < 1: mode k of g contributes mu_{k+1} w^{k+1}; alpha = 1: nu_|k| w^k.
  auto weight = [&](int k) { return alpha == 1.0 ? mom[std::abs(k)] : mom[std::abs(k + 1)]; };
  std::vector<cplx> a(M);
  for (int k = -M / 2 + 1; k < M / 2; ++k) a[(k + M) % M] = weight(k);
  a[M / 2] = 0.5 * (weight(M / 2) + weight(-M / 2));
  t->V = fft_forward(a);
  for (cplx& v : t->V) v /= static_cast<double>(M);

  t->chord2.resize(M);
  t->inv_diff.resize(M);
  for (int d = 0; d < M; ++d) {
    const double th = 2.0 * std::numbers::pi * d / M;
    const double s = std::sin(0.5 * th);
    t->chord2[d] = 4.0 * s * s;
    t->inv_diff[d] = d == 0 ? cplx(0.0) : 1.0 / (1.0 - std::polar(1.0, th));
  }
  cache.emplace(std::make_pair(alpha, M), t);
  return t;
}

SampledMap sample(const FourierBoundary& bnd, const UnitGrid& grid) {
  return SampledMap{grid.nodes(), eval_map(bnd, grid), eval_deriv(bnd, grid)};
}

int target_fold(int M, const FourierBoundary& bnd, const std::vector<FourierBoundary>& dirs,
                bool use_symmetry) {
  if (!use_symmetry) return 1;
  int f = symmetry_fold(bnd);
  for (const FourierBoundary& h : dirs) f = std::gcd(f, symmetry_fold(h));
  return std::gcd(f, M);
}

namespace {

// H(w_j, tau_l)^2 along row j; the diagonal holds |phi'(w_j)|^2.
void fill_h2(const SampledMap& s, const KernelTables& t, int j, std::vector<double>& r) {
  const int M = t.M;
  const cplx zj = s.z[j];
  double mn = INFINITY;
  for (int l = 0; l < M; ++l) {
    if (l == j) continue;
    const int d = l >= j ? l - j : l - j + M;
    r[l] = std::norm(zj - s.z[l]) / t.chord2[d];
    mn = std::min(mn, r[l]);
  }
  r[j] = std::norm(s.dz[j]);
  mn = std::min(mn, r[j]);
  if (!(mn >= min_h2)) throw_self_intersection(j);
}

template <class T>
void replicate_rotating(std::vector<T>& v, int fold) {
  const int M = static_cast<int>(v.size());
  const int Ms = M / fold;
  for (int r = 1; r < fold; ++r) {
    const cplx ph = std::polar(1.0, 2.0 * std::numbers::pi * r / fold);
    for (int j = 0; j < Ms; ++j) v[j + r * Ms] = ph * v[j];
  }
}

void replicate_invariant(std::vector<double>& v, int fold) {
  const int M = static_cast<int>(v.size());
  const int Ms = M / fold;
  for (int r = 1; r < fold; ++r) std::copy_n(v.begin(), Ms, v.begin() + r * Ms);
}

}  // namespace

std::vector<cplx> principal_integral(const SampledMap& s, double alpha, const UnitGrid& grid,
                                     int fold) {
  const int M = grid.M;
  const auto t = kernel_tables(alpha, M);
  std::vector<cplx> out(M);
  std::vector<double> r(M);
  for (int j = 0; j < M / fold; ++j) {
    fill_h2(s, *t, j, r);
    pow_inplace(r.data(), M, -0.5 * alpha);
    cplx acc = 0.0;
    for (int l = 0; l < M; ++l) {
      const int d = l >= j ? l - j : l - j + M;
      acc += s.dz[l] * r[l] * t->V[d];
    }
    out[j] = s.w[j] * acc;
  }
  replicate_rotating(out, fold);
  return out;
}

std::vector<cplx> sqg_integral(const SampledMap& s, const UnitGrid& grid, int fold) {
  const int M = grid.M;
  const auto t = kernel_tables(1.0, M);
  std::vector<cplx> out(M);
  std::vector<double> r(M);
  for (int j = 0; j < M / fold; ++j) {
    fill_h2(s, *t, j, r);
    pow_inplace(r.data(), M, -0.5);
    const cplx a = s.w[j] * s.dz[j];
    cplx acc = 0.0;
    for (int l = 0; l < M; ++l) {
      if (l == j) continue;
      const int d = l >= j ? l - j : l - j + M;
      acc += (s.w[l] * s.dz[l] - a) * r[l] * t->V[d];
    }
    out[j] = acc;
  }
  replicate_rotating(out, fold);
  return out;
}

std::vector<std::vector<double>> linearized_values(const FourierBoundary& bnd,
                                                   const std::vector<FourierBoundary>& dirs,
                                                   double omega, double alpha,
                                                   const UnitGrid& grid, int fold) {
  require_open_unit(alpha, "linearized_values");
  const int M = grid.M;
  const int C = static_cast<int>(dirs.size());
  const auto t = kernel_tables(alpha, M);
  const double ca = c_alpha_const(alpha);
  const SampledMap s = sample(bnd, grid);
  std::vector<std::vector<cplx>> hv(C), hd(C);
  for (int c = 0; c < C; ++c) {
    hv[c] = eval_map(dirs[c], grid);
    hd[c] = eval_deriv(dirs[c], grid);
  }

  std::vector<std::vector<double>> out(C, std::vector<double>(M));
  std::vector<double> r(M), ha(M);
  std::vector<cplx> P(M), Q(M), E(M);
  for (int j = 0; j < M / fold; ++j) {
    fill_h2(s, *t, j, r);
    ha = r;
    pow_inplace(ha.data(), M, -0.5 * alpha);
    const cplx wj = s.w[j], wbj = std::conj(wj);
    cplx sraw = 0.0;
    for (int l = 0; l < M; ++l) {
      const int d = l >= j ? l - j : l - j + M;
      const cplx V = t->V[d];
      sraw += s.dz[l] * ha[l] * V;
      P[l] = ha[l] * V;
      Q[l] = alpha * s.dz[l] * (ha[l] / r[l]) * V;
      // conj(D_phi) / (w_j - tau_l); D_h = (h_j - h_l) / (w_j - tau_l)
      if (l == j) {
        E[l] = 0.0;
      } else {
        const cplx c = wbj * t->inv_diff[d];
        E[l] = std::conj((s.z[j] - s.z[l]) * c) * c;
      }
    }
    sraw *= wj;
    const cplx dbar = std::conj(s.dz[j]);
    for (int c = 0; c < C; ++c) {
      const std::vector<cplx>& h = hv[c];
      const std::vector<cplx>& dh = hd[c];
      const cplx hj = h[j];
      cplx R = 0.0;
      for (int l = 0; l < M; ++l) {
        const double re = l == j ? std::real(dbar * dh[j]) : std::real((hj - h[l]) * E[l]);
        R += dh[l] * P[l] - re * Q[l];
      }
      R *= wj;
      const cplx hbar = std::conj(dh[j]);
      const cplx lin = omega * (s.z[j] * wbj * hbar + hj * wbj * dbar) - ca * sraw * wbj * hbar -
                       ca * wbj * dbar * R;
      out[c][j] = lin.imag();
    }
  }
  for (auto& v : out) replicate_invariant(v, fold);
  return out;
}

}  // namespace detail

std::vector<cplx> s_phi(const FourierBoundary& bnd, double alpha, const UnitGrid& grid,
                        const QuadratureOptions& opts) {
  require_open_unit(alpha, "s_phi");
  const int fold = detail::target_fold(grid.M, bnd, {}, opts.use_symmetry);
  std::vector<cplx> S = detail::principal_integral(detail::sample(bnd, grid), alpha, grid, fold);
  const double ca = c_alpha_const(alpha);
  for (cplx& v : S) v *= ca;
  return S;
}

std::vector<cplx> s_phi_trapezoid(const FourierBoundary& bnd, double alpha,
                                  const std::vector<cplx>& targets, int sources) {
  require_open_unit(alpha, "s_phi_trapezoid");
  const double h = 2.0 * std::numbers::pi / sources;
  const double corr = 2.0 * (std::pow(2.0, alpha) - 1.0) * std::riemann_zeta(alpha) *
                      std::pow(h, 1.0 - alpha) / (2.0 * std::numbers::pi);
  const double ca = c_alpha_const(alpha);
  std::vector<cplx> ring(sources);
  for (int l = 0; l < sources; ++l) ring[l] = std::polar(1.0, (l + 0.5) * h);
  std::vector<cplx> out;
  out.reserve(targets.size());
  for (const cplx& w : targets) {
    const cplx zw = map_at(bnd, w);
    const cplx dw = deriv_at(bnd, w);
    cplx acc = 0.0;
    for (int l = 0; l < sources; ++l) {
      const cplx tau = w * ring[l];
      acc += deriv_at(bnd, tau) * tau * std::pow(std::norm(zw - map_at(bnd, tau)), -0.5 * alpha);
    }
    acc /= static_cast<double>(sources);
    acc -= corr * dw * w * std::pow(std::abs(dw), -alpha);
    out.push_back(ca * acc);
  }
  return out;
}

ResidualField functional_G(double omega, const FourierBoundary& bnd, double alpha,
                           const UnitGrid& grid, const QuadratureOptions& opts) {
  require_open_unit(alpha, "functional_G");
  const int fold = detail::target_fold(grid.M, bnd, {}, opts.use_symmetry);
  const detail::SampledMap s = detail::sample(bnd, grid);
  const std::vector<cplx> S = detail::principal_integral(s, alpha, grid, fold);
  const double ca = c_alpha_const(alpha);
  std::vector<double> values(grid.M);
  for (int j = 0; j < grid.M; ++j)
    values[j] = ((omega * s.z[j] - ca * S[j]) * std::conj(s.w[j] * s.dz[j])).imag();
  return make_residual_field(grid, std::move(values));
}

ResidualField functional_G_sqg(double omega, const FourierBoundary& bnd, const UnitGrid& grid,
                               const QuadratureOptions& opts) {
  const int fold = detail::target_fold(grid.M, bnd, {}, opts.use_symmetry);
  const detail::SampledMap s = detail::sample(bnd, grid);
  const std::vector<cplx> T = detail::sqg_integral(s, grid, fold);
  std::vector<double> values(grid.M);
  for (int j = 0; j < grid.M; ++j)
    values[j] = ((omega * s.z[j] - T[j]) * std::conj(s.dz[j] * s.w[j])).imag();
  return make_residual_field(grid, std::move(values));
}

ResidualField residual_field(double omega, const FourierBoundary& bnd, double alpha,
                             const UnitGrid& grid, const QuadratureOptions& opts) {
  if (alpha == 1.0) return functional_G_sqg(omega, bnd, grid, opts);
  return functional_G(omega, bnd, alpha, grid, opts);
}

double ellipse_fourth_coefficient(double omega, double Q, double alpha, const UnitGrid& grid) {
  if (!(Q >= 0.0 && Q < 1.0))
    throw Error(ErrorKind::domain, "ellipse_fourth_coefficient: Q must lie in [0,1)");
  if (grid.M < 10) throw Error(ErrorKind::invalid_input, "ellipse_fourth_coefficient: grid too small");
  return residual_field(omega, ellipse_boundary(Q), alpha, grid).sine_coeffs[4];
}

double ellipse_moment_ratio(double alpha) {
  return (2.0 + alpha) * (4.0 + alpha) / ((4.0 - alpha) * (6.0 - alpha));
}

}  // namespace gsqg
