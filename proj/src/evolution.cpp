#include "gsqg/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fastpow.hpp"
#include "gsqg/error.hpp"
#include "gsqg/spectral.hpp"
#include "gsqg/specfun.hpp"

namespace gsqg {

namespace {

constexpr double pi = std::numbers::pi;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void check_state(const ContourState& s) {
  if (s.nodes.size() < 8) throw Error(ErrorKind::invalid_input, "contour: at least 8 nodes required");
  if (!(s.alpha > 0.0 && s.alpha <= 1.0)) throw Error(ErrorKind::domain, "contour: alpha must lie in (0,1]");
}

// Fourier coefficients c_k, k = -M/2+1 .. M/2-1 at index k + M/2; Nyquist dropped.
std::vector<cplx> fourier_coeffs(const std::vector<cplx>& x) {
  const int M = static_cast<int>(x.size());
  const std::vector<cplx> X = fft_forward(x);
  std::vector<cplx> c(M, 0.0);
  for (int k = -M / 2 + 1; k < M / 2; ++k) c[k + M / 2] = X[(k + M) % M] / static_cast<double>(M);
  return c;
}

cplx eval_series(const std::vector<cplx>& c, double t) {
  const int M = static_cast<int>(c.size());
  const cplx e = std::polar(1.0, t);
  // Horner in e from the top mode down, then shift by e^{-i(M/2-1)t}.
  cplx acc = 0.0;
  for (int k = M / 2 - 1; k >= -M / 2 + 1; --k) acc = acc * e + c[k + M / 2];
  return acc * std::polar(1.0, -(M / 2 - 1) * t);
}

}  // namespace

ContourState contour_from_boundary(const FourierBoundary& bnd, int M, double alpha) {
  ContourState s;
  s.nodes = eval_map(bnd, make_grid(M, false));
  s.alpha = alpha;
  check_state(s);
  return s;
}

double mean_spacing(const std::vector<cplx>& nodes) {
  double L = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) L += std::abs(nodes[(j + 1) % nodes.size()] - nodes[j]);
  return L / nodes.size();
}

double min_spacing(const std::vector<cplx>& nodes) {
  double d = INFINITY;
  for (std::size_t j = 0; j < nodes.size(); ++j) d = std::min(d, std::abs(nodes[(j + 1) % nodes.size()] - nodes[j]));
  return d;
}

std::vector<cplx> velocity_contour(const ContourState& state, const VelocityOptions& opts) {
  check_state(state);
  const std::vector<cplx>& z = state.nodes;
  const int M = static_cast<int>(z.size());
  const double a = state.alpha, h = 2.0 * pi / M;
  const bool subtract =
      opts.form == KernelForm::subtracted || (opts.form == KernelForm::automatic && a >= 0.95);
  const std::vector<cplx> dz = spectral_derivative(z);

  // Packed upper triangle of squared distances, then |.|^{-alpha} in place.
  const std::size_t P = static_cast<std::size_t>(M) * (M - 1) / 2;
  // Reused across calls; a fresh 4 MB buffer per evaluation costs page faults.
  thread_local std::vector<double> K;
  K.resize(P);
  const double limit = 0.25 * mean_spacing(z);
  std::vector<double> zr(M), zi(M);
  for (int j = 0; j < M; ++j) {
    zr[j] = z[j].real();
    zi[j] = z[j].imag();
  }
  double closest = INFINITY;
  std::size_t p = 0;
  for (int i = 0; i < M; ++i) {
    const int n = M - i - 1;
    double* k = K.data() + p;
    const double* xr = zr.data() + i + 1;
    const double* xi = zi.data() + i + 1;
    const double ri = zr[i], ii = zi[i];
#pragma omp simd
    for (int q = 0; q < n; ++q) {
      const double dx = xr[q] - ri, dy = xi[q] - ii;
      k[q] = dx * dx + dy * dy;
    }
    // Non-adjacent pairs: skip j = i+1 and the wrap pair (0, M-1).
    const int hi = i == 0 ? n - 1 : n;
    double mn = INFINITY;
#pragma omp simd reduction(min : mn)
    for (int q = 1; q < hi; ++q) mn = std::min(mn, k[q]);
    closest = std::min(closest, mn);
    p += n;
  }
  if (!(std::sqrt(closest) >= limit))
    throw Error(ErrorKind::near_self_intersection, "velocity_contour: non-adjacent nodes at distance " +
                                                       sci(std::sqrt(closest)) + " below spacing/4 = " + sci(limit));
  detail::pow_inplace(K.data(), P, -0.5 * a);

  // Real and imaginary parts kept apart so the pair loop vectorizes.
  std::vector<double> dr(M), di(M), vr(M, 0.0), vi(M, 0.0);
  for (int j = 0; j < M; ++j) {
    dr[j] = dz[j].real();
    di[j] = dz[j].imag();
  }
  p = 0;
  for (int i = 0; i < M; ++i) {
    const int n = M - i - 1;
    const double* k = K.data() + p;
    const double* xr = dr.data() + i + 1;
    const double* xi = di.data() + i + 1;
    double* wr = vr.data() + i + 1;
    double* wi = vi.data() + i + 1;
    const double ri = dr[i], ii = di[i];
    double ar = 0.0, ai = 0.0;
    if (subtract) {
#pragma omp simd reduction(+ : ar, ai)
      for (int q = 0; q < n; ++q) {
        const double cr = k[q] * (xr[q] - ri), ci = k[q] * (xi[q] - ii);
        ar += cr;
        ai += ci;
        wr[q] -= cr;
        wi[q] -= ci;
      }
    } else {
#pragma omp simd reduction(+ : ar, ai)
      for (int q = 0; q < n; ++q) {
        ar += k[q] * xr[q];
        ai += k[q] * xi[q];
        wr[q] += k[q] * ri;
        wi[q] += k[q] * ii;
      }
    }
    vr[i] += ar;
    vi[i] += ai;
    p += n;
  }
  std::vector<cplx> v(M);
  for (int j = 0; j < M; ++j) v[j] = cplx(vr[j], vi[j]);
  const double C = c_alpha_const(a) / (2.0 * pi);
  // Endpoint term of the punctured trapezoid for |x|^{-alpha} g(x).
  const double zc = subtract ? 0.0 : -2.0 * std::riemann_zeta(a) * std::pow(h, 1.0 - a);
  for (int i = 0; i < M; ++i) {
    cplx vi = h * v[i];
    if (zc != 0.0) vi += zc * dz[i] * std::pow(std::abs(dz[i]), -a);
    v[i] = C * vi;
  }
  return v;
}

namespace {

std::vector<cplx> field_of(const ContourState& s, const EvolveOptions& opts) {
  return opts.field ? opts.field(s) : velocity_contour(s, opts.velocity);
}

ContourState shifted(const ContourState& s, const std::vector<cplx>& k, double f, double dt) {
  ContourState o = s;
  for (std::size_t j = 0; j < o.nodes.size(); ++j) o.nodes[j] += f * dt * k[j];
  o.time += f * dt;
  return o;
}

}  // namespace

double cfl_time_step(const ContourState& state, double fraction, const VelocityOptions& opts) {
  if (!(fraction > 0.0 && fraction < 1.0)) throw Error(ErrorKind::invalid_input, "cfl_time_step: fraction must lie in (0,1)");
  double vmax = 0.0;
  for (const cplx& v : velocity_contour(state, opts)) vmax = std::max(vmax, std::abs(v));
  if (!(vmax > 0.0)) throw Error(ErrorKind::invalid_input, "cfl_time_step: velocity vanishes");
  return fraction * 0.25 * min_spacing(state.nodes) / vmax;
}

ContourState step_rk4(const ContourState& state, double dt, const EvolveOptions& opts) {
  check_state(state);
  if (!(dt > 0.0)) throw Error(ErrorKind::invalid_input, "step_rk4: dt must be positive");
  const std::vector<cplx> k1 = field_of(state, opts);
  double vmax = 0.0;
  for (const cplx& v : k1) vmax = std::max(vmax, std::abs(v));
  const double limit = 0.25 * min_spacing(state.nodes);
  if (!(dt * vmax < limit))
    throw Error(ErrorKind::cfl_violation,
                "step_rk4: dt*max|v| = " + sci(dt * vmax) + " exceeds spacing/4 = " + sci(limit));
  const std::vector<cplx> k2 = field_of(shifted(state, k1, 0.5, dt), opts);
  const std::vector<cplx> k3 = field_of(shifted(state, k2, 0.5, dt), opts);
  const std::vector<cplx> k4 = field_of(shifted(state, k3, 1.0, dt), opts);
  ContourState out = state;
  for (std::size_t j = 0; j < out.nodes.size(); ++j)
    out.nodes[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  out.time = state.time + dt;
  return out;
}

ContourState evolve(const ContourState& state, double T, double dt, const EvolveOptions& opts,
                    const StepObserver& observer) {
  if (!(T >= 0.0) || !(dt > 0.0)) throw Error(ErrorKind::invalid_input, "evolve: need T >= 0 and dt > 0");
  const int n = static_cast<int>(std::ceil(T / dt - 1e-9));
  ContourState s = state;
  if (observer) observer(s, 0);
  if (n == 0) return s;
  const double h = T / n;
  const double t0 = state.time;
  for (int i = 1; i <= n; ++i) {
    s = step_rk4(s, h, opts);
    s.time = t0 + i * h;
    if (opts.redistribute_every > 0 && i % opts.redistribute_every == 0 && i < n) s = redistribute_arclength(s);
    if (observer) observer(s, i);
  }
  return s;
}

ContourState redistribute_arclength(const ContourState& state) {
  check_state(state);
  const int M = static_cast<int>(state.nodes.size());
  const std::vector<cplx> c = fourier_coeffs(state.nodes);
  const std::vector<cplx> dz = spectral_derivative(state.nodes);
  std::vector<cplx> speed(M);
  for (int j = 0; j < M; ++j) speed[j] = std::abs(dz[j]);
  const std::vector<cplx> sc = fourier_coeffs(speed);
  const double mean = sc[M / 2].real();
  const double L = 2.0 * pi * mean;
  // s(t) = mean t + sum_{k != 0} sc_k (e^{ikt} - 1)/(ik)
  std::vector<cplx> ic(M, 0.0);
  cplx shift = 0.0;
  for (int k = -M / 2 + 1; k < M / 2; ++k) {
    if (k == 0) continue;
    ic[k + M / 2] = sc[k + M / 2] / cplx(0.0, k);
    shift += ic[k + M / 2];
  }
  auto arclen = [&](double t) { return mean * t + (eval_series(ic, t) - shift).real(); };
  auto spd = [&](double t) { return eval_series(sc, t).real(); };

  ContourState out = state;
  double t = 0.0;
  for (int j = 1; j < M; ++j) {
    const double target = L * j / M;
    t += (target - arclen(t)) / mean;
    for (int it = 0; it < 30; ++it) {
      const double r = arclen(t) - target;
      const double d = r / std::max(spd(t), 1e-3 * mean);
      t -= d;
      if (std::abs(d) < 1e-14) break;
    }
    out.nodes[j] = eval_series(c, t);
  }
  out.nodes[0] = eval_series(c, 0.0);
  return out;
}

ConservedQuantities conserved_diagnostics(const ContourState& state) {
  const std::vector<cplx>& z = state.nodes;
  const int M = static_cast<int>(z.size());
  const std::vector<cplx> dz = spectral_derivative(z);
  const double h = 2.0 * pi / M;
  double A = 0.0, mx = 0.0, my = 0.0;
  for (int j = 0; j < M; ++j) {
    const double x = z[j].real(), y = z[j].imag(), dx = dz[j].real(), dy = dz[j].imag();
    A += 0.5 * (x * dy - y * dx);
    mx += 0.5 * x * x * dy;
    my -= 0.5 * y * y * dx;
  }
  A *= h;
  mx *= h;
  my *= h;
  return {A, cplx(mx / A, my / A)};
}

std::vector<cplx> upsample_closed_curve(const std::vector<cplx>& nodes, int factor) {
  const int M = static_cast<int>(nodes.size());
  if (factor < 1) throw Error(ErrorKind::invalid_input, "upsample: factor must be >= 1");
  if (factor == 1) return nodes;
  const std::vector<cplx> X = fft_forward(nodes);
  std::vector<cplx> Y(static_cast<std::size_t>(M) * factor, 0.0);
  const int F = M * factor;
  for (int k = -M / 2 + 1; k < M / 2; ++k) Y[(k + F) % F] = X[(k + M) % M];
  // Split the Nyquist mode symmetrically.
  Y[M / 2] = 0.5 * X[M / 2];
  Y[F - M / 2] = 0.5 * X[M / 2];
  std::vector<cplx> y = fft_backward(Y);
  for (cplx& v : y) v /= static_cast<double>(M);
  return y;
}

namespace {

double point_segment(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double L2 = std::norm(ab);
  double t = L2 > 0.0 ? ((p - a) * std::conj(ab)).real() / L2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Exact nearest-segment search through a uniform grid of segment buckets,
// scanning square rings of cells until the ring lower bound exceeds the best.
double directed(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const std::size_t n = b.size();
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (const auto* v : {&a, &b})
    for (const cplx& z : *v) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
  const double W = std::max(x1 - x0, 1e-300), H = std::max(y1 - y0, 1e-300);
  const double cell = std::max(std::sqrt(W * H / (4.0 * n)), std::max(W, H) / 4096.0);
  const int nx = static_cast<int>(W / cell) + 1, ny = static_cast<int>(H / cell) + 1;
  auto cx = [&](double x) { return std::clamp(static_cast<int>((x - x0) / cell), 0, nx - 1); };
  auto cy = [&](double y) { return std::clamp(static_cast<int>((y - y0) / cell), 0, ny - 1); };
  std::vector<std::vector<int>> bucket(static_cast<std::size_t>(nx) * ny);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx p = b[j], q = b[(j + 1) % n];
    for (int ix = cx(std::min(p.real(), q.real())); ix <= cx(std::max(p.real(), q.real())); ++ix)
      for (int iy = cy(std::min(p.imag(), q.imag())); iy <= cy(std::max(p.imag(), q.imag())); ++iy)
        bucket[static_cast<std::size_t>(ix) * ny + iy].push_back(static_cast<int>(j));
  }
  double worst = 0.0;
  for (const cplx& p : a) {
    const int px = cx(p.real()), py = cy(p.imag());
    double best = INFINITY;
    for (int r = 0; r <= std::max(nx, ny); ++r) {
      // Cells on ring r are at least (r - 1) * cell away from p.
      if (best <= (r - 1) * cell) break;
      for (int ix = px - r; ix <= px + r; ++ix) {
        if (ix < 0 || ix >= nx) continue;
        const bool edge = ix == px - r || ix == px + r;
        for (int iy = py - r; iy <= py + r; iy += edge ? 1 : 2 * r) {
          if (iy >= 0 && iy < ny)
            for (int j : bucket[static_cast<std::size_t>(ix) * ny + iy])
              best = std::min(best, point_segment(p, b[j], b[(j + 1) % n]));
          if (r == 0) break;
        }
      }
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b, int upsample) {
  const std::vector<cplx> A = upsample_closed_curve(a, upsample), B = upsample_closed_curve(b, upsample);
  return std::max(directed(A, B), directed(B, A));
}

double rigid_rotation_residual(const ContourState& state, double omega, const VelocityOptions& opts) {
  const std::vector<cplx> v = velocity_contour(state, opts);
  const std::vector<cplx> dz = spectral_derivative(state.nodes);
  double worst = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    // Outward normal of a positively oriented curve: -i times the tangent.
    const cplx n = cplx(0.0, -1.0) * dz[j] / std::abs(dz[j]);
    const cplx rel = v[j] - omega * cplx(0.0, 1.0) * state.nodes[j];
    worst = std::max(worst, std::abs((rel * std::conj(n)).real()));
  }
  return worst;
}

ContourState rotated(const ContourState& state, double angle) {
  ContourState o = state;
  const cplx r = std::polar(1.0, angle);
  for (cplx& z : o.nodes) z *= r;
  return o;
}

}  // namespace gsqg
