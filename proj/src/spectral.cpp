#include "gsqg/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace gsqg {

namespace {

// Plans are cached per (size, sign) and executed on private aligned buffers.
struct Plan {
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;
};

std::mutex plan_mutex;

Plan& get_plan(int n, int sign) {
  static std::map<std::pair<int, int>, Plan> cache;
  auto it = cache.find({n, sign});
  if (it != cache.end()) return it->second;
  Plan p;
  p.in = fftw_alloc_complex(n);
  p.out = fftw_alloc_complex(n);
  p.plan = fftw_plan_dft_1d(n, p.in, p.out, sign, FFTW_ESTIMATE);
  return cache.emplace(std::make_pair(n, sign), p).first->second;
}

std::vector<cplx> run(const std::vector<cplx>& x, int sign) {
  const int n = static_cast<int>(x.size());
  std::vector<cplx> y(n);
  if (n == 0) return y;
  std::lock_guard lock(plan_mutex);
  Plan& p = get_plan(n, sign);
  std::memcpy(p.in, x.data(), sizeof(fftw_complex) * n);
  fftw_execute(p.plan);
  std::memcpy(static_cast<void*>(y.data()), p.out, sizeof(fftw_complex) * n);
  return y;
}

}  // namespace

std::vector<cplx> fft_forward(const std::vector<cplx>& x) { return run(x, FFTW_FORWARD); }
std::vector<cplx> fft_backward(const std::vector<cplx>& x) { return run(x, FFTW_BACKWARD); }

TrigCoefficients trig_coefficients(const std::vector<double>& values, const UnitGrid& grid) {
  const int M = grid.M;
  std::vector<cplx> x(values.begin(), values.end());
  const std::vector<cplx> X = fft_forward(x);
  TrigCoefficients t;
  t.sine.assign(M / 2, 0.0);
  t.cosine.assign(M / 2, 0.0);
  const double shift = grid.offset ? std::numbers::pi / M : 0.0;
  for (int n = 0; n < M / 2; ++n) {
    // sum_j G_j e^{-i n theta_j}
    const cplx c = X[n] * std::polar(1.0, -shift * n);
    t.sine[n] = n == 0 ? 0.0 : c.imag() / M;
    t.cosine[n] = (n == 0 ? 1.0 : 2.0) * c.real() / M;
  }
  return t;
}

std::vector<cplx> laurent_coefficients(const std::vector<cplx>& values, const UnitGrid& grid) {
  const int M = grid.M;
  const std::vector<cplx> X = fft_forward(values);
  std::vector<cplx> c(M);
  const double shift = grid.offset ? std::numbers::pi / M : 0.0;
  for (int k = -M / 2; k < M / 2; ++k) {
    const int idx = (k + M) % M;
    c[k + M / 2] = X[idx] * std::polar(1.0 / M, -shift * k);
  }
  return c;
}

std::vector<cplx> spectral_derivative(const std::vector<cplx>& x) {
  const int M = static_cast<int>(x.size());
  std::vector<cplx> X = fft_forward(x);
  for (int k = 0; k < M; ++k) {
    const int kk = k <= M / 2 ? k : k - M;
    // Nyquist mode of a real-symmetric interpolant has zero derivative.
    X[k] *= (2 * k == M) ? cplx(0.0) : cplx(0.0, static_cast<double>(kk) / M);
  }
  return fft_backward(X);
}

}  // namespace gsqg
