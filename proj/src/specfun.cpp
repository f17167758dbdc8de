#include "gsqg/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gsqg/error.hpp"

namespace gsqg {

namespace {

void require_open_unit(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorKind::domain,
                std::string(who) + ": alpha must lie in (0,1), got " + std::to_string(alpha));
}

// Theta_alpha without the domain check; finite on [0,1).
double theta_raw(double alpha) {
  const double g = std::tgamma(1.0 - 0.5 * alpha);
  return std::pow(2.0, alpha) * std::tgamma(1.0 + 0.5 * alpha) * std::tgamma(1.0 - alpha) /
         ((2.0 - alpha) * g * g * g);
}

double omega_sqg(int m) {
  double s = 0.0;
  for (int k = 1; k <= m - 1; ++k) s += 1.0 / (2.0 * k + 1.0);
  return 2.0 / std::numbers::pi * s;
}

}  // namespace

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw Error(ErrorKind::pole, "gamma_fn: pole at " + std::to_string(x));
  return std::tgamma(x);
}

double gamma_ratio(double a, double b) {
  if (a < 150.0 && b < 150.0) return gamma_fn(a) / gamma_fn(b);
  if (a <= 0.0 || b <= 0.0)
    throw Error(ErrorKind::domain, "gamma_ratio: large-argument branch needs positive arguments");
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

double pochhammer(double x, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= x + k;
  return p;
}

double c_alpha_const(double alpha) {
  if (!(alpha > 0.0))
    throw Error(ErrorKind::domain, "c_alpha_const: alpha must be positive");
  return gamma_fn(0.5 * alpha) / (std::pow(2.0, 1.0 - alpha) * gamma_fn(1.0 - 0.5 * alpha));
}

double omega_dispersion(double alpha, int m) {
  if (m < 2) throw Error(ErrorKind::domain, "omega_dispersion: m must be >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::domain, "omega_dispersion: alpha must lie in [0,1]");
  if (alpha == 0.0) return (m - 1.0) / (2.0 * m);
  if (alpha == 1.0) return omega_sqg(m);
  // (1+a/2)_{m-1} / (2-a/2)_{m-1} as a running product keeps every factor O(1).
  double ratio = 1.0;
  for (int k = 0; k < m - 1; ++k) ratio *= (1.0 + 0.5 * alpha + k) / (2.0 - 0.5 * alpha + k);
  return theta_raw(alpha) * (1.0 - ratio);
}

double omega_dispersion_gamma(double alpha, int m) {
  require_open_unit(alpha, "omega_dispersion_gamma");
  if (m < 2) throw Error(ErrorKind::domain, "omega_dispersion_gamma: m must be >= 2");
  const double g = gamma_fn(1.0 - 0.5 * alpha);
  const double pref = gamma_fn(1.0 - alpha) / (std::pow(2.0, 1.0 - alpha) * g * g);
  return pref * (gamma_ratio(1.0 + 0.5 * alpha, 2.0 - 0.5 * alpha) -
                 gamma_ratio(m + 0.5 * alpha, m + 1.0 - 0.5 * alpha));
}

double theta_alpha(double alpha) {
  require_open_unit(alpha, "theta_alpha");
  return theta_raw(alpha);
}

double asymptotic_constant(double alpha) {
  // sum_{k>=1} alpha^{2k+1} zeta(2k+1) / (4^k (2k+1)),
  // i.e. log Gamma(1-alpha/2) - log Gamma(1+alpha/2) - alpha*gamma.
  double sum = 0.0;
  double apow = alpha * alpha * alpha;
  double four = 4.0;
  for (int k = 1; k < 200; ++k) {
    const double term = apow * std::riemann_zeta(2.0 * k + 1.0) / (four * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-15) break;
    apow *= alpha * alpha;
    four *= 4.0;
  }
  return sum;
}

AsymptoticParams asymptotic_params(double alpha) {
  return {alpha, theta_alpha(alpha), asymptotic_constant(alpha), euler_gamma};
}

double omega_asymptotic(double alpha, int n) {
  const AsymptoticParams p = asymptotic_params(alpha);
  return p.theta_alpha - (1.0 - 0.5 * alpha) * p.theta_alpha *
                             std::exp(alpha * p.euler_gamma + p.c_alpha) /
                             std::pow(static_cast<double>(n), 1.0 - alpha);
}

double digamma_half_integer(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "digamma_half_integer: n must be >= 0");
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += 1.0 / (2.0 * k + 1.0);
  return -euler_gamma - 2.0 * std::numbers::ln2 + 2.0 * s;
}

DispersionTable dispersion_table(double alpha, int m_max) {
  DispersionTable t;
  t.alpha = alpha;
  for (int m = 2; m <= m_max; ++m) t.values[m] = omega_dispersion(alpha, m);
  return t;
}

}  // namespace gsqg
