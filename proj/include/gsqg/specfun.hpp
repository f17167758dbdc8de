#pragma once

#include <map>

namespace gsqg {

// Gamma function; throws ErrorKind::pole at nonpositive integers.
double gamma_fn(double x);

// Gamma(a) / Gamma(b), overflow-safe for large positive arguments.
double gamma_ratio(double a, double b);

// Rising factorial (x)_n = x (x+1) ... (x+n-1).
double pochhammer(double x, int n);

// Kernel normalization C_alpha = Gamma(alpha/2) / (2^{1-alpha} Gamma(1-alpha/2)).
double c_alpha_const(double alpha);

// Angular velocity at which the m-fold branch leaves the disc.
// Product form for 0 < alpha < 1, closed sums at the endpoints.
double omega_dispersion(double alpha, int m);

// Same quantity through Gamma-function ratios; defined for 0 < alpha < 1.
double omega_dispersion_gamma(double alpha, int m);

// Supremum of the dispersion set, 0 < alpha < 1.
double theta_alpha(double alpha);

struct AsymptoticParams {
  double alpha;
  double theta_alpha;
  double c_alpha;  // zeta-series constant in the large-n expansion
  double euler_gamma;
};

double asymptotic_constant(double alpha);
AsymptoticParams asymptotic_params(double alpha);

// Two-term large-n approximation Theta - (1-alpha/2) Theta e^{alpha gamma + c} / n^{1-alpha}.
double omega_asymptotic(double alpha, int n);

// Digamma at n + 1/2.
double digamma_half_integer(int n);

struct DispersionTable {
  double alpha = 0.0;
  std::map<int, double> values;
};

DispersionTable dispersion_table(double alpha, int m_max);

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

}  // namespace gsqg
