#include "gsqg/integral_checks.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

#include "gsqg/error.hpp"
#include "gsqg/kernels.hpp"

namespace gsqg {

namespace {

constexpr double pi = std::numbers::pi;

// Every integrand here is symmetric about pi/2, so only the singular end at 0
// is integrated, where t itself carries full relative precision.
template <class F>
double integrate_0_pi(F f) {
  static boost::math::quadrature::tanh_sinh<double> ts(15);
  // Abscissae can round onto the endpoint; the integrable singularity carries no mass there.
  auto g = [&](double t) { return t > 0.0 ? f(t) : 0.0; };
  return 2.0 * ts.integrate(g, 0.0, 0.5 * pi, 1e-14);
}

IntegralCheck make_check(const char* family, int n, double cf, double q) {
  const double err = std::abs(cf - q);
  return IntegralCheck{family, n, cf, q, cf == 0.0 ? err : err / std::abs(cf)};
}

}  // namespace

double circle_moment_quadrature(double alpha, int j) {
  const double jj = std::abs(j);
  return integrate_0_pi([&](double t) { return std::cos(2.0 * jj * t) * std::pow(std::sin(t), -alpha); }) /
         (std::pow(2.0, alpha) * pi);
}

std::vector<IntegralCheck> verify_integrals(double alpha, int n_max) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw Error(ErrorKind::domain, "verify_integrals: alpha must lie in (0,1]");
  if (n_max < 0) throw Error(ErrorKind::invalid_input, "verify_integrals: n_max must be >= 0");
  std::vector<IntegralCheck> out;
  if (alpha == 1.0) {
    for (int n = 0; n <= n_max; ++n) {
      const double q1 = -integrate_0_pi([&](double t) {
                          const double s = std::sin(n * t);
                          return s * (s / std::sin(t));
                        }) / pi;
      out.push_back(make_check("sqg1", n, sqg_moment_1(n), q1));
      const double q2 = integrate_0_pi([&](double t) {
                          return std::sin((n + 2) * t) * (std::sin(n * t) / std::sin(t));
                        }) / pi;
      out.push_back(make_check("sqg2", n, sqg_moment_2(n), q2));
    }
    return out;
  }
  const double norm = 1.0 / (std::pow(2.0, alpha) * pi);
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(make_check("I", n, singular_moment_I(alpha, n), circle_moment_quadrature(alpha, n + 1)));
    const double qj = -norm * integrate_0_pi([&](double t) {
                        const double st = std::sin(t);
                        return (std::sin(n * t) / st) * std::cos((n + 3) * t) * std::pow(st, -alpha);
                      });
    out.push_back(make_check("J", n, singular_moment_J(alpha, n), qj));
    const double qz = -norm * integrate_0_pi([&](double t) {
                        const double st = std::sin(t);
                        return (std::sin(n * t) / st) * std::cos((n - 1) * t) * std::pow(st, -alpha);
                      });
    out.push_back(make_check("Z", n, singular_moment_Z(alpha, n), qz));
  }
  return out;
}

}  // namespace gsqg
