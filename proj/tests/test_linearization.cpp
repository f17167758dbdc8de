#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/linearization.hpp"
#include "gsqg/specfun.hpp"

using namespace gsqg;
constexpr double pi = std::numbers::pi;

namespace {

FourierBoundary random_boundary(int N, double norm, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  FourierBoundary b = identity_boundary(N);
  double s = 0.0;
  for (int n = 1; n <= N; ++n) {
    b.coeffs[n] = g(rng) / (n * n);
    s += b.coeffs[n] * b.coeffs[n];
  }
  for (int n = 1; n <= N; ++n) b.coeffs[n] *= norm / std::sqrt(s);
  return b;
}

double max_abs(const std::vector<double>& v, int lo, int hi) {
  double m = 0.0;
  for (int i = lo; i < hi; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

}  // namespace

TEST(Multiplier, Examples) {
  const MultiplierSpectrum s = multiplier_at_disc(0.5, omega_dispersion(0.5, 3), 16);
  EXPECT_EQ(s.mult[2], 0.0);
  for (int n = 1; n <= 16; ++n)
    if (n != 2) EXPECT_GT(std::abs(s.mult[n]), 1e-3) << n;
  EXPECT_NEAR(multiplier_at_disc(1.0, 2.0 / (3.0 * pi), 4).mult[1], 0.0, 1e-15);
  for (double a : {0.0, 0.3, 1.0}) {
    const MultiplierSpectrum z = multiplier_at_disc(a, 0.0, 10);
    for (int n = 1; n <= 10; ++n) EXPECT_LT(z.mult[n], 0.0);
  }
  EXPECT_THROW(multiplier_at_disc(0.5, 0.1, 1), Error);
}

TEST(Multiplier, LinearGrowthSlope) {
  const double a = 0.5, om = 0.3, th = theta_alpha(a);
  const MultiplierSpectrum s = multiplier_at_disc(a, om, 4000);
  // mult[n]/(n+1) approaches (om - th)/2 at the rate n^{alpha-1}.
  double prev = 1.0;
  for (int n : {250, 1000, 4000}) {
    const double d = std::abs(s.mult[n] / (n + 1.0) - 0.5 * (om - th));
    EXPECT_LT(d, 0.6 * prev);
    prev = d;
  }
  EXPECT_LT(prev, 0.01);
}

TEST(Multiplier, SimpleZeroOnlyAtDispersionValues) {
  const double a = 0.75;
  for (int m = 2; m <= 8; ++m) {
    const MultiplierSpectrum s = multiplier_at_disc(a, omega_dispersion(a, m), 32);
    int zeros = 0;
    for (int n = 1; n <= 32; ++n) zeros += std::abs(s.mult[n]) < 1e-12;
    EXPECT_EQ(zeros, 1);
  }
  const MultiplierSpectrum off = multiplier_at_disc(a, 0.5 * (omega_dispersion(a, 3) + omega_dispersion(a, 4)), 32);
  for (int n = 1; n <= 32; ++n) EXPECT_GT(std::abs(off.mult[n]), 1e-4);
}

TEST(Jacobian, NumericalMatchesMultiplierAtDisc) {
  const int N = 16;
  const UnitGrid g = make_grid(default_grid_size(N));
  for (double a : {0.25, 0.5, 0.75})
    for (double om : {0.0, omega_dispersion(a, 2), 0.9 * theta_alpha(a)}) {
      const JacobianMatrix J = numerical_jacobian(identity_boundary(N), om, a, g);
      const MultiplierSpectrum s = multiplier_at_disc(a, om, N);
      for (int r = 0; r <= N; ++r)
        for (int c = 0; c <= N; ++c)
          EXPECT_NEAR(J.entries(r, c), r == c ? s.mult[c] : 0.0, 1e-7) << a << " " << om << " " << r << " " << c;
    }
}

TEST(Jacobian, LargerTruncation) {
  const int N = 32;
  const UnitGrid g = make_grid(default_grid_size(N));
  const double a = 0.5, om = omega_dispersion(a, 2);
  const JacobianMatrix J = numerical_jacobian(identity_boundary(N), om, a, g);
  const MultiplierSpectrum s = multiplier_at_disc(a, om, N);
  double worst = 0.0;
  for (int r = 0; r <= N; ++r)
    for (int c = 0; c <= N; ++c) worst = std::max(worst, std::abs(J.entries(r, c) - (r == c ? s.mult[c] : 0.0)));
  EXPECT_LT(worst, 1e-7);
}

TEST(Jacobian, OmegaAndMixedColumnsAtDisc) {
  const int N = 12;
  const UnitGrid g = make_grid(default_grid_size(N));
  const JacobianMatrix J = gateaux_jacobian(identity_boundary(N), 0.2, 0.5, g);
  EXPECT_LT(J.omega_column.cwiseAbs().maxCoeff(), 1e-14);
  for (int m = 2; m <= 6; ++m)
    for (int r = 0; r <= N; ++r) EXPECT_NEAR(J.mixed(r, m - 1), r == m - 1 ? 0.5 * m : 0.0, 1e-13);
}

TEST(Jacobian, StepValidationAndWarning) {
  const UnitGrid g = make_grid(64);
  EXPECT_THROW(numerical_jacobian(identity_boundary(4), 0.1, 0.5, g, 1e-3), Error);
  EXPECT_THROW(numerical_jacobian(identity_boundary(4), 0.1, 0.5, g, 1e-9), Error);
  EXPECT_THROW(numerical_jacobian(identity_boundary(40), 0.1, 0.5, g), Error);
}

TEST(Jacobian, MFoldDecoupling) {
  const int m = 3;
  const FourierBoundary b = embed_mfold(MFoldBoundary{m, {0.04, 0.004, -0.0005}}, 15);
  const UnitGrid g = make_grid(default_grid_size(15));
  const JacobianMatrix J = gateaux_jacobian(b, 0.35, 0.5, g);
  for (int c = 0; c <= 15; ++c) {
    if ((c + 1) % m == 0) continue;
    for (int r = 0; r <= 15; ++r)
      if ((r + 1) % m == 0) EXPECT_NEAR(J.entries(r, c), 0.0, 1e-10) << r << " " << c;
  }
}

TEST(Gateaux, MatchesMultiplierAtDisc) {
  const int N = 10;
  const UnitGrid g = make_grid(default_grid_size(N));
  for (double a : {0.3, 0.5, 0.8}) {
    const double om = 0.27;
    const MultiplierSpectrum s = multiplier_at_disc(a, om, N);
    for (int n = 0; n <= N; ++n) {
      const ResidualField f = gateaux_derivative(identity_boundary(N), mode_direction(n, N), om, a, g);
      for (int k = 1; k < g.M / 2; ++k) EXPECT_NEAR(f.sine_coeffs[k], k == n + 1 ? s.mult[n] : 0.0, 1e-10);
    }
  }
}

TEST(Gateaux, MatchesFiniteDifferencesAtRandomBoundaries) {
  const double a = 0.5, om = 0.31, eps = 1e-6;
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const int N = 8;
    const FourierBoundary b = random_boundary(N, 0.05, seed);
    const UnitGrid g = make_grid(default_grid_size(N));
    std::mt19937 rng(100 + seed);
    std::normal_distribution<double> nd;
    FourierBoundary h = mode_direction(0, N);
    for (double& c : h.coeffs) c = nd(rng);
    const ResidualField an = gateaux_derivative(b, h, om, a, g);
    FourierBoundary bp = b, bm = b;
    for (int n = 0; n <= N; ++n) {
      bp.coeffs[n] += eps * h.coeffs[n];
      bm.coeffs[n] -= eps * h.coeffs[n];
    }
    const ResidualField p = functional_G(om, bp, a, g), q = functional_G(om, bm, a, g);
    std::vector<double> fd(g.M / 2);
    for (int k = 1; k < g.M / 2; ++k) fd[k] = (p.sine_coeffs[k] - q.sine_coeffs[k]) / (2 * eps);
    const double scale = max_abs(fd, 1, g.M / 2);
    double err = 0.0;
    for (int k = 1; k < g.M / 2; ++k) err = std::max(err, std::abs(an.sine_coeffs[k] - fd[k]));
    EXPECT_LT(err / scale, 1e-6) << seed;
  }
}

TEST(Gateaux, EllipseSecondModeAgainstFiniteDifference) {
  const FourierBoundary e = ellipse_boundary(0.2, 4);
  const UnitGrid g = make_grid(160);
  const FourierBoundary h = mode_direction(2, 4);
  const ResidualField an = gateaux_derivative(e, h, 0.3, 0.5, g);
  FourierBoundary bp = e, bm = e;
  bp.coeffs[2] += 1e-6;
  bm.coeffs[2] -= 1e-6;
  const ResidualField p = functional_G(0.3, bp, 0.5, g), q = functional_G(0.3, bm, 0.5, g);
  for (int k = 1; k < 20; ++k) EXPECT_NEAR(an.sine_coeffs[k], (p.sine_coeffs[k] - q.sine_coeffs[k]) / 2e-6, 1e-7);
}

TEST(Gateaux, BatchedEqualsSingle) {
  const FourierBoundary b = random_boundary(6, 0.04, 9);
  const UnitGrid g = make_grid(default_grid_size(6));
  std::vector<FourierBoundary> dirs;
  for (int n = 0; n <= 6; ++n) dirs.push_back(mode_direction(n, 6));
  const auto all = gateaux_derivatives(b, dirs, 0.2, 0.6, g);
  for (int n = 0; n <= 6; ++n) {
    const ResidualField one = gateaux_derivative(b, dirs[n], 0.2, 0.6, g);
    for (int j = 0; j < g.M; ++j) EXPECT_NEAR(all[n].values[j], one.values[j], 1e-14);
  }
}

TEST(Sqg, MultiplierMatchesFiniteDifferenceJacobian) {
  const int N = 8;
  const UnitGrid g = make_grid(default_grid_size(N));
  for (double om : {0.0, 2.0 / (3.0 * pi), 0.5}) {
    const JacobianMatrix J = numerical_jacobian(identity_boundary(N), om, 1.0, g);
    const MultiplierSpectrum s = multiplier_at_disc(1.0, om, N);
    for (int r = 0; r <= N; ++r)
      for (int c = 0; c <= N; ++c) EXPECT_NEAR(J.entries(r, c), r == c ? s.mult[c] : 0.0, 1e-7);
  }
}

TEST(Sqg, LogSlope) {
  EXPECT_NEAR(sqg_log_slope(50, 2000) * pi, 1.0, 0.02);
  // mult[n]/(n+1) tracks (Omega - (1/pi) ln n - const)/2
  const MultiplierSpectrum s = multiplier_at_disc(1.0, 0.0, 4000);
  const double d = s.mult[4000] / 4001.0 - s.mult[2000] / 2001.0;
  EXPECT_NEAR(d, -0.5 * std::log(2.0) / pi, 1e-3);
}

TEST(Scan, LocatesDispersionValues) {
  const UnitGrid g = make_grid(default_grid_size(16));
  const ScanResult r = bifurcation_scan(0.5, 2, default_scan_window(0.5, 2), g);
  EXPECT_LT(r.gap, 1e-8);
  EXPECT_EQ(r.kernel.dimension, 1);
  EXPECT_GT(r.kernel.mode_mass, 0.999999);
  EXPECT_GT(r.kernel.complement_sigma_min, 1e-3);
  const ScanResult q = bifurcation_scan(0.9, 5, default_scan_window(0.9, 5), g);
  EXPECT_LT(q.gap, 1e-7);
  EXPECT_EQ(q.kernel.dimension, 1);
  EXPECT_GT(q.kernel.mode_mass, 0.999999);
}

TEST(Scan, BadWindowThrows) {
  const UnitGrid g = make_grid(default_grid_size(16));
  try {
    bifurcation_scan(0.5, 3, {0.0, 0.01}, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_bracket);
  }
  EXPECT_THROW(bifurcation_scan(0.5, 1, {0.0, 0.1}, g), Error);
}

TEST(Transversality, HoldsAndInverts) {
  const UnitGrid g = make_grid(default_grid_size(16));
  const TransversalityReport t = transversality_report(0.5, 3, g, 1e-3);
  EXPECT_TRUE(t.transversal);
  EXPECT_NEAR(t.projection, 1.0, 1e-10);
  EXPECT_LT(t.sigma_min, 1e-12);
  EXPECT_TRUE(transversality_check(1.0, 2, g, 1e-3));
  // A column taken from the range of the Jacobian has no cokernel component.
  const JacobianMatrix J = gateaux_jacobian(identity_boundary(16), omega_dispersion(0.5, 3), 0.5, g);
  const Eigen::VectorXd in_range = J.entries.col(0) + 0.3 * J.entries.col(5);
  EXPECT_FALSE(transversality_report(0.5, 3, g, 1e-3, &in_range).transversal);
}
