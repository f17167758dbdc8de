#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gsqg/error.hpp"
#include "gsqg/geometry.hpp"
#include "gsqg/spectral.hpp"

using namespace gsqg;

namespace {

FourierBoundary random_mfold(int m, int K, double amp, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-amp, amp);
  MFoldBoundary r{m, {}};
  for (int k = 0; k < K; ++k) r.a.push_back(u(rng) / (k + 1));
  return embed_mfold(r);
}

}  // namespace

TEST(Grid, NodesAndValidation) {
  const UnitGrid g = make_grid(8, false);
  EXPECT_NEAR(std::abs(g.node(2) - cplx(0, 1)), 0.0, 1e-15);
  const UnitGrid h = make_grid(8, true);
  EXPECT_NEAR(h.angle(0), std::numbers::pi / 8, 1e-15);
  EXPECT_THROW(make_grid(7), Error);
  EXPECT_EQ(default_grid_size(31), 512);
}

TEST(EvalMap, Identity) {
  const UnitGrid g = make_grid(32);
  const auto z = eval_map(identity_boundary(4), g);
  const auto d = eval_deriv(identity_boundary(4), g);
  for (int j = 0; j < g.M; ++j) {
    EXPECT_EQ(z[j], g.node(j));
    EXPECT_EQ(d[j], cplx(1.0));
  }
}

TEST(EvalMap, Ellipse) {
  const double Q = 0.3;
  const UnitGrid g = make_grid(64);
  const auto z = eval_map(ellipse_boundary(Q), g);
  const auto d = eval_deriv(ellipse_boundary(Q), g);
  for (int j = 0; j < g.M; ++j) {
    const cplx w = g.node(j);
    EXPECT_NEAR(std::abs(z[j] - (w + Q * std::conj(w))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(d[j] - (1.0 - Q * std::conj(w * w))), 0.0, 1e-15);
  }
}

TEST(EvalDeriv, RealCoefficientReflectionAndConjDerivative) {
  const FourierBoundary b = random_mfold(3, 5, 0.05, 11);
  const UnitGrid g = make_grid(128);
  const auto d = eval_deriv(b, g);
  const auto cd = eval_conj_deriv(b, g);
  for (int j = 0; j < g.M; ++j) {
    const cplx w = g.node(j);
    EXPECT_NEAR(std::abs(std::conj(d[j]) - deriv_at(b, std::conj(w))), 0.0, 1e-14);
    // d/dw conj(phi(w)) along the circle, by central difference in angle.
    const double h = 1e-5;
    const cplx wp = w * std::polar(1.0, h), wm = w * std::polar(1.0, -h);
    const cplx fd = (std::conj(map_at(b, wp)) - std::conj(map_at(b, wm))) / (wp - wm);
    EXPECT_NEAR(std::abs(cd[j] - fd), 0.0, 1e-8);
  }
}

TEST(EvalMap, DerivativeMatchesDifferences) {
  const FourierBoundary b = random_mfold(2, 8, 0.05, 3);
  for (double t : {0.1, 1.3, 4.0}) {
    const cplx w = std::polar(1.0, t);
    const double h = 1e-5;
    const cplx wp = w * std::polar(1.0, h), wm = w * std::polar(1.0, -h);
    EXPECT_NEAR(std::abs((map_at(b, wp) - map_at(b, wm)) / (wp - wm) - deriv_at(b, w)), 0.0, 1e-8);
  }
}

TEST(EvalMap, MFoldRotationRelation) {
  for (int m : {2, 3, 5}) {
    const FourierBoundary b = random_mfold(m, 6, 0.08, 100 + m);
    const int M = 40 * m;
    const UnitGrid g = make_grid(M);
    const auto z = eval_map(b, g);
    const cplx rot = std::polar(1.0, 2.0 * std::numbers::pi / m);
    // grid index shift by M/m is rotation by 2 pi/m
    for (int j = 0; j < M; ++j) EXPECT_NEAR(std::abs(z[(j + M / m) % M] - rot * z[j]), 0.0, 1e-13);
    EXPECT_EQ(symmetry_fold(b) % m, 0);
  }
  EXPECT_EQ(symmetry_fold(identity_boundary(3)), 0);
}

TEST(EvalMap, AliasingWarns) {
  std::string seen;
  auto old = set_warning_handler([&](std::string_view m) { seen = m; });
  eval_map(identity_boundary(20), make_grid(16));
  set_warning_handler(old);
  EXPECT_NE(seen.find("alias"), std::string::npos);
}

TEST(EvalMap, DiscreteTransformRecoversCoefficients) {
  const FourierBoundary b = random_mfold(2, 10, 0.1, 5);
  const int N = b.N();
  const UnitGrid g = make_grid(2 * (N + 1));
  const auto c = laurent_coefficients(eval_map(b, g), g);
  const int M = g.M;
  EXPECT_NEAR(std::abs(c[1 + M / 2] - 1.0), 0.0, 1e-12);
  for (int n = 0; n <= N && n < M / 2; ++n)
    EXPECT_NEAR(std::abs(c[-n + M / 2] - (n == 0 ? b.coeffs[0] : b.coeffs[n])), 0.0, 1e-12) << n;
}

TEST(Dilation, ScalesMapAndOmega) {
  const FourierBoundary b = random_mfold(3, 4, 0.05, 9);
  const Dilation d1 = dilate(b, 1.0, 0.5);
  EXPECT_EQ(d1.omega_scale, 1.0);
  EXPECT_EQ(d1.boundary.coeffs, b.coeffs);
  const Dilation d2 = dilate(b, 2.0, 0.5);
  EXPECT_NEAR(d2.omega_scale, 1.0 / std::sqrt(2.0), 1e-15);
  const cplx w = std::polar(1.0, 0.7);
  EXPECT_NEAR(std::abs(map_at(d2.boundary, w) - 2.0 * map_at(b, w)), 0.0, 1e-15);
  EXPECT_THROW(dilate(b, 0.0, 0.5), Error);
}

TEST(MFold, EmbedProjectRoundTrip) {
  MFoldBoundary r{3, {0.1}};
  const FourierBoundary b = embed_mfold(r, 10);
  EXPECT_EQ(b.coeffs[2], 0.1);
  for (int n = 0; n <= 10; ++n)
    if (n != 2) EXPECT_EQ(b.coeffs[n], 0.0);

  for (unsigned seed = 1; seed < 20; ++seed) {
    const int m = 2 + seed % 4;
    const FourierBoundary e = random_mfold(m, 7, 0.1, seed);
    const MFoldProjection p = project_mfold(e, m, true);
    EXPECT_EQ(p.discarded_energy, 0.0);
    EXPECT_EQ(embed_mfold(p.boundary, e.N()).coeffs, e.coeffs);
  }
}

TEST(MFold, StrictProjectionRejectsAsymmetry) {
  FourierBoundary b = identity_boundary(8);
  b.coeffs[2] = 0.1;
  b.coeffs[3] = 1e-6;
  try {
    project_mfold(b, 3, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_symmetric);
  }
  EXPECT_NEAR(project_mfold(b, 3).discarded_energy, 1e-6, 1e-18);
}

TEST(Univalence, ProxyDetectsCriticalPoints) {
  EXPECT_NEAR(min_abs_deriv(identity_boundary(2), 64), 1.0, 1e-15);
  EXPECT_GT(min_abs_deriv(ellipse_boundary(0.3), 256), 0.69);
  FourierBoundary b = identity_boundary(3);
  b.coeffs[2] = 0.5;  // 1 - 2*0.5 conj(w)^3 vanishes on the circle
  EXPECT_LT(min_abs_deriv(b, 3 * 256), 0.02);
}
