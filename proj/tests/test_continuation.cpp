#include <gtest/gtest.h>

#include <cmath>

#include "gsqg/continuation.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/specfun.hpp"

using namespace gsqg;

TEST(Solve, ZeroAmplitudeIsTheDisc) {
  const VStateSolution s = solve_vstate(0.5, 3, 0.0);
  EXPECT_EQ(s.omega, omega_dispersion(0.5, 3));
  EXPECT_LT(s.residual_norm, 1e-15);
  for (double a : s.boundary.a) EXPECT_EQ(a, 0.0);
}

TEST(Solve, QuadraticBifurcationLaw) {
  const double a = 0.5, om = omega_dispersion(a, 3);
  double prev_gap = 0.0, prev_ratio = 0.0;
  for (double s : {4e-3, 2e-3, 1e-3}) {
    const VStateSolution v = solve_vstate(a, 3, s);
    EXPECT_LT(v.residual_norm, 1e-11);
    EXPECT_EQ(v.boundary.a[0], s);
    const double gap = om - v.omega, ratio = v.boundary.a[1] / s;
    if (prev_gap != 0.0) {
      EXPECT_NEAR(prev_gap / gap, 4.0, 0.01);
      EXPECT_NEAR(prev_ratio / ratio, 2.0, 0.01);
    }
    prev_gap = gap;
    prev_ratio = ratio;
  }
  const VStateSolution tiny = solve_vstate(a, 3, 1e-4);
  EXPECT_LT(std::abs(tiny.omega - om), 1e-6);
  EXPECT_LT(std::abs(tiny.boundary.a[1]), 1e-6);
}

TEST(Solve, ResidualHoldsOnFinerGrid) {
  const VStateSolution v = solve_vstate(0.5, 3, 0.03);
  EXPECT_LT(solution_residual(v, 4 * v.grid_size), 10 * 1e-11);
}

TEST(Solve, SymmetryEquivariance) {
  const VStateSolution v = solve_vstate(0.6, 4, 0.02);
  const FourierBoundary b = embed_mfold(v.boundary);
  const UnitGrid g = make_grid(v.grid_size);
  const ResidualField full = functional_G(v.omega, b, v.alpha, g, QuadratureOptions{false});
  const int shift = g.M / v.m;
  for (int j = 0; j < g.M; ++j) EXPECT_NEAR(full.values[(j + shift) % g.M], full.values[j], 1e-12);
  EXPECT_NEAR(full.norm(), v.residual_norm, 1e-12);
}

TEST(Solve, Errors) {
  SolverOptions few;
  few.max_iter = 1;
  few.tol = 1e-30;
  try {
    solve_vstate(0.5, 2, 0.02, std::nullopt, few);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::non_convergence);
  }
  try {
    solve_vstate(0.5, 3, 0.6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::univalence);
  }
  SolverOptions strict;
  strict.min_rcond = 1.0;
  try {
    solve_vstate(0.5, 2, 0.01, std::nullopt, strict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::singular_jacobian);
  }
  EXPECT_THROW(solve_vstate(0.5, 1, 0.01), Error);
  EXPECT_THROW(solve_vstate(1.5, 2, 0.01), Error);
}

TEST(Branch, ExtrapolatesToDispersionValues) {
  for (double a : {0.25, 0.5, 0.75})
    for (int m : {2, 3, 4}) {
      const BranchTable t = continue_branch(a, m, 0.04, 0.01);
      ASSERT_FALSE(t.failure) << t.failure_message;
      ASSERT_EQ(t.solutions.size(), 5u);
      EXPECT_EQ(t.solutions[0].s, 0.0);
      EXPECT_EQ(t.solutions[0].omega, omega_dispersion(a, m));
      EXPECT_LT(std::abs(extrapolate_omega(t) - omega_dispersion(a, m)), 1e-6) << a << " " << m;
      for (std::size_t i = 1; i < t.solutions.size(); ++i) {
        EXPECT_LT(t.solutions[i].omega, t.solutions[i - 1].omega);
        EXPECT_LT(t.solutions[i].residual_norm, 1e-11);
        const MFoldProjection p = project_mfold(embed_mfold(t.solutions[i].boundary), m);
        EXPECT_LT(p.discarded_energy, 1e-12);
      }
      // omega(ds) is closer to the bifurcation value than omega(4 ds).
      EXPECT_LT(std::abs(t.solutions[1].omega - t.solutions[0].omega),
                std::abs(t.solutions[4].omega - t.solutions[0].omega));
    }
}

TEST(Branch, TruncationRobustness) {
  SolverOptions big;
  big.K = 32;
  const VStateSolution a = solve_vstate(0.5, 3, 0.02);
  const VStateSolution b = solve_vstate(0.5, 3, 0.02, std::nullopt, big);
  EXPECT_LT(std::abs(a.omega - b.omega), 1e-8);
}

TEST(Branch, StopsCleanlyAtFailure) {
  const BranchTable t = continue_branch(0.5, 3, 0.6, 0.1);
  ASSERT_TRUE(t.failure.has_value());
  EXPECT_FALSE(t.failure_message.empty());
  EXPECT_EQ(t.last_good_s, t.solutions.back().s);
  EXPECT_LT(t.last_good_s, 0.6);
  EXPECT_THROW(continue_branch(0.5, 3, 0.1, 0.0), Error);
}

TEST(Branch, SqgIsSolvable) {
  const VStateSolution v = solve_vstate(1.0, 2, 0.01);
  EXPECT_LT(v.residual_norm, 1e-11);
  EXPECT_LT(std::abs(v.omega - omega_dispersion(1.0, 2)), 1e-3);
}

TEST(Dilation, ScalingLaw) {
  const VStateSolution v = solve_vstate(0.5, 3, 0.03);
  EXPECT_EQ(verify_dilation_law(v, 1.0), v.residual_norm);
  const double base = std::max(v.residual_norm, 1e-15);
  EXPECT_LT(verify_dilation_law(v, 2.0), 10 * base);
  EXPECT_GT(dilation_residual(v, 2.0, 1.0), 100 * verify_dilation_law(v, 2.0));
}
