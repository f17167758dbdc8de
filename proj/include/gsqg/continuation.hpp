#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsqg/error.hpp"
#include "gsqg/geometry.hpp"

namespace gsqg {

struct VStateSolution {
  double alpha = 0.0;
  int m = 2;
  double s = 0.0;  // pinned leading coefficient a[0]
  double omega = 0.0;
  MFoldBoundary boundary;
  double residual_norm = 0.0;  // sup of all sine coefficients of the residual
  int grid_size = 0;
  int iterations = 0;
};

struct SolverOptions {
  int K = 16;          // reduced modes a[0..K-1]
  double tol = 1e-11;  // sup norm of the residual sine coefficients
  int max_iter = 40;
  int grid_size = 0;   // 0: default_grid_size of the embedded boundary
  int max_halvings = 5;
  double min_deriv = 1e-3;      // univalence proxy threshold on |phi'|
  double min_rcond = 1e-13;     // below this the Jacobian counts as singular
};

struct InitialGuess {
  double omega = 0.0;
  std::vector<double> a;  // reduced coefficients; a[0] is overwritten by s
};

// Newton on (omega, a[1..K-1]) with a[0] = s against the sine modes
// m, 2m, ..., Km of the residual. Without a guess the disc value of omega
// and a = (s, 0, ...) are used.
VStateSolution solve_vstate(double alpha, int m, double s,
                            const std::optional<InitialGuess>& guess = std::nullopt,
                            const SolverOptions& opts = {});

struct BranchTable {
  double alpha = 0.0;
  int m = 2;
  std::vector<VStateSolution> solutions;  // solutions[0] is the disc
  double last_good_s = 0.0;
  std::optional<ErrorKind> failure;
  std::string failure_message;
};

// Steps s = ds, 2ds, ... up to s_max with a secant predictor; stops at the
// first failed solve and records why.
BranchTable continue_branch(double alpha, int m, double s_max, double ds,
                            const SolverOptions& opts = {});

// Polynomial extrapolation of omega(s) to s = 0 in the variable s^2 through
// the first `points` nonzero-amplitude solutions.
double extrapolate_omega(const BranchTable& table, int points = 3);

// Residual sup norm of the dilated state rotating at omega * lambda^{-exponent}.
double dilation_residual(const VStateSolution& sol, double lambda, double exponent);
// Same with the correct exponent alpha.
double verify_dilation_law(const VStateSolution& sol, double lambda);

// Residual sup norm of a solution, optionally on a different grid size.
double solution_residual(const VStateSolution& sol, int grid_size = 0);

}  // namespace gsqg
