#pragma once

#include <functional>
#include <vector>

#include "gsqg/geometry.hpp"

namespace gsqg {

// Lagrangian boundary nodes, positively oriented, at parameters 2 pi j / M.
struct ContourState {
  std::vector<cplx> nodes;
  double time = 0.0;
  double alpha = 0.5;
};

// Nodes phi(e^{2 pi i j/M}), j = 0..M-1.
ContourState contour_from_boundary(const FourierBoundary& bnd, int M, double alpha);

enum class KernelForm { automatic, plain, subtracted };

struct VelocityOptions {
  // automatic: subtracted for alpha >= 0.95, plain below.
  KernelForm form = KernelForm::automatic;
};

// Boundary velocity (C_alpha / 2 pi) int gamma'(s) / |gamma(sigma) - gamma(s)|^alpha ds.
// Punctured trapezoid with the zeta endpoint correction; the subtracted form
// replaces gamma'(s) by gamma'(s) - gamma'(sigma).
// Throws near_self_intersection when non-adjacent nodes come closer than a
// quarter of the mean node spacing.
std::vector<cplx> velocity_contour(const ContourState& state, const VelocityOptions& opts = {});

using VelocityField = std::function<std::vector<cplx>(const ContourState&)>;

struct EvolveOptions {
  VelocityOptions velocity;
  int redistribute_every = 20;  // 0 disables
  VelocityField field;          // overrides the contour-dynamics velocity
};

// One classical RK4 step. Throws cfl_violation unless dt max|v| is below a
// quarter of the smallest node spacing.
ContourState step_rk4(const ContourState& state, double dt, const EvolveOptions& opts = {});

// fraction times the largest step that passes the step_rk4 check at this state.
double cfl_time_step(const ContourState& state, double fraction = 0.9, const VelocityOptions& opts = {});

using StepObserver = std::function<void(const ContourState&, int step)>;

// Integrates to state.time + T in ceil(T/dt) equal steps.
ContourState evolve(const ContourState& state, double T, double dt, const EvolveOptions& opts = {},
                    const StepObserver& observer = {});

// Moves the nodes to equal arclength along the Fourier interpolant, keeping node 0.
ContourState redistribute_arclength(const ContourState& state);

struct ConservedQuantities {
  double area = 0.0;
  cplx center;
};

// Green's formulas with spectral derivatives of the node interpolant.
ConservedQuantities conserved_diagnostics(const ContourState& state);

// Node positions of the Fourier interpolant refined by an integer factor.
std::vector<cplx> upsample_closed_curve(const std::vector<cplx>& nodes, int factor);

// Symmetric Hausdorff distance between the closed polygons through the
// upsampled node interpolants.
double hausdorff_distance(const std::vector<cplx>& a, const std::vector<cplx>& b, int upsample = 8);

// max over nodes of |v.n - omega (i z).n| with unit outward normal n.
double rigid_rotation_residual(const ContourState& state, double omega, const VelocityOptions& opts = {});

ContourState rotated(const ContourState& state, double angle);

// Mean distance between consecutive nodes and the smallest one.
double mean_spacing(const std::vector<cplx>& nodes);
double min_spacing(const std::vector<cplx>& nodes);

}  // namespace gsqg
