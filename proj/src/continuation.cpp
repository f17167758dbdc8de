#include "gsqg/continuation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "gsqg/kernels.hpp"
#include "gsqg/linearization.hpp"
#include "gsqg/specfun.hpp"

namespace gsqg {

namespace {

struct Problem {
  double alpha;
  int m;
  int K;
  UnitGrid grid;
};

int reduced_N(int m, int K) { return K * m - 1; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

FourierBoundary embedded(const Problem& p, const std::vector<double>& a) {
  return embed_mfold(MFoldBoundary{p.m, a}, reduced_N(p.m, p.K));
}

Eigen::VectorXd reduced_rows(const ResidualField& f, const Problem& p) {
  Eigen::VectorXd v(p.K);
  for (int k = 0; k < p.K; ++k) v[k] = f.sine_coeffs[(k + 1) * p.m];
  return v;
}

// Winding number of phi' about 0 along the circle; 0 for a univalent exterior map.
int deriv_winding(const FourierBoundary& b, const UnitGrid& g) {
  const std::vector<cplx> d = eval_deriv(b, g);
  double turn = 0.0;
  for (int j = 0; j < g.M; ++j) turn += std::arg(d[(j + 1) % g.M] / d[j]);
  return static_cast<int>(std::lround(turn / (2.0 * std::numbers::pi)));
}

bool univalent(const FourierBoundary& b, const Problem& p, double min_deriv, double* dmin = nullptr) {
  const double d = min_abs_deriv(b, std::max(p.grid.M, 256));
  if (dmin) *dmin = d;
  return d > min_deriv && deriv_winding(b, p.grid) == 0;
}

void check_univalence(const FourierBoundary& b, const Problem& p, double min_deriv) {
  double d = 0.0;
  if (!univalent(b, p, min_deriv, &d))
    throw Error(ErrorKind::univalence, "solve_vstate: boundary fails the univalence proxy (min |phi'| = " +
                                           sci(d) + ")");
}

Eigen::MatrixXd reduced_jacobian(const Problem& p, const FourierBoundary& b, double omega) {
  Eigen::MatrixXd J(p.K, p.K);
  J.col(0) = reduced_rows(omega_derivative(b, p.grid), p);
  std::vector<FourierBoundary> dirs;
  for (int k = 1; k < p.K; ++k) dirs.push_back(mode_direction((k + 1) * p.m - 1, reduced_N(p.m, p.K)));
  const std::vector<ResidualField> cols = gateaux_derivatives(b, dirs, omega, p.alpha, p.grid);
  for (int k = 1; k < p.K; ++k) J.col(k) = reduced_rows(cols[k - 1], p);
  return J;
}

}  // namespace

VStateSolution solve_vstate(double alpha, int m, double s, const std::optional<InitialGuess>& guess,
                            const SolverOptions& opts) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorKind::domain, "solve_vstate: alpha must lie in (0,1]");
  if (m < 2) throw Error(ErrorKind::invalid_input, "solve_vstate: m must be >= 2");
  if (opts.K < 2) throw Error(ErrorKind::invalid_input, "solve_vstate: K must be >= 2");
  if (!(opts.tol > 0.0) || opts.max_iter < 1) throw Error(ErrorKind::invalid_input, "solve_vstate: bad tol/max_iter");
  const int N = reduced_N(m, opts.K);
  const int M = opts.grid_size > 0 ? opts.grid_size : default_grid_size(N);
  const Problem p{alpha, m, opts.K, make_grid(M)};
  if (M / 2 <= opts.K * m) throw Error(ErrorKind::invalid_input, "solve_vstate: grid too coarse for K modes");

  VStateSolution sol;
  sol.alpha = alpha;
  sol.m = m;
  sol.s = s;
  sol.grid_size = M;
  sol.boundary = MFoldBoundary{m, std::vector<double>(opts.K, 0.0)};
  sol.omega = omega_dispersion(alpha, m);
  if (guess) {
    sol.omega = guess->omega;
    for (int k = 0; k < std::min<int>(opts.K, guess->a.size()); ++k) sol.boundary.a[k] = guess->a[k];
  }
  sol.boundary.a[0] = s;
  if (s == 0.0) {
    // Trivial line: every omega solves; report the bifurcation value.
    std::fill(sol.boundary.a.begin(), sol.boundary.a.end(), 0.0);
    sol.omega = omega_dispersion(alpha, m);
    sol.residual_norm = residual_field(sol.omega, embedded(p, sol.boundary.a), alpha, p.grid).norm();
    return sol;
  }

  std::vector<double>& a = sol.boundary.a;
  FourierBoundary b = embedded(p, a);
  check_univalence(b, p, opts.min_deriv);
  ResidualField r = residual_field(sol.omega, b, alpha, p.grid);
  double res = r.norm();
  for (int it = 0; it < opts.max_iter && res >= opts.tol; ++it) {
    sol.iterations = it + 1;
    const Eigen::MatrixXd J = reduced_jacobian(p, b, sol.omega);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (!(sv[sv.size() - 1] > opts.min_rcond * sv[0]))
      throw Error(ErrorKind::singular_jacobian,
                  "solve_vstate: Jacobian rcond " + sci(sv[sv.size() - 1] / sv[0]));
    const Eigen::VectorXd dx = svd.solve(-reduced_rows(r, p));

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opts.max_halvings; ++h, t *= 0.5) {
      std::vector<double> at = a;
      for (int k = 1; k < p.K; ++k) at[k] += t * dx[k];
      const double om = sol.omega + t * dx[0];
      const FourierBoundary bt = embedded(p, at);
      if (!univalent(bt, p, opts.min_deriv)) continue;
      ResidualField rt = residual_field(om, bt, alpha, p.grid);
      if (rt.norm() < res || h == opts.max_halvings) {
        a = std::move(at);
        sol.omega = om;
        b = bt;
        r = std::move(rt);
        res = r.norm();
        accepted = true;
        break;
      }
    }
    if (!accepted) check_univalence(b, p, opts.min_deriv);
    if (!std::isfinite(res)) throw Error(ErrorKind::non_convergence, "solve_vstate: residual is not finite");
  }
  sol.residual_norm = res;
  if (!(res < opts.tol))
    throw Error(ErrorKind::non_convergence, "solve_vstate: residual " + sci(res) + " after " +
                                                std::to_string(opts.max_iter) + " iterations");
  check_univalence(b, p, opts.min_deriv);
  return sol;
}

BranchTable continue_branch(double alpha, int m, double s_max, double ds, const SolverOptions& opts) {
  if (!(ds > 0.0)) throw Error(ErrorKind::invalid_input, "continue_branch: ds must be positive");
  if (!(s_max >= ds)) throw Error(ErrorKind::invalid_input, "continue_branch: s_max must be >= ds");
  BranchTable t;
  t.alpha = alpha;
  t.m = m;
  t.solutions.push_back(solve_vstate(alpha, m, 0.0, std::nullopt, opts));
  const int steps = static_cast<int>(std::floor(s_max / ds + 1e-9));
  for (int i = 1; i <= steps; ++i) {
    const double s = i * ds;
    InitialGuess g;
    const VStateSolution& p1 = t.solutions.back();
    g.omega = p1.omega;
    g.a = p1.boundary.a;
    if (t.solutions.size() >= 2) {
      // Secant in s through the last two solutions.
      const VStateSolution& p0 = t.solutions[t.solutions.size() - 2];
      const double f = (s - p1.s) / (p1.s - p0.s);
      g.omega += f * (p1.omega - p0.omega);
      for (std::size_t k = 0; k < g.a.size(); ++k) g.a[k] += f * (p1.boundary.a[k] - p0.boundary.a[k]);
    }
    try {
      t.solutions.push_back(solve_vstate(alpha, m, s, g, opts));
      t.last_good_s = s;
    } catch (const Error& e) {
      t.failure = e.kind();
      t.failure_message = "s=" + sci(s) + ": " + e.what();
      break;
    }
  }
  return t;
}

double extrapolate_omega(const BranchTable& table, int points) {
  std::vector<double> x, y;
  for (const VStateSolution& s : table.solutions)
    if (s.s != 0.0 && static_cast<int>(x.size()) < points) {
      x.push_back(s.s * s.s);
      y.push_back(s.omega);
    }
  if (x.empty()) {
    if (table.solutions.empty()) throw Error(ErrorKind::invalid_input, "extrapolate_omega: empty table");
    return table.solutions.front().omega;
  }
  // Neville at 0.
  const std::size_t n = x.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i + k < n; ++i) y[i] = (x[i + k] * y[i] - x[i] * y[i + 1]) / (x[i + k] - x[i]);
  return y[0];
}

double dilation_residual(const VStateSolution& sol, double lambda, double exponent) {
  const FourierBoundary b = embed_mfold(sol.boundary, reduced_N(sol.m, static_cast<int>(sol.boundary.a.size())));
  const Dilation d = dilate(b, lambda, sol.alpha);
  const UnitGrid g = make_grid(sol.grid_size > 0 ? sol.grid_size : default_grid(b).M);
  return residual_field(sol.omega * std::pow(lambda, -exponent), d.boundary, sol.alpha, g).norm();
}

double verify_dilation_law(const VStateSolution& sol, double lambda) {
  return dilation_residual(sol, lambda, sol.alpha);
}

double solution_residual(const VStateSolution& sol, int grid_size) {
  const FourierBoundary b = embed_mfold(sol.boundary, reduced_N(sol.m, static_cast<int>(sol.boundary.a.size())));
  const int M = grid_size > 0 ? grid_size : (sol.grid_size > 0 ? sol.grid_size : default_grid(b).M);
  return residual_field(sol.omega, b, sol.alpha, make_grid(M)).norm();
}

}  // namespace gsqg
