#include "gsqg/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "gsqg/continuation.hpp"
#include "gsqg/error.hpp"
#include "gsqg/evolution.hpp"
#include "gsqg/integral_checks.hpp"
#include "gsqg/io.hpp"
#include "gsqg/kernels.hpp"
#include "gsqg/linearization.hpp"
#include "gsqg/specfun.hpp"

namespace gsqg {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '"', '\'');
  return s;
}

struct Check {
  std::string name;
  double value;
  double limit;
  bool pass;
};

Check below(const std::string& name, double value, double limit) { return {name, value, limit, value < limit}; }
Check above(const std::string& name, double value, double limit) { return {name, value, limit, value > limit}; }

class Session {
public:
  Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  // Table in the selected format; svg plots columns ys against x instead.
  void table(const std::string& base, const Table& t, const std::string& x, const std::vector<std::string>& ys,
             const std::string& title) {
    if (cfg_.format == OutputFormat::svg) {
      std::vector<SvgSeries> series;
      const char* colors[] = {"#1f4e79", "#b03a2e", "#1e8449", "#7d3c98"};
      const auto col = [&](const std::string& name) {
        const auto it = std::find(t.columns.begin(), t.columns.end(), name);
        if (it == t.columns.end()) throw Error(ErrorKind::invalid_input, "no column " + name);
        const std::size_t c = static_cast<std::size_t>(it - t.columns.begin());
        std::vector<double> v;
        for (const auto& row : t.rows)
          std::visit(
              [&](const auto& cell) {
                using T = std::decay_t<decltype(cell)>;
                if constexpr (std::is_same_v<T, std::string>)
                  v.push_back(nan);
                else
                  v.push_back(static_cast<double>(cell));
              },
              row[c]);
        return v;
      };
      for (std::size_t k = 0; k < ys.size(); ++k) series.push_back({ys[k], col(x), col(ys[k]), colors[k % 4]});
      file(base + ".svg", svg_line_plot(series, title, x, ys.size() == 1 ? ys[0] : ""));
    } else if (cfg_.format == OutputFormat::json) {
      file(base + ".json", to_json(t).dump(2) + "\n");
    } else {
      file(base + ".csv", to_csv(t));
    }
  }

  void json(const std::string& base, const Json& j) { file(base + ".json", j.dump(2) + "\n"); }

  void file(const std::string& name, const std::string& content) {
    const std::filesystem::path p = cfg_.output_dir / name;
    write_text(p, content);
    out_ << "wrote " << p.string() << "\n";
  }

  void check(const Check& c) {
    checks_.push_back(c);
    out_ << "check " << c.name << " value=" << sci(c.value) << " limit=" << sci(c.limit) << " "
         << (c.pass ? "PASS" : "FAIL") << "\n";
  }

  int finish(std::ostream& err) const {
    for (const Check& c : checks_)
      if (!c.pass) {
        err << "FAIL command=" << cfg_.command << " check=" << c.name << " value=" << sci(c.value)
            << " limit=" << sci(c.limit) << "\n";
        return 1;
      }
    out_ << "OK " << cfg_.command << "\n";
    return 0;
  }

  std::ostream& out() { return out_; }

private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::vector<Check> checks_;
};

double tol_or(const RunConfig& c, double d) { return c.tol > 0.0 ? c.tol : d; }

std::vector<cplx> boundary_curve(const FourierBoundary& b) { return eval_map(b, make_grid(512, false)); }

std::string shade(std::size_t k, std::size_t n) {
  const double t = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 1.0;
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(40 + 160 * t), 60, static_cast<int>(200 - 160 * t));
  return buf;
}

void cmd_dispersion(const RunConfig& c, Session& s) {
  if (c.m_max < 2) throw Error(ErrorKind::invalid_input, "--m-max must be at least 2");
  const bool interior = c.alpha > 0.0 && c.alpha < 1.0;
  const double theta = interior ? theta_alpha(c.alpha) : (c.alpha == 0.0 ? 0.5 : INFINITY);
  Table t{{"m", "omega", "theta_gap", "asymptotic", "asymptotic_error"}, {}};
  double agree = 0.0;
  for (int m = 2; m <= c.m_max; ++m) {
    const double om = omega_dispersion(c.alpha, m);
    const double as = interior ? omega_asymptotic(c.alpha, m) : nan;
    t.rows.push_back({std::int64_t{m}, om, theta - om, as, std::abs(om - as)});
    if (interior) agree = std::max(agree, std::abs(omega_dispersion_gamma(c.alpha, m) - om) / std::abs(om));
  }
  s.table("dispersion", t, "m", {"omega"}, "dispersion relation, alpha = " + std::to_string(c.alpha));
  if (interior) s.check(below("gamma_vs_product", agree, 1e-12));
}

void cmd_verify_integrals(const RunConfig& c, Session& s) {
  if (c.n_max < 0) throw Error(ErrorKind::invalid_input, "--n-max must be nonnegative");
  const std::vector<IntegralCheck> v = verify_integrals(c.alpha, c.n_max);
  Table t{{"family", "n", "closed_form", "quadrature", "rel_error"}, {}};
  double worst = 0.0;
  for (const IntegralCheck& k : v) {
    t.rows.push_back({k.family, std::int64_t{k.n}, k.closed_form, k.quadrature, k.rel_error});
    worst = std::max(worst, k.rel_error);
  }
  s.table("integrals", t, "n", {"rel_error"}, "closed form against quadrature");
  s.out() << "max_rel_error " << sci(worst) << "\n";
  s.check(below("max_rel_error", worst, tol_or(c, 1e-8)));
}

void cmd_linearize(const RunConfig& c, Session& s) {
  const int N = c.n_max;
  if (N < 1) throw Error(ErrorKind::invalid_input, "--n-max must be positive");
  const double omega = std::isnan(c.omega) ? omega_dispersion(c.alpha, c.m) : c.omega;
  const MultiplierSpectrum ms = multiplier_at_disc(c.alpha, omega, N);
  const UnitGrid g = make_grid(c.grid > 0 ? c.grid : default_grid_size(N));
  const JacobianMatrix J = gateaux_jacobian(identity_boundary(N), omega, c.alpha, g, N);
  Table t{{"n", "multiplier", "jacobian_diagonal", "error"}, {}};
  double diag = 0.0, off = 0.0;
  for (int n = 0; n <= N; ++n) {
    const double e = std::abs(J.entries(n, n) - ms.mult[n]) / std::max(1.0, std::abs(ms.mult[n]));
    diag = std::max(diag, e);
    t.rows.push_back({std::int64_t{n}, ms.mult[n], J.entries(n, n), e});
    for (int k = 0; k <= N; ++k)
      if (k != n) off = std::max(off, std::abs(J.entries(n, k)));
  }
  s.table("spectrum", t, "n", {"multiplier", "jacobian_diagonal"}, "disc multiplier, Omega = " + sci(omega));
  s.check(below("diagonal_error", diag, tol_or(c, 1e-8)));
  s.check(below("off_diagonal", off, tol_or(c, 1e-8)));
}

void cmd_scan(const RunConfig& c, Session& s) {
  const int N = std::max(16, 2 * c.m);
  const UnitGrid g = make_grid(c.grid > 0 ? c.grid : default_grid_size(N));
  const ScanResult r = bifurcation_scan(c.alpha, c.m, default_scan_window(c.alpha, c.m), g, N);
  const TransversalityReport tr = transversality_report(c.alpha, c.m, g, 1e-3, nullptr, N);
  if (c.format == OutputFormat::json) {
    s.json("scan", Json{{"alpha", r.alpha},
                        {"m", r.m},
                        {"omega_located", r.omega_located},
                        {"omega_closed_form", r.omega_closed_form},
                        {"gap", r.gap},
                        {"kernel_dimension", r.kernel.dimension},
                        {"mode_mass", r.kernel.mode_mass},
                        {"transversal", tr.transversal},
                        {"transversality_projection", tr.projection}});
  } else {
    Table t{{"alpha", "m", "omega_located", "omega_closed_form", "gap", "kernel_dimension", "mode_mass",
             "transversality_projection"},
            {{r.alpha, std::int64_t{r.m}, r.omega_located, r.omega_closed_form, r.gap,
              std::int64_t{r.kernel.dimension}, r.kernel.mode_mass, tr.projection}}};
    if (c.format == OutputFormat::csv) {
      s.table("scan", t, "", {}, "");
    } else {
      std::vector<double> ms, om;
      for (int m = 2; m <= c.m + 2; ++m) {
        ms.push_back(m);
        om.push_back(omega_dispersion(c.alpha, m));
      }
      s.file("scan.svg", svg_line_plot({{"closed form", ms, om, "#1f4e79"},
                                        {"located", {double(c.m)}, {r.omega_located}, "#b03a2e"}},
                                       "bifurcation scan", "m", "Omega"));
    }
  }
  s.check(below("gap", r.gap, tol_or(c, 1e-7)));
  s.check({"kernel_dimension", double(r.kernel.dimension), 1.0, r.kernel.dimension == 1});
  s.check(above("mode_mass", r.kernel.mode_mass, 0.999999));
  s.check({"transversal", tr.projection, 1e-3, tr.transversal});
}

void cmd_solve_branch(const RunConfig& c, Session& s) {
  if (!(c.s_max > 0.0) || !(c.ds > 0.0)) throw Error(ErrorKind::invalid_input, "solve-branch needs --s-max and --ds");
  SolverOptions o;
  o.K = c.K;
  o.tol = tol_or(c, 1e-11);
  o.grid_size = c.grid;
  if (c.alpha == 1.0) s.out() << "note alpha=1 branch solving is experimental\n";
  const BranchTable b = continue_branch(c.alpha, c.m, c.s_max, c.ds, o);
  if (c.format == OutputFormat::json)
    s.json("branch", branch_to_json(b));
  else
    s.table("branch", branch_table(b), "s", {"omega"}, "branch table");

  std::vector<SvgCurve> curves;
  std::vector<double> ss, om;
  for (std::size_t k = 0; k < b.solutions.size(); ++k) {
    const VStateSolution& v = b.solutions[k];
    curves.push_back({boundary_curve(embed_mfold(v.boundary)), shade(k, b.solutions.size()), "s = " + sci(v.s)});
    ss.push_back(v.s);
    om.push_back(v.omega);
  }
  s.file("branch_boundaries.svg", svg_closed_curves(curves, "V-state boundaries, m = " + std::to_string(c.m)));
  s.file("branch_diagram.svg", svg_line_plot({{"Omega(s)", ss, om, "#1f4e79"}}, "branch diagram", "s", "Omega"));

  if (b.failure) {
    s.check({"branch_reached_s_max", b.last_good_s, c.s_max, false});
    s.out() << "failure kind=" << to_string(*b.failure) << " message=\"" << one_line(b.failure_message) << "\"\n";
    return;
  }
  double worst = 0.0;
  for (const VStateSolution& v : b.solutions) worst = std::max(worst, v.residual_norm);
  s.check(below("max_residual", worst, o.tol));
  if (b.solutions.size() >= 4) {
    const double ex = extrapolate_omega(b, 3);
    s.out() << "omega_extrapolated " << sci(ex) << "\n";
    s.check(below("extrapolation_gap", std::abs(ex - omega_dispersion(c.alpha, c.m)), 1e-6));
  }
}

void cmd_ellipse_test(const RunConfig& c, Session& s) {
  if (c.samples < 2) throw Error(ErrorKind::invalid_input, "--samples must be at least 2");
  if (!(std::abs(c.Q) < 1.0)) throw Error(ErrorKind::domain, "--Q must satisfy |Q| < 1");
  const UnitGrid g = make_grid(c.grid > 0 ? c.grid : 256);
  Table t{{"omega", "g4"}, {}};
  double gmin = INFINITY, disc = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const double om = -1.0 + 2.0 * k / (c.samples - 1);
    const double g4 = ellipse_fourth_coefficient(om, c.Q, c.alpha, g);
    gmin = std::min(gmin, std::abs(g4));
    disc = std::max(disc, residual_field(om, identity_boundary(4), c.alpha, g).norm());
    t.rows.push_back({om, g4});
  }
  s.table("ellipse", t, "omega", {"g4"}, "fourth sine coefficient, Q = " + sci(c.Q));
  s.file("ellipse_boundary.svg", svg_closed_curves({{boundary_curve(ellipse_boundary(c.Q)), "#1f4e79", "ellipse"}},
                                                   "ellipse, Q = " + sci(c.Q)));
  s.out() << "min |g4| over Omega " << sci(gmin) << "\n";
  s.check(below("disc_residual", disc, tol_or(c, 1e-12)));
  s.check(above("min_abs_g4", gmin, c.baseline));
  if (c.alpha > 0.0 && c.alpha < 1.0) {
    const double q = circle_moment_quadrature(c.alpha, 3) / circle_moment_quadrature(c.alpha, 1);
    s.check(below("moment_ratio", std::abs(q - ellipse_moment_ratio(c.alpha)), 1e-10));
  }
}

ContourState evolve_initial(const RunConfig& c, std::string& label) {
  if (!c.boundary.empty()) {
    std::ifstream f(c.boundary);
    if (!f) throw Error(ErrorKind::invalid_input, "cannot read " + c.boundary);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::invalid_input, std::string("boundary file: ") + e.what());
    }
    label = c.boundary;
    // A branch table contributes its last solution.
    if (j.contains("solutions") && !j.at("solutions").empty()) j = j.at("solutions").back();
    if (j.contains("boundary")) j = j.at("boundary");
    return contour_from_boundary(boundary_from_json(j), c.nodes, c.alpha);
  }
  if (c.ellipse) {
    label = "ellipse Q=" + sci(c.Q);
    return contour_from_boundary(ellipse_boundary(c.Q), c.nodes, c.alpha);
  }
  const VStateSolution v = solve_vstate(c.alpha, c.m, c.s);
  label = "V-state m=" + std::to_string(c.m) + " s=" + sci(c.s);
  return contour_from_boundary(embed_mfold(v.boundary), c.nodes, c.alpha);
}

void cmd_evolve(const RunConfig& c, Session& s) {
  if (!(c.T > 0.0)) throw Error(ErrorKind::invalid_input, "--T must be positive");
  if (c.frames < 1) throw Error(ErrorKind::invalid_input, "--frames must be positive");
  std::string label;
  const ContourState init = evolve_initial(c, label);
  const double dt = cfl_time_step(init, c.cfl);
  const ConservedQuantities q0 = conserved_diagnostics(init);
  Table t{{"step", "time", "area", "center_x", "center_y"}, {}};
  std::string lines;
  std::vector<SvgCurve> frames;
  const int steps = static_cast<int>(std::ceil(c.T / dt));
  auto record = [&](const ContourState& st, int step) {
    const ConservedQuantities q = conserved_diagnostics(st);
    t.rows.push_back({std::int64_t{step}, st.time, q.area, q.center.real(), q.center.imag()});
    lines += contour_to_json(st).dump() + "\n";
    frames.push_back({st.nodes, "", "t = " + sci(st.time)});
  };
  const ContourState fin = evolve(init, c.T, dt, {}, [&](const ContourState& st, int step) {
    if (step % c.frames == 0 || step == steps) record(st, step);
  });
  for (std::size_t k = 0; k < frames.size(); ++k) frames[k].stroke = shade(k, frames.size());
  s.file("trajectory.jsonl", lines);
  s.table("evolve", t, "time", {"area"}, "area along the trajectory");
  s.file("evolve_frames.svg", svg_closed_curves(frames, "contour dynamics, " + label));
  const ConservedQuantities q1 = conserved_diagnostics(fin);
  s.out() << "steps " << steps << " dt " << sci(dt) << "\n";
  s.check(below("area_drift", std::abs(q1.area - q0.area) / std::abs(q0.area), tol_or(c, 1e-5)));
  s.check(below("center_drift", std::abs(q1.center - q0.center), tol_or(c, 1e-5)));
}

void cmd_rigid_check(const RunConfig& c, Session& s) {
  if (!(c.fraction > 0.0)) throw Error(ErrorKind::invalid_input, "--fraction must be positive");
  const VStateSolution v = solve_vstate(c.alpha, c.m, c.s);
  const ContourState init = contour_from_boundary(embed_mfold(v.boundary), c.nodes, c.alpha);
  const double T = c.fraction * 2.0 * pi / v.omega;
  const double dt = cfl_time_step(init, c.cfl);
  const double rig = rigid_rotation_residual(init, v.omega);
  const ContourState fin = evolve(init, T, dt);
  const ContourState target = rotated(init, v.omega * T);
  const double H = hausdorff_distance(fin.nodes, target.nodes);
  const ConservedQuantities q0 = conserved_diagnostics(init), q1 = conserved_diagnostics(fin);
  const double area = std::abs(q1.area - q0.area) / std::abs(q0.area);
  const double center = std::abs(q1.center - q0.center);
  Table t{{"alpha", "m", "s", "omega", "nodes", "time", "dt", "rigid_residual", "hausdorff", "area_drift",
           "center_drift"},
          {{c.alpha, std::int64_t{c.m}, c.s, v.omega, std::int64_t{c.nodes}, T, dt, rig, H, area, center}}};
  if (c.format == OutputFormat::json)
    s.json("rigid", to_json(t).at(0));
  else if (c.format == OutputFormat::csv)
    s.table("rigid", t, "", {}, "");
  s.file("rigid.svg", svg_closed_curves({{init.nodes, "#999999", "initial"},
                                          {target.nodes, "#1f4e79", "rotated initial"},
                                          {fin.nodes, "#b03a2e", "evolved"}},
                                         "rigid rotation check, t = " + sci(T)));
  s.check(below("hausdorff", H, tol_or(c, 1e-3)));
  s.check(below("area_drift", area, 1e-5));
  s.check(below("center_drift", center, 1e-5));
}

bool bad_input(ErrorKind k) {
  return k == ErrorKind::domain || k == ErrorKind::pole || k == ErrorKind::invalid_input ||
         k == ErrorKind::not_symmetric;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Session s(cfg, out);
  try {
    if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) throw Error(ErrorKind::domain, "alpha must lie in [0,1]");
    if (cfg.m < 2) throw Error(ErrorKind::invalid_input, "m must be at least 2");
    if (cfg.tol < 0.0) throw Error(ErrorKind::invalid_input, "tol must be positive");
    const std::string& k = cfg.command;
    if (k == "dispersion")
      cmd_dispersion(cfg, s);
    else if (k == "verify-integrals")
      cmd_verify_integrals(cfg, s);
    else if (k == "linearize")
      cmd_linearize(cfg, s);
    else if (k == "scan")
      cmd_scan(cfg, s);
    else if (k == "solve-branch")
      cmd_solve_branch(cfg, s);
    else if (k == "ellipse-test")
      cmd_ellipse_test(cfg, s);
    else if (k == "evolve")
      cmd_evolve(cfg, s);
    else if (k == "rigid-check")
      cmd_rigid_check(cfg, s);
    else
      throw Error(ErrorKind::invalid_input, "unknown command " + k);
  } catch (const Error& e) {
    err << "FAIL command=" << cfg.command << " kind=" << to_string(e.kind()) << " message=\"" << one_line(e.what())
        << "\"\n";
    return bad_input(e.kind()) ? 2 : 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "FAIL command=" << cfg.command << " kind=invalid_input message=\"" << one_line(e.what()) << "\"\n";
    return 2;
  } catch (const std::exception& e) {
    err << "FAIL command=" << cfg.command << " kind=internal message=\"" << one_line(e.what()) << "\"\n";
    return 1;
  }
  return s.finish(err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (const char* d = std::getenv("GSQG_OUTPUT_DIR"); d && *d) c.output_dir = d;

  CLI::App app{"gSQG rotating patches: dispersion, linearization, branches and contour dynamics", "gsqg"};
  app.require_subcommand(1, 1);
  std::string dir = c.output_dir.string();
  std::string format = "csv";

  auto sub = [&](const char* name, const char* help) {
    CLI::App* a = app.add_subcommand(name, help);
    a->add_option("--alpha", c.alpha, "kernel exponent in [0,1]")->required()->check(CLI::Range(0.0, 1.0));
    a->add_option("--output-dir", dir, "directory for result files")->capture_default_str();
    a->add_option("--format", format, "table format; svg plots the table")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    a->add_option("--tol", c.tol, "check tolerance")->check(CLI::PositiveNumber);
    return a;
  };
  const auto M = CLI::Range(2, 1 << 16);

  CLI::App* d = sub("dispersion", "dispersion values with gap and asymptotics");
  d->add_option("--m-max", c.m_max, "largest symmetry")->check(M)->capture_default_str();

  CLI::App* vi = sub("verify-integrals", "closed-form moments against quadrature");
  vi->add_option("--n-max", c.n_max, "largest moment index")->check(CLI::Range(0, 4096))->capture_default_str();

  CLI::App* li = sub("linearize", "disc multiplier against the assembled Jacobian");
  li->add_option("--n-max", c.n_max, "truncation")->check(CLI::Range(1, 4096))->capture_default_str();
  li->add_option("--m", c.m, "Omega defaults to the m-th dispersion value")->check(M)->capture_default_str();
  li->add_option("--omega", c.omega, "angular velocity");
  li->add_option("--grid", c.grid, "quadrature nodes")->check(CLI::Range(8, 1 << 20));

  CLI::App* sc = sub("scan", "locate a bifurcation value by bisection");
  sc->add_option("--m", c.m, "symmetry")->required()->check(M);
  sc->add_option("--grid", c.grid, "quadrature nodes")->check(CLI::Range(8, 1 << 20));

  CLI::App* sb = sub("solve-branch", "continue an m-fold V-state branch");
  sb->add_option("--m", c.m, "symmetry")->required()->check(M);
  sb->add_option("--s-max", c.s_max, "largest amplitude")->required()->check(CLI::PositiveNumber);
  sb->add_option("--ds", c.ds, "amplitude step")->required()->check(CLI::PositiveNumber);
  sb->add_option("--K", c.K, "modes per boundary")->check(CLI::Range(2, 4096))->capture_default_str();
  sb->add_option("--grid", c.grid, "quadrature nodes")->check(CLI::Range(8, 1 << 20));

  CLI::App* el = sub("ellipse-test", "fourth sine coefficient of the ellipse residual");
  el->add_option("--Q", c.Q, "ellipse parameter")->capture_default_str();
  el->add_option("--samples", c.samples, "Omega samples on [-1,1]")->check(CLI::Range(2, 100000))->capture_default_str();
  el->add_option("--baseline", c.baseline, "lower bound for min |g4|")->capture_default_str();
  el->add_option("--grid", c.grid, "quadrature nodes")->check(CLI::Range(8, 1 << 20));

  CLI::App* ev = sub("evolve", "contour dynamics from a boundary");
  ev->add_option("--boundary", c.boundary, "boundary JSON file");
  ev->add_flag("--ellipse", c.ellipse, "start from the ellipse with parameter --Q");
  ev->add_option("--Q", c.Q, "ellipse parameter")->capture_default_str();
  ev->add_option("--m", c.m, "V-state symmetry")->check(M)->capture_default_str();
  ev->add_option("--s", c.s, "V-state amplitude")->capture_default_str();
  ev->add_option("--nodes", c.nodes, "contour nodes")->check(CLI::Range(16, 1 << 16))->capture_default_str();
  ev->add_option("--T", c.T, "integration time")->check(CLI::PositiveNumber)->capture_default_str();
  ev->add_option("--cfl", c.cfl, "fraction of the stable step")->check(CLI::Range(1e-6, 0.999))->capture_default_str();
  ev->add_option("--frames", c.frames, "record every this many steps")->check(CLI::PositiveNumber)->capture_default_str();

  CLI::App* rc = sub("rigid-check", "evolve a V-state and compare with its rotation");
  rc->add_option("--m", c.m, "symmetry")->check(M)->capture_default_str();
  rc->add_option("--s", c.s, "amplitude")->capture_default_str();
  rc->add_option("--nodes", c.nodes, "contour nodes")->check(CLI::Range(16, 1 << 16))->capture_default_str();
  rc->add_option("--fraction", c.fraction, "fraction of the period")->check(CLI::PositiveNumber)->capture_default_str();
  rc->add_option("--cfl", c.cfl, "fraction of the stable step")->check(CLI::Range(1e-6, 0.999))->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const std::string cmd = app.get_subcommands().empty() ? "none" : app.get_subcommands().front()->get_name();
    err << "FAIL command=" << cmd << " kind=invalid_input message=\"" << one_line(e.what()) << "\"\n";
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.output_dir = dir;
  c.format = format == "json" ? OutputFormat::json : format == "svg" ? OutputFormat::svg : OutputFormat::csv;
  return run(c, out, err);
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace gsqg
