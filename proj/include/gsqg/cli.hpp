#pragma once

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace gsqg {

enum class OutputFormat { csv, json, svg };

// Parsed command line. Zero tol or grid selects the per-command default.
struct RunConfig {
  std::string command;
  double alpha = 0.5;
  int m = 3;
  int grid = 0;
  double tol = 0.0;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::csv;

  int m_max = 10;           // dispersion
  int n_max = 16;           // verify-integrals, linearize
  double omega = std::numeric_limits<double>::quiet_NaN();  // linearize; NaN selects Omega_m
  double Q = 0.3;           // ellipse-test, evolve
  int samples = 201;        // ellipse-test Omega samples on [-1, 1]
  double baseline = 0.0;    // ellipse-test lower bound for min |g4|
  double s_max = 0.0;       // solve-branch
  double ds = 0.0;
  int K = 16;               // modes per m-fold boundary
  double s = 0.03;          // evolve, rigid-check
  std::string boundary;     // evolve: boundary JSON file
  bool ellipse = false;     // evolve: start from the ellipse
  int nodes = 1024;
  double T = 1.0;           // evolve horizon
  double fraction = 0.25;   // rigid-check: fraction of the period
  double cfl = 0.9;
  int frames = 10;          // evolve: record every this many steps
};

// Exit codes: 0 all checks passed, 1 a numerical check failed, 2 bad input.
// Failures print one line to err starting with "FAIL".
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// args excludes the program name. GSQG_OUTPUT_DIR sets the default output directory.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace gsqg
