#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gsqg/continuation.hpp"
#include "gsqg/evolution.hpp"
#include "gsqg/geometry.hpp"

namespace gsqg {

using Json = nlohmann::json;
using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Doubles with 12 significant digits; strings quoted when they hold a comma or quote.
std::string to_csv(const Table& t);
// Array of row objects; non-finite doubles become null.
Json to_json(const Table& t);

void write_text(const std::filesystem::path& path, const std::string& content);

Json boundary_to_json(const FourierBoundary& b);
Json mfold_to_json(const MFoldBoundary& b);
// Accepts {"coeffs": [...], "scale": s} or {"m": m, "a": [...]}.
FourierBoundary boundary_from_json(const Json& j);

Json solution_to_json(const VStateSolution& s);
Json branch_to_json(const BranchTable& t);
// s, omega, residual and the first `leading` reduced coefficients.
Table branch_table(const BranchTable& t, int leading = 4);

Json contour_to_json(const ContourState& s);
ContourState contour_from_json(const Json& j);

// Closed curve resampled to n points by trigonometric interpolation.
std::vector<cplx> resample_closed(const std::vector<cplx>& pts, int n);

struct SvgCurve {
  std::vector<cplx> points;  // closed curve samples, any count
  std::string stroke = "#1f4e79";
  std::string label;
};

// Closed curves as cubic Bezier paths through 512 resampled points.
std::string svg_closed_curves(const std::vector<SvgCurve>& curves, const std::string& title);

struct SvgSeries {
  std::string name;
  std::vector<double> x, y;
  std::string stroke = "#1f4e79";
};

std::string svg_line_plot(const std::vector<SvgSeries>& series, const std::string& title,
                          const std::string& xlabel, const std::string& ylabel);

}  // namespace gsqg
