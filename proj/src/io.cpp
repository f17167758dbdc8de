#include "gsqg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gsqg/error.hpp"
#include "gsqg/spectral.hpp"

namespace gsqg {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return fmt("%.12g", *d);
  if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '&': o += "&amp;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) out += (c ? "," : "") + csv_cell(t.columns[c]);
  out += "\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) throw Error(ErrorKind::invalid_input, "to_csv: ragged row");
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(row[c]);
    out += "\n";
  }
  return out;
}

Json to_json(const Table& t) {
  Json arr = Json::array();
  for (const auto& row : t.rows) {
    Json o = Json::object();
    for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c)
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              o[t.columns[c]] = number(v);
            else
              o[t.columns[c]] = v;
          },
          row[c]);
    arr.push_back(std::move(o));
  }
  return arr;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::invalid_input, "cannot write " + path.string());
  f << content;
  if (!f) throw Error(ErrorKind::invalid_input, "write failed for " + path.string());
}

Json boundary_to_json(const FourierBoundary& b) { return Json{{"scale", b.scale}, {"coeffs", b.coeffs}}; }

Json mfold_to_json(const MFoldBoundary& b) { return Json{{"m", b.m}, {"a", b.a}}; }

FourierBoundary boundary_from_json(const Json& j) {
  try {
    if (j.contains("coeffs")) {
      FourierBoundary b;
      b.coeffs = j.at("coeffs").get<std::vector<double>>();
      b.scale = j.value("scale", 1.0);
      if (b.coeffs.empty()) b.coeffs.push_back(0.0);
      return b;
    }
    if (j.contains("m") && j.contains("a"))
      return embed_mfold(MFoldBoundary{j.at("m").get<int>(), j.at("a").get<std::vector<double>>()});
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("boundary JSON: ") + e.what());
  }
  throw Error(ErrorKind::invalid_input, "boundary JSON needs \"coeffs\" or \"m\" and \"a\"");
}

Json solution_to_json(const VStateSolution& s) {
  return Json{{"alpha", s.alpha},
              {"m", s.m},
              {"s", s.s},
              {"omega", s.omega},
              {"boundary", mfold_to_json(s.boundary)},
              {"residual_norm", number(s.residual_norm)},
              {"grid_size", s.grid_size},
              {"iterations", s.iterations}};
}

Json branch_to_json(const BranchTable& t) {
  Json sols = Json::array();
  for (const VStateSolution& s : t.solutions) sols.push_back(solution_to_json(s));
  Json j{{"alpha", t.alpha}, {"m", t.m}, {"last_good_s", t.last_good_s}, {"solutions", sols}};
  j["failure"] = t.failure ? Json(to_string(*t.failure)) : Json(nullptr);
  j["failure_message"] = t.failure_message;
  j["experimental"] = t.alpha == 1.0;
  return j;
}

Table branch_table(const BranchTable& t, int leading) {
  Table tab;
  tab.columns = {"s", "omega", "residual"};
  for (int k = 0; k < leading; ++k) tab.columns.push_back("a" + std::to_string(k));
  for (const VStateSolution& s : t.solutions) {
    std::vector<Cell> row{s.s, s.omega, s.residual_norm};
    for (int k = 0; k < leading; ++k) row.emplace_back(k < static_cast<int>(s.boundary.a.size()) ? s.boundary.a[k] : 0.0);
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

Json contour_to_json(const ContourState& s) {
  Json nodes = Json::array();
  for (const cplx& z : s.nodes) nodes.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"time", s.time}, {"alpha", s.alpha}, {"nodes", nodes}};
}

ContourState contour_from_json(const Json& j) {
  try {
    ContourState s;
    s.time = j.at("time").get<double>();
    s.alpha = j.at("alpha").get<double>();
    for (const Json& p : j.at("nodes")) s.nodes.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::invalid_input, std::string("contour JSON: ") + e.what());
  }
}

std::vector<cplx> resample_closed(const std::vector<cplx>& pts, int n) {
  const int M = static_cast<int>(pts.size());
  if (M < 3 || n < 3) throw Error(ErrorKind::invalid_input, "resample_closed: need at least 3 points");
  const std::vector<cplx> X = fft_forward(pts);
  const int K = std::min(M, n);
  std::vector<cplx> Y(n, 0.0);
  // Modes |k| < K/2 carried over; an even cut splits the edge mode.
  for (int k = -(K - 1) / 2; k <= (K - 1) / 2; ++k) Y[(k + n) % n] = X[(k + M) % M];
  if (K % 2 == 0) {
    const int k = K / 2;
    const cplx edge = K == M ? X[k % M] : 0.5 * (X[k % M] + X[(M - k) % M]);
    Y[k % n] += 0.5 * edge;
    Y[(n - k) % n] += 0.5 * edge;
  }
  std::vector<cplx> y = fft_backward(Y);
  for (cplx& v : y) v /= static_cast<double>(M);
  return y;
}

namespace {

struct Frame {
  double x0, x1, y0, y1, W = 640, H = 640, pad = 40;
  double sx(double x) const { return pad + (x - x0) / (x1 - x0) * (W - 2 * pad); }
  double sy(double y) const { return H - pad - (y - y0) / (y1 - y0) * (H - 2 * pad); }
};

std::string header(const Frame& f, const std::string& title) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.W << "\" height=\"" << f.H
    << "\" viewBox=\"0 0 " << f.W << " " << f.H << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << f.W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
    << xml_escape(title) << "</text>\n";
  return o.str();
}

std::string pt(double x, double y) { return fmt("%.3f", x) + "," + fmt("%.3f", y); }

}  // namespace

std::string svg_closed_curves(const std::vector<SvgCurve>& curves, const std::string& title) {
  double r = 0.0;
  cplx c = 0.0;
  std::vector<std::vector<cplx>> res;
  std::size_t count = 0;
  for (const SvgCurve& cv : curves) {
    res.push_back(resample_closed(cv.points, 512));
    for (const cplx& z : res.back()) c += z;
    count += res.back().size();
  }
  if (count) c /= static_cast<double>(count);
  for (const auto& pts : res)
    for (const cplx& z : pts) r = std::max(r, std::abs(z - c));
  r = r > 0.0 ? 1.05 * r : 1.0;
  const Frame f{c.real() - r, c.real() + r, c.imag() - r, c.imag() + r};
  std::string o = header(f, title);
  for (std::size_t k = 0; k < res.size(); ++k) {
    const auto& p = res[k];
    const int n = static_cast<int>(p.size());
    auto P = [&](int i) { return p[((i % n) + n) % n]; };
    std::string d = "M" + pt(f.sx(P(0).real()), f.sy(P(0).imag()));
    for (int i = 0; i < n; ++i) {
      // Catmull-Rom tangent at each end of the segment.
      const cplx b1 = P(i) + (P(i + 1) - P(i - 1)) / 6.0;
      const cplx b2 = P(i + 1) - (P(i + 2) - P(i)) / 6.0;
      d += " C" + pt(f.sx(b1.real()), f.sy(b1.imag())) + " " + pt(f.sx(b2.real()), f.sy(b2.imag())) + " " +
           pt(f.sx(P(i + 1).real()), f.sy(P(i + 1).imag()));
    }
    d += " Z";
    o += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + xml_escape(curves[k].stroke) + "\" stroke-width=\"1.5\">";
    if (!curves[k].label.empty()) o += "<title>" + xml_escape(curves[k].label) + "</title>";
    o += "</path>\n";
  }
  return o + "</svg>\n";
}

std::string svg_line_plot(const std::vector<SvgSeries>& series, const std::string& title, const std::string& xlabel,
                          const std::string& ylabel) {
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const SvgSeries& s : series)
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  if (!(x1 > x0)) {
    x0 = std::isfinite(x0) ? x0 - 1 : 0;
    x1 = x0 + 2;
  }
  if (!(y1 > y0)) {
    y0 = std::isfinite(y0) ? y0 - 1 : 0;
    y1 = y0 + 2;
  }
  const double my = 0.05 * (y1 - y0);
  Frame f{x0, x1, y0 - my, y1 + my, 720, 480, 60};
  std::string o = header(f, title);
  o += "<rect x=\"" + fmt("%.0f", f.pad) + "\" y=\"" + fmt("%.0f", f.pad) + "\" width=\"" + fmt("%.0f", f.W - 2 * f.pad) +
       "\" height=\"" + fmt("%.0f", f.H - 2 * f.pad) + "\" fill=\"none\" stroke=\"#888\"/>\n";
  o += "<text x=\"" + fmt("%.0f", f.W / 2) + "\" y=\"" + fmt("%.0f", f.H - 15) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + xml_escape(xlabel) + "</text>\n";
  o += "<text x=\"15\" y=\"" + fmt("%.0f", f.H / 2) + "\" transform=\"rotate(-90 15 " + fmt("%.0f", f.H / 2) +
       ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + xml_escape(ylabel) + "</text>\n";
  for (double v : {x0, x1})
    o += "<text x=\"" + fmt("%.1f", f.sx(v)) + "\" y=\"" + fmt("%.1f", f.H - f.pad + 16) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%.6g", v) + "</text>\n";
  for (double v : {y0, y1})
    o += "<text x=\"" + fmt("%.1f", f.pad - 4) + "\" y=\"" + fmt("%.1f", f.sy(v)) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + fmt("%.6g", v) + "</text>\n";
  int k = 0;
  for (const SvgSeries& s : series) {
    std::string pts;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) pts += pt(f.sx(s.x[i]), f.sy(s.y[i])) + " ";
    o += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + xml_escape(s.stroke) +
         "\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i)
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i]))
        o += "<circle cx=\"" + fmt("%.3f", f.sx(s.x[i])) + "\" cy=\"" + fmt("%.3f", f.sy(s.y[i])) +
             "\" r=\"2.5\" fill=\"" + xml_escape(s.stroke) + "\"/>\n";
    if (!s.name.empty())
      o += "<text x=\"" + fmt("%.0f", f.W - f.pad - 4) + "\" y=\"" + fmt("%.0f", f.pad + 16 + 16 * k) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + xml_escape(s.stroke) +
           "\">" + xml_escape(s.name) + "</text>\n";
    ++k;
  }
  return o + "</svg>\n";
}

}  // namespace gsqg
