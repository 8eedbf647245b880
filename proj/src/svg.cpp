#include "takagi/svg.hpp"

#include <cstdio>
#include <sstream>

#include "takagi/omega.hpp"
#include "takagi/singular.hpp"
#include "takagi/takagi_eval.hpp"

namespace takagi {

namespace {

// Fixed canvas; margins leave room for the axis labels.
constexpr double kW = 860.0, kH = 560.0, kM = 48.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double px(double unit) { return kM + unit * (kW - 2 * kM); }
double py(double unit) { return kH - kM - unit * (kH - 2 * kM); }

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\""
      << kH << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostringstream& out, const std::string& y_top_label) {
  out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\""
      << fmt(px(1)) << "\" y2=\"" << fmt(py(0)) << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\""
      << fmt(px(0)) << "\" y2=\"" << fmt(py(1)) << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << fmt(px(0)) << "\" y=\"" << fmt(py(0) + 18)
      << "\" font-size=\"12\">0</text>\n"
      << "<text x=\"" << fmt(px(1) - 6) << "\" y=\"" << fmt(py(0) + 18)
      << "\" font-size=\"12\">1</text>\n"
      << "<text x=\"" << fmt(px(0) - 34) << "\" y=\"" << fmt(py(1) + 4)
      << "\" font-size=\"12\">" << y_top_label << "</text>\n";
}

// Graph of the function with ordinates rescaled so 2/3 sits at the top.
std::string graph_points(int depth) {
  const auto grid = tau_grid_scaled(depth);
  const double denom = static_cast<double>(1ULL << depth);
  std::ostringstream pts;
  for (size_t k = 0; k < grid.size(); ++k) {
    const double x = static_cast<double>(k) / denom;
    const double y = static_cast<double>(grid[k]) / denom * 1.5;  // 2/3 -> 1
    if (k) pts << " ";
    pts << fmt(px(x)) << "," << fmt(py(y));
  }
  return pts.str();
}

}  // namespace

std::string svg_graph(int depth) {
  std::ostringstream out;
  open_svg(out);
  axes(out, "2/3");
  out << "<polyline fill=\"none\" stroke=\"#335577\" stroke-width=\"1\" points=\""
      << graph_points(depth) << "\"/>\n</svg>\n";
  return out.str();
}

std::string svg_cover(const LevelCover& cover, int graph_depth) {
  std::ostringstream out;
  open_svg(out);
  axes(out, "2/3");
  out << "<polyline fill=\"none\" stroke=\"#aabbcc\" stroke-width=\"1\" points=\""
      << graph_points(graph_depth) << "\"/>\n";
  if (!cover.in_range) {
    out << "<text x=\"" << fmt(kW / 2 - 90) << "\" y=\"" << fmt(kH / 2)
        << "\" font-size=\"14\">level outside [0, 2/3]</text>\n</svg>\n";
    return out.str();
  }
  const double level = cover.level.to_double() * 1.5;
  out << "<line x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(level)) << "\" x2=\""
      << fmt(px(1)) << "\" y2=\"" << fmt(py(level))
      << "\" stroke=\"#cc4444\" stroke-dasharray=\"4 3\"/>\n";
  for (const DyadicInterval& iv : cover.possible) {
    const double a = px(iv.left().to_double());
    const double b = px(iv.right().to_double());
    out << "<rect x=\"" << fmt(a) << "\" y=\"" << fmt(py(level) - 3) << "\" width=\""
        << fmt(b - a < 1.0 ? 1.0 : b - a)
        << "\" height=\"6\" fill=\"#cc8844\" fill-opacity=\"0.8\"/>\n";
  }
  for (const ConfirmedPoint& c : cover.confirmed) {
    out << "<circle cx=\"" << fmt(px(c.value.to_double())) << "\" cy=\""
        << fmt(py(level)) << "\" r=\"3.5\" fill=\"#227722\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_staircase(int max_len) {
  std::ostringstream out;
  open_svg(out);
  axes(out, "1");
  std::ostringstream pts;
  pts << fmt(px(0)) << "," << fmt(py(0));
  for (const RemovedInterval& iv : removed_intervals_up_to(max_len)) {
    const double v = tau_s(iv.left).value.to_double();
    pts << " " << fmt(px(iv.left.value().to_double())) << "," << fmt(py(v));
    pts << " " << fmt(px(iv.right.value().to_double())) << "," << fmt(py(v));
  }
  pts << " " << fmt(px(1)) << "," << fmt(py(1));
  out << "<polyline fill=\"none\" stroke=\"#553388\" stroke-width=\"1.5\" points=\""
      << pts.str() << "\"/>\n</svg>\n";
  return out.str();
}

std::string svg_spectrum(const SpectrumTable& table) {
  std::ostringstream out;
  open_svg(out);
  axes(out, "1");
  // alpha runs over (0, 1/2]; dimension enclosures as vertical bars, the
  // asymptotic lower-bound curve behind them.
  std::ostringstream curve;
  bool first = true;
  for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it) {
    const double a = it->alpha.to_double() * 2.0;  // 1/2 -> 1
    const double mid =
        (it->abscissa_bound.lo.to_double() + it->abscissa_bound.hi.to_double()) / 2;
    if (mid < 0) continue;
    if (!first) curve << " ";
    first = false;
    curve << fmt(px(a)) << "," << fmt(py(mid));
  }
  out << "<polyline fill=\"none\" stroke=\"#bb7755\" stroke-width=\"1\" points=\""
      << curve.str() << "\"/>\n";
  for (const SpectrumRow& row : table.rows) {
    const double a = px(row.alpha.to_double() * 2.0);
    const double y1 = py(row.gamma_dim.lo.to_double());
    double y2 = py(row.gamma_dim.hi.to_double());
    if (y1 - y2 < 2.0) y2 = y1 - 2.0;  // keep hairline enclosures visible
    const bool certified = row.exceeds && *row.exceeds;
    const char* color = certified ? "#227722" : "#555555";
    out << "<line x1=\"" << fmt(a) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(a)
        << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    if (row.r == table.r0)
      out << "<circle cx=\"" << fmt(a) << "\" cy=\"" << fmt(y1)
          << "\" r=\"4\" fill=\"none\" stroke=\"#cc4444\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace takagi
