#include "wmds/render.hpp"

#include <algorithm>
#include <sstream>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_point.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

namespace wmds {

namespace bg = boost::geometry;

namespace {

using Point = bg::model::d2::point_xy<double>;

struct Box {
  int x0, x1, y0, y1;
};

Box bounds(const SupportPlot& plot) {
  Box b{0, 1, 0, 1};
  auto grow = [&](const std::array<int, 2>& p) {
    b.x0 = std::min(b.x0, p[0]);
    b.x1 = std::max(b.x1, p[0]);
    b.y0 = std::min(b.y0, p[1]);
    b.y1 = std::max(b.y1, p[1]);
  };
  for (const auto& p : plot.points) grow(p);
  for (const auto& p : plot.outline) grow(p);
  return b;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SupportPlot support_plot(const PPartContext& ctx, const LaurentPoly& poly, std::string title) {
  if (ctx.rank() != 2)
    throw PlotRankError("support plots need a rank-2 root system, got rank " + std::to_string(ctx.rank()));
  SupportPlot plot;
  plot.title = std::move(title);
  for (const auto& v : poly.support()) plot.points.push_back({v[0], v[1]});
  std::sort(plot.points.begin(), plot.points.end());

  bg::model::multi_point<Point> verts;
  for (const auto& v : ctx.twisted().vertices()) bg::append(verts, Point(v[0], v[1]));
  bg::model::polygon<Point, false> hull;  // counterclockwise
  bg::convex_hull(verts, hull);
  const auto& ring = hull.outer();
  for (std::size_t i = 0; i + 1 < ring.size(); ++i)
    plot.outline.push_back({static_cast<int>(ring[i].x()), static_cast<int>(ring[i].y())});
  return plot;
}

std::string render_svg(const SupportPlot& plot) {
  constexpr int kUnit = 40, kMargin = 60;
  const Box b = bounds(plot);
  const int width = (b.x1 - b.x0) * kUnit + 2 * kMargin;
  const int height = (b.y1 - b.y0) * kUnit + 2 * kMargin;
  auto sx = [&](int x) { return kMargin + (x - b.x0) * kUnit; };
  auto sy = [&](int y) { return height - kMargin - (y - b.y0) * kUnit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<!-- x1^k1 x2^k2 corresponds to x^(k1 alpha1 + k2 alpha2) -->\n"
     << "<title>" << escape_xml(plot.title) << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes through the origin
  os << "<g stroke=\"gray\" stroke-width=\"1\">\n"
     << "<line x1=\"" << sx(b.x0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(b.x1) + kMargin / 2 << "\" y2=\""
     << sy(0) << "\"/>\n"
     << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(b.y0) << "\" x2=\"" << sx(0) << "\" y2=\""
     << sy(b.y1) - kMargin / 2 << "\"/>\n"
     << "</g>\n"
     << "<text x=\"" << sx(b.x1) + kMargin / 2 + 4 << "\" y=\"" << sy(0) + 4
     << "\" font-family=\"serif\" font-size=\"14\">x<tspan baseline-shift=\"sub\" font-size=\"10\">1</tspan></text>\n"
     << "<text x=\"" << sx(0) - 6 << "\" y=\"" << sy(b.y1) - kMargin / 2 - 6
     << "\" font-family=\"serif\" font-size=\"14\">x<tspan baseline-shift=\"sub\" font-size=\"10\">2</tspan></text>\n";

  if (!plot.outline.empty()) {
    os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\" points=\"";
    for (std::size_t i = 0; i < plot.outline.size(); ++i)
      os << (i ? " " : "") << sx(plot.outline[i][0]) << ',' << sy(plot.outline[i][1]);
    os << "\"/>\n";
  }
  os << "<g fill=\"black\">\n";
  for (const auto& p : plot.points)
    os << "<circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"4\"/>\n";
  os << "</g>\n"
     << "<text x=\"" << kMargin << "\" y=\"" << kMargin / 2 << "\" font-family=\"serif\" font-size=\"16\">"
     << escape_xml(plot.title) << "</text>\n"
     << "</svg>\n";
  return os.str();
}

std::string render_tikz(const SupportPlot& plot) {
  const Box b = bounds(plot);
  std::ostringstream os;
  os << "% " << plot.title << "\n"
     << "% x_1^{k_1} x_2^{k_2} corresponds to x^{k_1 alpha_1 + k_2 alpha_2}\n"
     << "\\begin{tikzpicture}[scale=0.5]\n"
     << "  \\draw[->, gray] (" << b.x0 << ",0) -- (" << b.x1 + 1 << ",0) node[right] {$x_1$};\n"
     << "  \\draw[->, gray] (0," << b.y0 << ") -- (0," << b.y1 + 1 << ") node[above] {$x_2$};\n";
  if (!plot.outline.empty()) {
    os << "  \\draw[dashed] ";
    for (const auto& p : plot.outline) os << '(' << p[0] << ',' << p[1] << ") -- ";
    os << "cycle;\n";
  }
  for (const auto& p : plot.points) os << "  \\fill (" << p[0] << ',' << p[1] << ") circle (3pt);\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace wmds
