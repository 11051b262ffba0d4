#include <doctest.h>

#include <regex>
#include <set>

#include "wmds/ppart.hpp"
#include "wmds/render.hpp"

using namespace wmds;

namespace {

std::set<std::array<int, 2>> support_of(const LaurentPoly& p) {
  std::set<std::array<int, 2>> out;
  for (const auto& v : p.support()) out.insert({v[0], v[1]});
  return out;
}

}  // namespace

TEST_CASE("plotted points are exactly the support") {
  const PPartContext ctx(Family::A, 2, 3, {0, 0});
  const PPart pp = compute_N(ctx);
  const SupportPlot plot = support_plot(ctx, pp.poly, "A2");
  CHECK(std::set<std::array<int, 2>>(plot.points.begin(), plot.points.end()) == support_of(pp.poly));
  CHECK(plot.points.size() == 6);
  CHECK(plot.outline.size() == 6);

  const std::string tikz = render_tikz(plot);
  const std::regex dot(R"(\\fill \((-?\d+),(-?\d+)\) circle)");
  std::set<std::array<int, 2>> drawn;
  for (auto it = std::sregex_iterator(tikz.begin(), tikz.end(), dot); it != std::sregex_iterator(); ++it)
    drawn.insert({std::stoi((*it)[1]), std::stoi((*it)[2])});
  CHECK(drawn == support_of(pp.poly));
  CHECK(tikz.find("\\draw[dashed]") != std::string::npos);
  CHECK(tikz.find("$x_1$") != std::string::npos);
  CHECK(tikz.find("$x_2$") != std::string::npos);

  const std::string svg = render_svg(plot);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  CHECK(circles == plot.points.size());
}

TEST_CASE("outline of the B2 polytope") {
  const PPartContext ctx(Family::B, 2, 2, {2, 4});
  const LaurentPoly f = compute_f_truncated(ctx, ctx.twisted().max_vertex_height() + 4);
  const SupportPlot plot = support_plot(ctx, f, "B2");
  CHECK(plot.outline.size() == 8);
  CHECK(std::set<std::array<int, 2>>(plot.points.begin(), plot.points.end()) == support_of(f));
}

TEST_CASE("plots need rank two") {
  const PPartContext ctx(Family::A, 3, 2, {0, 0, 0});
  CHECK_THROWS_AS(support_plot(ctx, ctx.one(), "A3"), PlotRankError);
}
