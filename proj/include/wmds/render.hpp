#pragma once

// Support plots for rank-2 systems: the nonzero coefficients of a polynomial
// in the (k1, k2) plane, where x1^k1 x2^k2 stands for x^{k1 alpha1 + k2 alpha2},
// with the outline of the polytope Pi_theta.

#include <array>
#include <string>
#include <vector>

#include "wmds/cgaction.hpp"
#include "wmds/laurent.hpp"

namespace wmds {

class PlotRankError : public Error {
 public:
  using Error::Error;
};

struct SupportPlot {
  std::string title;
  std::vector<std::array<int, 2>> points;   // lexicographic order
  std::vector<std::array<int, 2>> outline;  // hull vertices, counterclockwise
};

SupportPlot support_plot(const PPartContext& ctx, const LaurentPoly& poly, std::string title);

std::string render_svg(const SupportPlot& plot);
std::string render_tikz(const SupportPlot& plot);

}  // namespace wmds
