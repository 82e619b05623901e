#pragma once

#include <string>
#include <vector>

#include "kbill/app/csv.hpp"

namespace kbill::app {

struct SvgStyle {
  int width = 900;
  int height = 480;
  int margin = 50;
  double marker_radius = 1.2;
  std::string background = "#ffffff";
};

/// Scatter plot of the section: xi on [0, 2pi] horizontally, alpha on
/// [-pi/2, pi/2] vertically, one palette colour per orbit_id. Identical
/// markers within an orbit are drawn once. Output bytes depend only on the
/// rows and style.
std::string render_svg(const std::vector<CsvRow>& rows, const SvgStyle& style = {});

}  // namespace kbill::app
