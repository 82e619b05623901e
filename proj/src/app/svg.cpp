#include "kbill/app/svg.hpp"

#include <array>
#include <cstdio>
#include <set>
#include <sstream>

#include "kbill/geometry.hpp"

namespace kbill::app {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<CsvRow>& rows, const SvgStyle& style) {
  const double x0 = style.margin, x1 = style.width - style.margin / 2.0;
  const double y0 = style.margin / 2.0, y1 = style.height - style.margin;
  auto px = [&](double xi) { return x0 + (x1 - x0) * xi / kTwoPi; };
  auto py = [&](double alpha) { return y1 - (y1 - y0) * (alpha + 0.5 * kPi) / kPi; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"" << style.background << "\"/>\n";

  // Frame and ticks at multiples of pi/2.
  svg << "<g stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
  svg << "<rect x=\"" << fixed2(x0) << "\" y=\"" << fixed2(y0) << "\" width=\"" << fixed2(x1 - x0) << "\" height=\""
      << fixed2(y1 - y0) << "\"/>\n";
  const std::array<const char*, 5> xi_labels = {"0", "&#960;/2", "&#960;", "3&#960;/2", "2&#960;"};
  for (int k = 0; k <= 4; ++k) {
    const double x = px(k * 0.5 * kPi);
    svg << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(y1) << "\" x2=\"" << fixed2(x) << "\" y2=\""
        << fixed2(y1 + 5) << "\"/>\n";
  }
  const std::array<const char*, 3> alpha_labels = {"-&#960;/2", "0", "&#960;/2"};
  for (int k = 0; k <= 2; ++k) {
    const double y = py((k - 1) * 0.5 * kPi);
    svg << "<line x1=\"" << fixed2(x0 - 5) << "\" y1=\"" << fixed2(y) << "\" x2=\"" << fixed2(x0) << "\" y2=\""
        << fixed2(y) << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">\n";
  for (int k = 0; k <= 4; ++k)
    svg << "<text x=\"" << fixed2(px(k * 0.5 * kPi)) << "\" y=\"" << fixed2(y1 + 18)
        << "\" text-anchor=\"middle\">" << xi_labels[k] << "</text>\n";
  for (int k = 0; k <= 2; ++k)
    svg << "<text x=\"" << fixed2(x0 - 8) << "\" y=\"" << fixed2(py((k - 1) * 0.5 * kPi) + 4)
        << "\" text-anchor=\"end\">" << alpha_labels[k] << "</text>\n";
  svg << "<text x=\"" << fixed2(0.5 * (x0 + x1)) << "\" y=\"" << fixed2(y1 + 36)
      << "\" text-anchor=\"middle\">&#958;</text>\n";
  svg << "<text x=\"" << fixed2(x0 - 36) << "\" y=\"" << fixed2(0.5 * (y0 + y1))
      << "\" text-anchor=\"middle\">&#945;</text>\n";
  svg << "</g>\n";

  svg << "<g stroke=\"none\">\n";
  std::set<std::pair<std::size_t, std::string>> drawn;
  const std::string r = fixed2(style.marker_radius);
  for (const auto& row : rows) {
    const std::string cx = fixed2(px(wrap_angle(row.xi)));
    const std::string cy = fixed2(py(row.alpha));
    if (!drawn.insert({row.orbit_id, cx + ',' + cy}).second) continue;
    svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\""
        << kPalette[row.orbit_id % kPalette.size()] << "\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace kbill::app
