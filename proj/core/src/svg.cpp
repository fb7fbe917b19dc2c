#include "middlecurves/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace middlecurves {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

std::string render_svg(const CurveSet& curves,
                       const std::vector<std::string>& ids) {
  if (curves.dimension() > 2) {
    throw std::invalid_argument("SVG rendering supports dimensions 1 and 2 only");
  }
  std::vector<std::size_t> selected;
  if (ids.empty()) {
    for (std::size_t i = 0; i < curves.size(); ++i) selected.push_back(i);
  } else {
    for (const std::string& id : ids) {
      const std::size_t i = curves.index_of(id);
      if (i == curves.size()) {
        throw std::invalid_argument("no curve with id '" + id + "'");
      }
      selected.push_back(i);
    }
  }
  if (selected.empty()) {
    throw std::invalid_argument("empty selection");
  }

  const bool one_dimensional = curves.dimension() == 1;
  const auto x_of = [&](const Curve& c, std::size_t k) {
    return one_dimensional ? static_cast<double>(k + 1) : c[k][0];
  };
  const auto y_of = [&](const Curve& c, std::size_t k) {
    return one_dimensional ? c[k][0] : c[k][1];
  };

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (std::size_t i : selected) {
    const Curve& c = curves[i];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const double x = x_of(c, k);
      const double y = y_of(c, k);
      if (first) {
        min_x = max_x = x;
        min_y = max_y = y;
        first = false;
      } else {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
      }
    }
  }
  const double span_x = std::max(max_x - min_x, 1.0);
  const double span_y = std::max(max_y - min_y, 1.0);
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 400.0;
  constexpr double kMargin = 32.0;
  const auto sx = [&](double x) {
    return kMargin + (x - min_x) / span_x * (kWidth - 2 * kMargin);
  };
  const auto sy = [&](double y) {
    // SVG y grows downward.
    return kHeight - kMargin - (y - min_y) / span_y * (kHeight - 2 * kMargin);
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) +
         " " + fmt(kHeight) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::size_t color = 0;
  for (std::size_t i : selected) {
    const Curve& c = curves[i];
    const char* stroke = kPalette[color % kPalette.size()];
    ++color;
    out += "  <g stroke=\"" + std::string(stroke) + "\" fill=\"" + stroke +
           "\" stroke-opacity=\"0.85\">\n";
    out += "    <polyline fill=\"none\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0) out += " ";
      out += fmt(sx(x_of(c, k))) + "," + fmt(sy(y_of(c, k)));
    }
    out += "\"/>\n";
    for (std::size_t k = 0; k < c.size(); ++k) {
      out += "    <circle cx=\"" + fmt(sx(x_of(c, k))) + "\" cy=\"" +
             fmt(sy(y_of(c, k))) + "\" r=\"2.5\"/>\n";
    }
    out += "    <text x=\"" + fmt(sx(x_of(c, 0)) + 4) + "\" y=\"" +
           fmt(sy(y_of(c, 0)) - 4) + "\" font-size=\"11\" stroke=\"none\">" +
           c.id() + "</text>\n";
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace middlecurves
