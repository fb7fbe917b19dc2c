#ifndef MIDDLECURVES_SVG_HPP
#define MIDDLECURVES_SVG_HPP

#include <string>
#include <vector>

#include "middlecurves/geometry.hpp"

namespace middlecurves {

/// Deterministic SVG rendering of 1-D and 2-D curve sets: one polyline plus
/// vertex dots per curve, colored by curve order from a fixed palette. 1-D
/// curves are drawn with the vertex index on the horizontal axis and the
/// coordinate on the vertical axis. Selecting ids that match nothing, or a
/// dimension above 2, raises std::invalid_argument.
std::string render_svg(const CurveSet& curves,
                       const std::vector<std::string>& ids = {});

}  // namespace middlecurves

#endif  // MIDDLECURVES_SVG_HPP
