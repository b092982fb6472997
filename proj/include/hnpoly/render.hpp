#pragma once

#include "hnpoly/polygon.hpp"

#include <string>

namespace hnpoly {

/// SVG drawing of a polygon comparison: solid upper polygon, dashed lower
/// polygon, the enclosed region shaded. Requires polygon_leq(lower, upper)
/// (throws std::invalid_argument otherwise). Output is a pure function of
/// the inputs, byte for byte.
std::string render_svg(const Polygon& lower, const Polygon& upper);

/// The same comparison as TikZ code.
std::string render_tikz(const Polygon& lower, const Polygon& upper);

}  // namespace hnpoly
