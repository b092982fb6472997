#pragma once

#include "hnpoly/polygon.hpp"

#include <optional>

namespace hnpoly {

/// Constraints for enumerating concave lattice paths from the origin.
struct PathEnumOptions {
    /// Stay weakly below this polygon (checked at every integer abscissa).
    /// Its endpoint must equal `end` when present.
    std::optional<Polygon> below;
    /// Cap on the slope of the first edge (non-strict); later edges are
    /// strictly smaller by concavity.
    std::optional<Slope> max_first_slope;
    /// Cap on |y| of every breakpoint.
    std::optional<Int> y_abs_cap;
};

/// All concave lattice paths from (0,0) to `end` satisfying the options,
/// sorted ascending lexicographically by height profile. At least one of the
/// constraints must make the set finite (a `below` polygon, or a first-slope
/// cap, or a y cap). Throws std::domain_error if end.x exceeds the
/// enumeration width cap.
std::vector<Polygon> concave_paths_to(const Point& end, const PathEnumOptions& opts);

/// Width cap for all enumerations, read once from HNPOLY_MAX_RANK
/// (default 64). Guards against runaway sweeps on CLI input.
long enum_width_cap();

}  // namespace hnpoly
