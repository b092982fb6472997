#pragma once

#include "hnpoly/polygon.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hnpoly {

/// The finite poset of HN polygons lying weakly below a declared ceiling,
/// ordered by polygon_leq. Nodes are sorted ascending lexicographically by
/// height vector, so the chord-most polygon comes first and the ceiling
/// last.
struct StrataPoset {
    Polygon ceiling;
    std::vector<Polygon> nodes;
};

/// All polygons P' with polygon_leq(P', ceiling): the finite realization of
/// the closed stratum indexed by the ceiling. Always contains the ceiling.
std::vector<Polygon> down_set(const Polygon& ceiling);

/// Is the stratum of p_target contained in the closure of the stratum of
/// p_stratum? True iff polygon_leq(p_stratum, p_target). Throws
/// std::invalid_argument on endpoint mismatch.
bool in_closure(const Polygon& p_target, const Polygon& p_stratum);

StrataPoset make_poset(const Polygon& ceiling);

/// Covering relations of polygon_leq on the poset nodes, as index pairs
/// (lower, upper); the transitive reduction of the full order.
std::vector<std::pair<size_t, size_t>> hasse_diagram(const StrataPoset& poset);

/// DOT digraph of the Hasse diagram, one edge "lower" -> "upper" per
/// covering pair, node labels the breakpoint lists.
std::string to_dot(const StrataPoset& poset);

/// Text label for a polygon: "[(0,0),(4,9),(8,7)]".
std::string format_polygon(const Polygon& p);

}  // namespace hnpoly
