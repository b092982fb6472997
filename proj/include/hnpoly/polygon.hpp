#pragma once

#include "hnpoly/bundle.hpp"

#include <vector>

namespace hnpoly {

/// Integer lattice point.
struct Point {
    Int x, y;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Edge vector of one HN segment: x = block rank, y = block degree.
/// Vectors from hn_vectors always have x > 0.
struct HNVector {
    Int x, y;
    friend bool operator==(const HNVector&, const HNVector&) = default;
};

/// Two-dimensional cross product v.x*w.y - v.y*w.x. Antisymmetric.
Int vec_cross(const HNVector& v, const HNVector& w);

/// Slope comparison: slope(v) <= slope(w) (strict variant below). Requires
/// nonzero x components; throws std::domain_error otherwise. Agrees with the
/// sign of vec_cross when the x components have the same sign, and with the
/// opposite sign when they differ.
bool vec_preceq(const HNVector& v, const HNVector& w);
bool vec_prec(const HNVector& v, const HNVector& w);

/// An HN polygon: lattice breakpoints starting at (0,0), strictly increasing
/// x, segment slopes strictly decreasing (upper-concave), no collinear
/// interior breakpoints. A single breakpoint (0,0) is the polygon of the
/// zero bundle.
class Polygon {
public:
    /// Validates and adopts the breakpoints; throws std::invalid_argument on
    /// any violated invariant.
    static Polygon from_breakpoints(std::vector<Point> pts);

    const std::vector<Point>& breakpoints() const { return pts_; }
    const Point& end() const { return pts_.back(); }
    const Int& width() const { return pts_.back().x; }

    /// Exact height of the polygon at abscissa x in [0, width]; throws
    /// std::domain_error outside that range.
    Rational height_at(const Int& x) const;

    /// Heights at the integer abscissas 0..width, in order.
    std::vector<Rational> height_profile() const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point> pts_{Point{0, 0}};
};

/// One edge vector per HN block, in order of strictly decreasing slope.
/// Their sum is (rank, degree).
std::vector<HNVector> hn_vectors(const Bundle& b);

/// Partial sums of hn_vectors; mutually inverse with bundle_of.
Polygon polygon_of(const Bundle& b);
Bundle bundle_of(const Polygon& p);

/// The straight segment joining p's endpoints (the polygon of the semistable
/// bundle with the same rank and degree, when that is a lattice polygon the
/// chord always is: its endpoints are lattice points).
Polygon chord_of(const Polygon& p);

/// True iff p and q share both endpoints and p lies weakly below q. False,
/// not an error, on endpoint mismatch. Heights are compared at the
/// breakpoint abscissas of both polygons; piecewise linearity makes that
/// sufficient.
bool polygon_leq(const Polygon& p, const Polygon& q);

/// deg of the bundle of maps v -> w: rank(v) deg(w) - deg(v) rank(w),
/// equivalently the sum of all pairwise HN-vector cross products.
Int deg_hom(const Bundle& v, const Bundle& w);

/// Degree of the slope->=0 part of the map bundle: the cross products summed
/// over pairs v_i preceq w_j only. Nonnegative for HN vectors.
Int deg_hom_nonneg(const Bundle& v, const Bundle& w);

/// deg_hom_nonneg(v, v): twice the lattice area between the HN polygon and
/// its chord. Zero exactly for semistable bundles. Throws on the zero bundle.
Int instability(const Bundle& v);

/// Twice the enclosed lattice area between two comparable polygons; requires
/// polygon_leq(lower, upper) and throws std::invalid_argument otherwise.
/// Additive across any intermediate polygon.
Int twice_area_between(const Polygon& lower, const Polygon& upper);

}  // namespace hnpoly
