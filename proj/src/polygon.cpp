#include "hnpoly/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnpoly {

Int vec_cross(const HNVector& v, const HNVector& w) { return v.x * w.y - v.y * w.x; }

bool vec_preceq(const HNVector& v, const HNVector& w) {
    if (v.x == 0 || w.x == 0) throw std::domain_error("slope order needs nonzero x components");
    return Rational(v.y, v.x) <= Rational(w.y, w.x);
}

bool vec_prec(const HNVector& v, const HNVector& w) {
    if (v.x == 0 || w.x == 0) throw std::domain_error("slope order needs nonzero x components");
    return Rational(v.y, v.x) < Rational(w.y, w.x);
}

Polygon Polygon::from_breakpoints(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("polygon needs at least the origin");
    if (!(pts.front() == Point{0, 0}))
        throw std::invalid_argument("polygon must start at the origin");
    for (size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x <= pts[i - 1].x)
            throw std::invalid_argument("polygon breakpoints must have strictly increasing x");
    }
    for (size_t i = 2; i < pts.size(); ++i) {
        HNVector e1{pts[i - 1].x - pts[i - 2].x, pts[i - 1].y - pts[i - 2].y};
        HNVector e2{pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y};
        // Strict concavity also rules out collinear interior breakpoints.
        if (vec_cross(e1, e2) >= 0)
            throw std::invalid_argument("polygon slopes must strictly decrease");
    }
    Polygon p;
    p.pts_ = std::move(pts);
    return p;
}

Rational Polygon::height_at(const Int& x) const {
    if (x < 0 || x > width()) throw std::domain_error("abscissa outside polygon range");
    for (size_t i = 1; i < pts_.size(); ++i) {
        if (x <= pts_[i].x) {
            const Point& a = pts_[i - 1];
            const Point& b = pts_[i];
            return Rational(a.y * (b.x - a.x) + (b.y - a.y) * (x - a.x), b.x - a.x);
        }
    }
    return Rational(pts_.back().y);  // x == 0 on the single-point polygon
}

std::vector<Rational> Polygon::height_profile() const {
    std::vector<Rational> hs;
    long w = to_long_checked(width(), "polygon width");
    hs.reserve(static_cast<size_t>(w) + 1);
    for (long x = 0; x <= w; ++x) hs.push_back(height_at(Int(x)));
    return hs;
}

std::vector<HNVector> hn_vectors(const Bundle& b) {
    std::vector<HNVector> vs;
    vs.reserve(b.summands().size());
    for (const auto& s : b.summands()) vs.push_back({s.rank(), s.degree()});
    return vs;
}

Polygon polygon_of(const Bundle& b) {
    std::vector<Point> pts{Point{0, 0}};
    Int x = 0, y = 0;
    for (const auto& v : hn_vectors(b)) {
        x += v.x;
        y += v.y;
        pts.push_back({x, y});
    }
    return Polygon::from_breakpoints(std::move(pts));
}

Bundle bundle_of(const Polygon& p) {
    std::vector<StableSummand> blocks;
    const auto& pts = p.breakpoints();
    for (size_t i = 1; i < pts.size(); ++i) {
        Int dx = pts[i].x - pts[i - 1].x;
        Int dy = pts[i].y - pts[i - 1].y;
        blocks.push_back({Slope(dy, dx), gcd(dx, dy)});
    }
    return Bundle::of(std::move(blocks));
}

Polygon chord_of(const Polygon& p) {
    if (p.end() == Point{0, 0}) return Polygon::from_breakpoints({{0, 0}});
    return Polygon::from_breakpoints({{0, 0}, p.end()});
}

bool polygon_leq(const Polygon& p, const Polygon& q) {
    if (!(p.end() == q.end())) return false;
    for (const auto& pt : p.breakpoints())
        if (Rational(pt.y) > q.height_at(pt.x)) return false;
    for (const auto& pt : q.breakpoints())
        if (p.height_at(pt.x) > Rational(pt.y)) return false;
    return true;
}

Int deg_hom(const Bundle& v, const Bundle& w) {
    return v.rank() * w.degree() - v.degree() * w.rank();
}

Int deg_hom_nonneg(const Bundle& v, const Bundle& w) {
    Int total = 0;
    for (const auto& vi : hn_vectors(v))
        for (const auto& wj : hn_vectors(w))
            if (vec_preceq(vi, wj)) total += vec_cross(vi, wj);
    return total;
}

Int instability(const Bundle& v) {
    if (v.is_zero()) throw std::domain_error("instability of the zero bundle");
    return deg_hom_nonneg(v, v);
}

Int twice_area_between(const Polygon& lower, const Polygon& upper) {
    if (!polygon_leq(lower, upper))
        throw std::invalid_argument("twice_area_between needs lower <= upper");
    // Shoelace sum over the closed loop: upper left-to-right, lower
    // right-to-left back to the origin.
    std::vector<Point> loop(upper.breakpoints());
    const auto& lo = lower.breakpoints();
    for (auto it = lo.rbegin(); it != lo.rend(); ++it) loop.push_back(*it);
    Int s = 0;
    for (size_t i = 0; i + 1 < loop.size(); ++i)
        s += loop[i].x * loop[i + 1].y - loop[i + 1].x * loop[i].y;
    return abs(s);
}

}  // namespace hnpoly
