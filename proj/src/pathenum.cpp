#include "hnpoly/pathenum.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace hnpoly {

namespace {

struct Dfs {
    const Point& end;
    const PathEnumOptions& opts;
    std::vector<Point> prefix;
    std::vector<Polygon> out;

    // Largest y' allowed for a breakpoint at abscissa x', ignoring slope
    // constraints. Returns false if unbounded.
    bool upper_bound_at(const Int& x, Int& hi) const {
        bool bounded = false;
        if (opts.below) {
            Int h = opts.below->height_at(x).floor();
            hi = h;
            bounded = true;
        }
        if (opts.y_abs_cap) {
            if (!bounded || *opts.y_abs_cap < hi) hi = *opts.y_abs_cap;
            bounded = true;
        }
        return bounded;
    }

    void extend(const Point& cur, const std::optional<Slope>& last_slope) {
        if (cur == end) {
            out.push_back(Polygon::from_breakpoints(prefix));
            return;
        }
        for (Int nx = cur.x + 1; nx <= end.x; ++nx) {
            Int dx = nx - cur.x;
            // Slope ceiling for this edge: strictly below the previous edge,
            // or the non-strict first-edge cap.
            bool have_hi = false;
            Int hi = 0;
            if (last_slope) {
                Rational lim = Rational(dx) * *last_slope + Rational(cur.y);
                hi = lim.is_integer() ? lim.floor() - 1 : lim.floor();
                have_hi = true;
            } else if (opts.max_first_slope) {
                hi = (Rational(dx) * *opts.max_first_slope + Rational(cur.y)).floor();
                have_hi = true;
            }
            Int cap;
            if (upper_bound_at(nx, cap)) {
                if (!have_hi || cap < hi) hi = cap;
                have_hi = true;
            }
            if (!have_hi) throw std::invalid_argument("unbounded path enumeration");

            if (nx == end.x) {
                if (end.y <= hi) {
                    prefix.push_back(end);
                    extend(end, std::nullopt);  // terminal; slope unused
                    prefix.pop_back();
                }
                continue;
            }
            for (Int ny = hi;; --ny) {
                // All later edges are strictly flatter than this one, so the
                // remaining chord slope must be strictly smaller; once that
                // fails it fails for every lower ny.
                if ((end.y - ny) * dx >= (ny - cur.y) * (end.x - nx)) break;
                if (opts.y_abs_cap && ny < -*opts.y_abs_cap) break;
                prefix.push_back({nx, ny});
                extend({nx, ny}, Rational(ny - cur.y, dx));
                prefix.pop_back();
            }
        }
    }
};

bool profile_less(const Polygon& a, const Polygon& b) {
    // Same endpoints by construction; compare heights left to right.
    for (Int x = 1; x < a.width(); ++x) {
        Rational ha = a.height_at(x), hb = b.height_at(x);
        if (ha != hb) return ha < hb;
    }
    return false;
}

}  // namespace

std::vector<Polygon> concave_paths_to(const Point& end, const PathEnumOptions& opts) {
    if (end.x < 0) throw std::invalid_argument("path endpoint needs x >= 0");
    if (end.x > enum_width_cap())
        throw std::domain_error("enumeration width exceeds HNPOLY_MAX_RANK cap");
    if (opts.below && !(opts.below->end() == end))
        throw std::invalid_argument("ceiling endpoint mismatch");
    if (end.x == 0) {
        if (end.y != 0) throw std::invalid_argument("zero-width path must end at the origin");
        return {Polygon::from_breakpoints({{0, 0}})};
    }
    Dfs dfs{end, opts, {{0, 0}}, {}};
    dfs.extend({0, 0}, std::nullopt);
    std::sort(dfs.out.begin(), dfs.out.end(), profile_less);
    return std::move(dfs.out);
}

long enum_width_cap() {
    const char* env = std::getenv("HNPOLY_MAX_RANK");
    if (env == nullptr) return 64;
    char* rest = nullptr;
    long v = std::strtol(env, &rest, 10);
    if (rest == env || *rest != '\0' || v <= 0) return 64;
    return v;
}

}  // namespace hnpoly
