#include "hnpoly/extensions.hpp"

#include "hnpoly/pathenum.hpp"

#include <algorithm>
#include <stdexcept>

namespace hnpoly {

namespace {

void require_semistable_piece(const Bundle& f, const char* name) {
    if (f.is_zero() || !f.is_semistable())
        throw std::invalid_argument(std::string(name) + " must be a nonzero semistable bundle");
}

Bundle sum_of(std::span<const Bundle> graded) {
    Bundle total;
    for (const auto& f : graded) total = direct_sum(total, f);
    return total;
}

/// Upper concave hull, from the origin, of the endpoint of `top` placed as an
/// initial segment together with the breakpoints of `base`.
Polygon hull_with_top_segment(const Point& top, const Polygon& base) {
    std::vector<Point> pts(base.breakpoints());
    pts.push_back(top);
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y > b.y;
    });
    std::vector<Point> hull;
    for (const auto& p : pts) {
        if (!hull.empty() && hull.back().x == p.x) continue;  // keep the higher point
        while (hull.size() >= 2) {
            const Point& a = hull[hull.size() - 2];
            const Point& b = hull.back();
            HNVector e1{b.x - a.x, b.y - a.y};
            HNVector e2{p.x - b.x, p.y - b.y};
            if (vec_cross(e1, e2) >= 0)
                hull.pop_back();  // non-concave or collinear turn
            else
                break;
        }
        hull.push_back(p);
    }
    return Polygon::from_breakpoints(std::move(hull));
}

/// Remove one O(slope)^mult block from b; b must contain it.
Bundle remove_block(const Bundle& b, const Slope& slope, const Int& mult) {
    std::vector<StableSummand> blocks;
    bool found = false;
    for (const auto& s : b.summands()) {
        if (s.slope == slope) {
            if (s.multiplicity < mult)
                throw std::logic_error("filtration step lost its top block");
            found = true;
            if (s.multiplicity > mult) blocks.push_back({s.slope, s.multiplicity - mult});
        } else {
            blocks.push_back(s);
        }
    }
    if (!found) throw std::logic_error("filtration step lost its top block");
    return Bundle::of(std::move(blocks));
}

}  // namespace

bool exists_extension(const Bundle& f1, const Bundle& f2, const Bundle& e) {
    require_semistable_piece(f1, "f1");
    require_semistable_piece(f2, "f2");
    if (f1.mu() >= f2.mu())
        throw std::invalid_argument("extension criterion requires mu(f1) < mu(f2)");
    return polygon_leq(polygon_of(e), polygon_of(direct_sum(f1, f2)));
}

bool necessary_condition(const Bundle& e, std::span<const Bundle> graded) {
    for (const auto& f : graded) require_semistable_piece(f, "graded piece");
    return polygon_leq(polygon_of(e), polygon_of(sum_of(graded)));
}

bool exists_filtration(const Bundle& e, std::span<const Bundle> graded) {
    for (size_t i = 0; i < graded.size(); ++i) {
        require_semistable_piece(graded[i], "graded piece");
        if (i > 0 && graded[i - 1].mu() >= graded[i].mu())
            throw std::invalid_argument("graded slopes must strictly increase");
    }
    return polygon_leq(polygon_of(e), polygon_of(sum_of(graded)));
}

FiltrationWitness build_filtration_witness(const Bundle& e, std::span<const Bundle> graded) {
    if (!exists_filtration(e, graded))
        throw std::invalid_argument("no filtration with these graded pieces exists");

    FiltrationWitness w;
    w.graded.assign(graded.begin(), graded.end());
    w.chain.assign(graded.size() + 1, Bundle{});
    w.chain.back() = e;

    Bundle cur = e;
    for (size_t i = graded.size(); i-- > 1;) {
        const Bundle& top = w.graded[i];
        Point top_end{top.rank(), top.degree()};
        Polygon hull = hull_with_top_segment(top_end, polygon_of(cur));
        // hull is the polygon of top (+) next, with the top block leading.
        Bundle next = remove_block(bundle_of(hull), top.mu(), top.summands().front().multiplicity);
        w.chain[i] = next;
        cur = next;
    }
    // The bottom step is forced: a chain member below a single semistable
    // polygon with equal endpoints coincides with it.
    if (!w.graded.empty() && !(w.chain[1] == w.graded[0]))
        throw std::logic_error("filtration recursion did not terminate at the bottom piece");
    return w;
}

std::vector<Bundle> enumerate_extensions(const Bundle& f1, const Bundle& f2) {
    require_semistable_piece(f1, "f1");
    require_semistable_piece(f2, "f2");
    if (f1.mu() >= f2.mu())
        throw std::invalid_argument("extension criterion requires mu(f1) < mu(f2)");
    Polygon upper = polygon_of(direct_sum(f1, f2));
    PathEnumOptions opts;
    opts.below = upper;
    std::vector<Polygon> paths = concave_paths_to(upper.end(), opts);
    std::vector<Bundle> out;
    out.reserve(paths.size());
    // concave_paths_to sorts ascending; extensions are reported highest
    // profile first.
    for (auto it = paths.rbegin(); it != paths.rend(); ++it) out.push_back(bundle_of(*it));
    return out;
}

std::pair<Bundle, Bundle> split_common_top(const Bundle& e, const Bundle& f2) {
    require_semistable_piece(f2, "f2");
    if (e.is_zero() || e.mu_max() < f2.mu()) return {e, f2};
    if (e.mu_max() > f2.mu())
        throw std::invalid_argument("mu_max(e) must not exceed mu(f2)");
    Int n = e.summands().front().multiplicity;
    Int m = f2.summands().front().multiplicity;
    if (n > m)
        throw std::invalid_argument("top block of e exceeds the multiplicity of f2");
    Bundle e_rest = remove_block(e, e.mu_max(), n);
    Bundle f_rest = n == m ? Bundle{} : Bundle::stable(f2.mu(), m - n);
    return {e_rest, f_rest};
}

}  // namespace hnpoly
