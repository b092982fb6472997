#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnpoly/polygon.hpp"
#include "hnpoly/verify.hpp"

#include <random>

using namespace hnpoly;

namespace {

Bundle stable(long num, long den, long mult = 1) {
    return Bundle::stable(Slope(num, den), Int(mult));
}

Polygon poly(std::vector<std::pair<long, long>> pts) {
    std::vector<Point> ps;
    for (auto& [x, y] : pts) ps.push_back({Int(x), Int(y)});
    return Polygon::from_breakpoints(std::move(ps));
}

// Independent area oracle: fan of triangles hinged at the right endpoint,
// each doubled via a cross product.
Int twice_area_over_chord(const Polygon& p) {
    const auto& pts = p.breakpoints();
    Int total = 0;
    for (size_t j = 1; j + 1 < pts.size(); ++j) {
        Int ax = pts.back().x - pts[j - 1].x;
        Int ay = pts.back().y - pts[j - 1].y;
        Int bx = pts[j].x - pts[j - 1].x;
        Int by = pts[j].y - pts[j - 1].y;
        total += ax * by - ay * bx;
    }
    return total;
}

}  // namespace

TEST_CASE("hn_vectors") {
    Bundle b = make_bundle({{1, 3, 1}, {6, 5, 1}});
    auto vs = hn_vectors(b);
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == HNVector{5, 6});
    CHECK(vs[1] == HNVector{3, 1});

    auto single = hn_vectors(stable(9, 4));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == HNVector{4, 9});

    CHECK(hn_vectors(Bundle{}).empty());

    Int sum_x = 0, sum_y = 0;
    for (const auto& v : hn_vectors(b)) {
        sum_x += v.x;
        sum_y += v.y;
    }
    CHECK(sum_x == b.rank());
    CHECK(sum_y == b.degree());
}

TEST_CASE("polygon_of and bundle_of") {
    Bundle b = make_bundle({{1, 3, 1}, {6, 5, 1}});
    CHECK(polygon_of(b) == poly({{0, 0}, {5, 6}, {8, 7}}));

    Bundle challenge = bundle_of(poly({{0, 0}, {4, 9}, {8, 7}}));
    CHECK(challenge == direct_sum(stable(9, 4), stable(-1, 2, 2)));

    CHECK(bundle_of(poly({{0, 0}, {2, 1}})) == stable(1, 2));

    CHECK(polygon_of(Bundle{}) == poly({{0, 0}}));
    CHECK(bundle_of(poly({{0, 0}})).is_zero());

    // invalid polygons are rejected
    CHECK_THROWS_AS(Polygon::from_breakpoints({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Polygon::from_breakpoints({{0, 0}, {2, 1}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Polygon::from_breakpoints({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Polygon::from_breakpoints({{0, 0}, {1, 0}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("polygon_of and bundle_of are mutually inverse over the full sweep") {
    // all bundles of rank <= 8 with |slope num|, den <= 5
    std::vector<Bundle> pool = all_bundles(8, 5, 5);
    for (const Bundle& b : pool) CHECK(bundle_of(polygon_of(b)) == b);
}

TEST_CASE("vec_cross and vec_preceq") {
    CHECK(vec_cross({1, 0}, {1, 1}) == 1);
    CHECK(vec_cross({3, 1}, {5, 6}) == 13);
    HNVector v{4, -7};
    CHECK(vec_cross(v, v) == 0);

    CHECK(vec_preceq({1, 0}, {1, 1}));
    CHECK_FALSE(vec_preceq({1, 1}, {2, 1}));

    // opposite-sign x components: order flips against the cross product sign
    CHECK(vec_prec({-1, 1}, {1, 1}));
    CHECK(vec_cross({-1, 1}, {1, 1}) == -2);

    CHECK_THROWS_AS(vec_preceq({0, 1}, {1, 1}), std::domain_error);
}

TEST_CASE("sign rule: for positive x, preceq iff cross >= 0") {
    for (long vx = 1; vx <= 10; ++vx)
        for (long vy = -10; vy <= 10; ++vy)
            for (long wx = 1; wx <= 10; ++wx)
                for (long wy = -10; wy <= 10; ++wy) {
                    HNVector v{vx, vy}, w{wx, wy};
                    CHECK(vec_preceq(v, w) == (vec_cross(v, w) >= 0));
                    CHECK(vec_prec(v, w) == (vec_cross(v, w) > 0));
                }
}

TEST_CASE("sign rule flips for opposite-sign x components") {
    for (long vx = -6; vx <= 6; ++vx)
        for (long vy = -6; vy <= 6; ++vy)
            for (long wx = -6; wx <= 6; ++wx)
                for (long wy = -6; wy <= 6; ++wy) {
                    if (vx == 0 || wx == 0 || (vx > 0) == (wx > 0)) continue;
                    HNVector v{vx, vy}, w{wx, wy};
                    CHECK(vec_preceq(v, w) == (vec_cross(v, w) <= 0));
                }
}

TEST_CASE("polygon_leq") {
    Polygon lower = polygon_of(make_bundle({{1, 3, 1}, {6, 5, 1}}));
    Polygon upper = polygon_of(make_bundle({{-1, 2, 2}, {9, 4, 1}}));
    CHECK(polygon_leq(lower, upper));
    CHECK_FALSE(polygon_leq(upper, lower));
    CHECK(polygon_leq(lower, lower));

    CHECK_FALSE(polygon_leq(poly({{0, 0}, {2, 1}}), poly({{0, 0}, {2, 2}})));
}

TEST_CASE("polygon_leq is a partial order on fixed endpoints") {
    Polygon ceiling = poly({{0, 0}, {2, 4}, {5, 5}, {6, 4}});
    std::vector<Polygon> nodes = down_set(ceiling);
    std::mt19937 rng(17);
    std::uniform_int_distribution<size_t> pick(0, nodes.size() - 1);
    for (int i = 0; i < 300; ++i) {
        const Polygon& a = nodes[pick(rng)];
        const Polygon& b = nodes[pick(rng)];
        const Polygon& c = nodes[pick(rng)];
        CHECK(polygon_leq(a, a));
        if (polygon_leq(a, b) && polygon_leq(b, a)) CHECK(a == b);
        if (polygon_leq(a, b) && polygon_leq(b, c)) CHECK(polygon_leq(a, c));
    }
}

TEST_CASE("deg_hom") {
    CHECK(deg_hom(stable(-1, 2, 2), stable(9, 4)) == 44);
    Bundle e = make_bundle({{1, 3, 1}, {6, 5, 1}});
    CHECK(deg_hom(e, e) == 0);
    CHECK(deg_hom(stable(0, 1), stable(1, 1)) == 1);

    // agreement with the bundle-algebra route
    for (const Bundle& v : all_bundles(4, 2, 2))
        for (const Bundle& w : all_bundles(3, 2, 2))
            CHECK(deg_hom(v, w) == hom_bundle(v, w).degree());
}

TEST_CASE("deg_hom_nonneg") {
    CHECK(deg_hom_nonneg(stable(0, 1), stable(1, 1)) == 1);
    CHECK(deg_hom_nonneg(stable(1, 1), stable(0, 1)) == 0);
    Bundle e = make_bundle({{1, 3, 1}, {6, 5, 1}});
    CHECK(deg_hom_nonneg(e, e) == 13);
}

TEST_CASE("deg_hom_nonneg equals the degree of the nonnegative part of hom") {
    for (const Bundle& v : all_bundles(4, 2, 2))
        for (const Bundle& w : all_bundles(3, 2, 2)) {
            Bundle h = hom_bundle(v, w);
            CHECK(deg_hom_nonneg(v, w) == truncate(h, Slope(0), SlopeCmp::ge).degree());
            // the split into nonnegative and negative parts is exhaustive
            CHECK(deg_hom_nonneg(v, w) + truncate(h, Slope(0), SlopeCmp::lt).degree() ==
                  deg_hom(v, w));
        }
}

TEST_CASE("instability") {
    CHECK(instability(stable(3, 2, 2)) == 0);
    CHECK(instability(make_bundle({{1, 1, 1}, {0, 1, 1}})) == 1);
    CHECK(instability(make_bundle({{1, 3, 1}, {6, 5, 1}})) == 13);
    CHECK_THROWS_AS(instability(Bundle{}), std::domain_error);
}

TEST_CASE("instability equals the fan-oracle area and detects semistability") {
    for (const Bundle& v : all_bundles(6, 3, 3)) {
        Int inst = instability(v);
        CHECK(inst == twice_area_over_chord(polygon_of(v)));
        CHECK((inst == 0) == v.is_semistable());
    }
}

TEST_CASE("monotonicity of instability along polygon_leq") {
    std::vector<Bundle> pool = all_bundles(5, 3, 3);
    for (const Bundle& v : pool)
        for (const Bundle& w : pool)
            if (polygon_leq(polygon_of(v), polygon_of(w)))
                CHECK(instability(v) <= instability(w));
}

TEST_CASE("twice_area_between") {
    Polygon lower = polygon_of(make_bundle({{1, 3, 1}, {6, 5, 1}}));
    Polygon upper = polygon_of(make_bundle({{-1, 2, 2}, {9, 4, 1}}));
    CHECK(twice_area_between(lower, lower) == 0);
    CHECK(twice_area_between(lower, upper) == 31);
    CHECK_THROWS_AS(twice_area_between(upper, lower), std::invalid_argument);

    // against the chord this is exactly the instability
    for (const Bundle& v : all_bundles(5, 3, 3)) {
        Polygon p = polygon_of(v);
        CHECK(twice_area_between(chord_of(p), p) == instability(v));
    }
}

TEST_CASE("twice_area_between is additive across an intermediate polygon") {
    Polygon ceiling = poly({{0, 0}, {2, 4}, {5, 5}, {6, 4}});
    std::vector<Polygon> nodes = down_set(ceiling);
    std::mt19937 rng(23);
    std::uniform_int_distribution<size_t> pick(0, nodes.size() - 1);
    int found = 0;
    for (int i = 0; i < 800 && found < 200; ++i) {
        const Polygon& a = nodes[pick(rng)];
        const Polygon& b = nodes[pick(rng)];
        const Polygon& c = nodes[pick(rng)];
        if (polygon_leq(a, b) && polygon_leq(b, c)) {
            ++found;
            CHECK(twice_area_between(a, b) + twice_area_between(b, c) ==
                  twice_area_between(a, c));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("height_at") {
    Polygon p = poly({{0, 0}, {4, 9}, {8, 7}});
    CHECK(p.height_at(0) == Rational(0));
    CHECK(p.height_at(2) == Rational(9, 2));
    CHECK(p.height_at(4) == Rational(9));
    CHECK(p.height_at(6) == Rational(8));
    CHECK(p.height_at(8) == Rational(7));
    CHECK_THROWS_AS(p.height_at(9), std::domain_error);
}
