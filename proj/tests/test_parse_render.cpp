#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hnpoly/io_json.hpp"
#include "hnpoly/parse.hpp"
#include "hnpoly/render.hpp"
#include "hnpoly/verify.hpp"

#include <random>

using namespace hnpoly;

TEST_CASE("parse_bundle grammar") {
    CHECK(parse_bundle("O(9/4)") == Bundle::stable(Slope(9, 4)));
    CHECK(parse_bundle("O(-1/2)^2 + O(9/4)") ==
          make_bundle({{-1, 2, 2}, {9, 4, 1}}));
    CHECK(parse_bundle("  O( -1 / 2 ) ^ 2+O(9/4)") ==
          make_bundle({{-1, 2, 2}, {9, 4, 1}}));
    CHECK(parse_bundle("O") == Bundle::stable(Slope(0)));
    CHECK(parse_bundle("O(3)") == Bundle::stable(Slope(3)));
    CHECK(parse_bundle("O(2/4)") == Bundle::stable(Slope(1, 2)));  // improper input reduces
    CHECK(parse_bundle("O(1)+O(1)") == Bundle::stable(Slope(1), 2));
    CHECK(parse_bundle("0") == Bundle{});
    CHECK(parse_bundle("O(100000000000000000000000000001/7)").rank() == 7);
}

TEST_CASE("parse errors carry positions") {
    auto pos_of = [](const std::string& text) {
        try {
            parse_bundle(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(pos_of("") == 0);
    CHECK(pos_of("Q(1)") == 0);
    CHECK(pos_of("O(1/0)") == 4);
    CHECK(pos_of("O(1)^0") == 5);
    CHECK(pos_of("O(1) + ") == 7);
    CHECK(pos_of("O(1) junk") == 5);
    CHECK(pos_of("O(1/-2)") == 4);
}

TEST_CASE("format_bundle canonical order") {
    CHECK(format_bundle(make_bundle({{-1, 2, 2}, {9, 4, 1}})) == "O(9/4) + O(-1/2)^2");
    CHECK(format_bundle(Bundle{}) == "0");
    CHECK(format_bundle(Bundle::stable(Slope(5))) == "O(5)");
}

TEST_CASE("parse round-trips the formatter") {
    for (const Bundle& b : all_bundles(5, 3, 3)) CHECK(parse_bundle(format_bundle(b)) == b);
    CHECK(parse_bundle(format_bundle(Bundle{})) == Bundle{});
}

TEST_CASE("bundle JSON round-trip") {
    for (const Bundle& b : all_bundles(4, 2, 2)) {
        CHECK(bundle_from_json(bundle_to_json(b)) == b);
    }
    // big values serialize as strings
    Bundle big = make_bundle({{int_from_string("123456789012345678901234567890"), Int(1), Int(1)}});
    nlohmann::json j = bundle_to_json(big);
    CHECK(j[0][0].is_string());
    CHECK(bundle_from_json(j) == big);
    CHECK_THROWS(bundle_from_json(nlohmann::json::parse("[[1,2]]")));
}

TEST_CASE("polygon JSON round-trip") {
    for (const Bundle& b : all_bundles(4, 2, 2)) {
        Polygon p = polygon_of(b);
        CHECK(polygon_from_json(polygon_to_json(p)) == p);
    }
    CHECK_THROWS(polygon_from_json(nlohmann::json::parse("[[1,1],[0,0]]")));
}

TEST_CASE("render output is deterministic and styled") {
    Polygon lower = polygon_of(make_bundle({{1, 3, 1}, {6, 5, 1}}));
    Polygon upper = polygon_of(make_bundle({{-1, 2, 2}, {9, 4, 1}}));

    std::string svg = render_svg(lower, upper);
    CHECK(svg == render_svg(lower, upper));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);  // dashed lower
    CHECK(svg.find("<polygon fill=") != std::string::npos);    // shaded region

    std::string tikz = render_tikz(lower, upper);
    CHECK(tikz == render_tikz(lower, upper));
    CHECK(tikz.find("\\draw[dashed] (0,0) -- (5,6) -- (8,7);") != std::string::npos);
    CHECK(tikz.find("\\draw[thick] (0,0) -- (4,9) -- (8,7);") != std::string::npos);
    CHECK(tikz.find("\\fill[blue!15]") != std::string::npos);

    CHECK_THROWS_AS(render_svg(upper, lower), std::invalid_argument);
    CHECK_THROWS_AS(render_tikz(upper, lower), std::invalid_argument);

    // comparable degenerate case: a polygon against itself
    CHECK(render_svg(upper, upper) == render_svg(upper, upper));
}
