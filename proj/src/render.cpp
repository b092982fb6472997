#include "hnpoly/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hnpoly {

namespace {

void require_comparable(const Polygon& lower, const Polygon& upper) {
    if (!polygon_leq(lower, upper))
        throw std::invalid_argument("render needs lower <= upper with equal endpoints");
}

Int y_min_of(const Polygon& p) {
    Int m = 0;
    for (const auto& pt : p.breakpoints()) m = std::min(m, pt.y);
    return m;
}

Int y_max_of(const Polygon& p) {
    Int m = 0;
    for (const auto& pt : p.breakpoints()) m = std::max(m, pt.y);
    return m;
}

}  // namespace

std::string render_svg(const Polygon& lower, const Polygon& upper) {
    require_comparable(lower, upper);
    const long unit = 40, margin = 24, dot = 3;
    Int ymin = std::min(y_min_of(lower), y_min_of(upper));
    Int ymax = std::max(y_max_of(lower), y_max_of(upper));
    Int w = upper.width() * unit + 2 * margin;
    Int h = (ymax - ymin) * unit + 2 * margin;

    auto px = [&](const Int& x) { return Int(x * unit + margin).get_str(); };
    auto py = [&](const Int& y) { return Int((ymax - y) * unit + margin).get_str(); };
    auto points_of = [&](const Polygon& p, bool reversed, size_t skip = 0) {
        std::ostringstream os;
        const auto& pts = p.breakpoints();
        for (size_t i = skip; i < pts.size(); ++i) {
            const Point& pt = pts[reversed ? pts.size() - 1 - i : i];
            if (i > skip) os << " ";
            os << px(pt.x) << "," << py(pt.y);
        }
        return os.str();
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.get_str() << "\" height=\""
       << h.get_str() << "\" viewBox=\"0 0 " << w.get_str() << " " << h.get_str() << "\">\n";
    os << "  <polygon fill=\"#cfe0f2\" stroke=\"none\" points=\"" << points_of(upper, false)
       << " " << points_of(lower, true, 1) << "\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\""
       << points_of(upper, false) << "\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
          "stroke-dasharray=\"7 5\" points=\""
       << points_of(lower, false) << "\"/>\n";
    for (const auto& pt : upper.breakpoints())
        os << "  <circle cx=\"" << px(pt.x) << "\" cy=\"" << py(pt.y) << "\" r=\"" << dot
           << "\" fill=\"black\"/>\n";
    for (const auto& pt : lower.breakpoints())
        os << "  <circle cx=\"" << px(pt.x) << "\" cy=\"" << py(pt.y) << "\" r=\"" << dot - 1
           << "\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_tikz(const Polygon& lower, const Polygon& upper) {
    require_comparable(lower, upper);
    auto coords = [](const Polygon& p, bool reversed, size_t skip = 0) {
        std::ostringstream os;
        const auto& pts = p.breakpoints();
        for (size_t i = skip; i < pts.size(); ++i) {
            const Point& pt = pts[reversed ? pts.size() - 1 - i : i];
            if (i > skip) os << " -- ";
            os << "(" << pt.x.get_str() << "," << pt.y.get_str() << ")";
        }
        return os.str();
    };

    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.75]\n";
    os << "  \\fill[blue!15] " << coords(upper, false) << " -- " << coords(lower, true, 1)
       << " -- cycle;\n";
    os << "  \\draw[thick] " << coords(upper, false) << ";\n";
    os << "  \\draw[dashed] " << coords(lower, false) << ";\n";
    for (const auto& pt : upper.breakpoints())
        os << "  \\fill (" << pt.x.get_str() << "," << pt.y.get_str()
           << ") circle [radius=0.06];\n";
    for (const auto& pt : lower.breakpoints())
        os << "  \\fill (" << pt.x.get_str() << "," << pt.y.get_str()
           << ") circle [radius=0.04];\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace hnpoly
