#include "hnpoly/strata.hpp"

#include "hnpoly/pathenum.hpp"

#include <sstream>
#include <stdexcept>

namespace hnpoly {

std::vector<Polygon> down_set(const Polygon& ceiling) {
    PathEnumOptions opts;
    opts.below = ceiling;
    return concave_paths_to(ceiling.end(), opts);
}

bool in_closure(const Polygon& p_target, const Polygon& p_stratum) {
    if (!(p_target.end() == p_stratum.end()))
        throw std::invalid_argument("closure comparison needs matching endpoints");
    return polygon_leq(p_stratum, p_target);
}

StrataPoset make_poset(const Polygon& ceiling) { return {ceiling, down_set(ceiling)}; }

std::vector<std::pair<size_t, size_t>> hasse_diagram(const StrataPoset& poset) {
    const auto& nodes = poset.nodes;
    const size_t n = nodes.size();
    // Full order, then transitive reduction: an edge i -> j survives when no
    // intermediate k sits strictly between.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) leq[i][j] = polygon_leq(nodes[i], nodes[j]);
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool covering = true;
            for (size_t k = 0; k < n && covering; ++k)
                if (k != i && k != j && leq[i][k] && leq[k][j]) covering = false;
            if (covering) edges.emplace_back(i, j);
        }
    }
    return edges;
}

std::string format_polygon(const Polygon& p) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& pt : p.breakpoints()) {
        if (!first) os << ",";
        first = false;
        os << "(" << pt.x.get_str() << "," << pt.y.get_str() << ")";
    }
    os << "]";
    return os.str();
}

std::string to_dot(const StrataPoset& poset) {
    std::ostringstream os;
    os << "digraph strata {\n";
    os << "  rankdir=BT;\n";
    for (const auto& node : poset.nodes) os << "  \"" << format_polygon(node) << "\";\n";
    for (const auto& [lo, hi] : hasse_diagram(poset))
        os << "  \"" << format_polygon(poset.nodes[lo]) << "\" -> \""
           << format_polygon(poset.nodes[hi]) << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace hnpoly
