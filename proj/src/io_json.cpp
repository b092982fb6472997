#include "hnpoly/io_json.hpp"

#include <stdexcept>

namespace hnpoly {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return int_from_string(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

json bundle_to_json(const Bundle& b) {
    json arr = json::array();
    for (const auto& s : b.summands())
        arr.push_back({int_to_json(s.slope.num()), int_to_json(s.slope.den()),
                       int_to_json(s.multiplicity)});
    return arr;
}

Bundle bundle_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("bundle JSON must be [[d,h,m],...]");
    std::vector<RawSummand> raw;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 3)
            throw std::invalid_argument("bundle JSON entries must be [d,h,m] triples");
        raw.push_back({int_from_json(item[0]), int_from_json(item[1]), int_from_json(item[2])});
    }
    return make_bundle(raw);
}

json polygon_to_json(const Polygon& p) {
    json arr = json::array();
    for (const auto& pt : p.breakpoints()) arr.push_back({int_to_json(pt.x), int_to_json(pt.y)});
    return arr;
}

Polygon polygon_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("polygon JSON must be a nonempty [[x,y],...]");
    std::vector<Point> pts;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw std::invalid_argument("polygon JSON entries must be [x,y] pairs");
        pts.push_back({int_from_json(item[0]), int_from_json(item[1])});
    }
    return Polygon::from_breakpoints(std::move(pts));
}

json report_to_json(const SweepReport& r) {
    auto records = [](const std::vector<SweepRecord>& rs) {
        json arr = json::array();
        for (const auto& rec : rs)
            arr.push_back({{"instance", rec.instance},
                           {"check", rec.note},
                           {"lhs", rec.lhs},
                           {"rhs", rec.rhs}});
        return arr;
    };
    return {{"instances_checked", r.instances_checked},
            {"passed", r.passed()},
            {"violations", records(r.violations)},
            {"equality_cases", records(r.equality_cases)}};
}

json stratum_to_json(const StratumDim& d, const std::string& formula) {
    return {{"formula", formula},
            {"value", int_to_json(d.value)},
            {"nonempty", to_string(d.nonempty_known)}};
}

}  // namespace hnpoly
