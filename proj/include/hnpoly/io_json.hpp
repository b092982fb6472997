#pragma once

#include "hnpoly/moduli.hpp"
#include "hnpoly/verify.hpp"

#include <json.hpp>

namespace hnpoly {

/// JSON number when the value fits a 64-bit signed integer, decimal string
/// otherwise. All emitters below follow this rule.
nlohmann::json int_to_json(const Int& v);

/// Accepts a JSON integer or a decimal string.
Int int_from_json(const nlohmann::json& j);

/// Bundle as [[d,h,m],...] in canonical order.
nlohmann::json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const nlohmann::json& j);

/// Polygon as [[x,y],...].
nlohmann::json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SweepReport& r);

nlohmann::json stratum_to_json(const StratumDim& d, const std::string& formula);

}  // namespace hnpoly
