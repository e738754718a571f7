#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hcube/diagnostics.hpp"
#include "hcube/homogeneity.hpp"

namespace hcube::cli {

using json = nlohmann::ordered_json;

/// Parses a point spec such as {"prefix": ["1", "-1/2"], "tail": "1"}.
/// Rationals must be strings; decimals are rejected. Malformed input raises
/// ParseError carrying the byte offset or field path, out-of-range
/// coordinates raise OutOfRange.
PointRep parse_point_spec(std::string_view text);

PointRep point_from_json(const json& j, const std::string& where = "point");
json point_to_json(const PointRep& p);

Rational rational_from_json(const json& j, const std::string& where);

json profile_to_json(const BoundaryProfile& profile);
BoundaryProfile profile_from_json(const json& j);

json schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const json& j);

json plan_to_json(const HomeoPlan& plan);
/// Accepts a bare plan or the {"plan": ...} object emitted by `solve`.
HomeoPlan plan_from_json(const json& j);

json certified_to_json(const CertifiedPoint& c);
json report_to_json(const ErrataReport& report);

/// Parses JSON text, converting parser failures into ParseError.
json parse_json(std::string_view text, const std::string& what);

}  // namespace hcube::cli
