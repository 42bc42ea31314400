#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "flatcert/flatness.hpp"
#include "flatcert/maximality.hpp"

namespace flatcert {

using json = nlohmann::json;

// {"name": optional, "vertices": [["p/q","r/s"], ...]} kept as written.
struct PolygonDocument {
  std::optional<std::string> name;
  std::vector<Point> vertices;
  friend bool operator==(const PolygonDocument&, const PolygonDocument&) = default;
};

// All parsers throw std::invalid_argument on malformed input.
PolygonDocument parse_polygon_document(const json& j);
json to_json(const PolygonDocument& d);
Polygon to_polygon(const PolygonDocument& d);

Rational rational_from_json(const json& j);
json to_json(const Rational& q);
Point point_from_json(const json& j);
json to_json(const Point& p);
Polygon polygon_from_json(const json& j);  // bare vertex array
json to_json(const Polygon& p);
json to_json(const DualVector& u);
DualVector dual_from_json(const json& j);

json to_json(const FreenessVerdict& v);
json to_json(const MaximalityReport& r);
MaximalityReport maximality_report_from_json(const json& j);

json to_json(const ParamPoint& p);
ParamPoint param_point_from_json(const json& j);
json to_json(const RatioCertificate& c);
RatioCertificate certificate_from_json(const json& j);

json to_json(const CaseSpec& s);
CaseSpec case_spec_from_json(const json& j);

// Re-checks the witnesses stored in a report produced by the CLI against
// the polygon, without searching again.
bool verify_freeness(const Polygon& p, const json& verdict);
bool verify_maximality(const Polygon& p, const json& report);

std::string digest(const std::string& bytes);

}  // namespace flatcert
