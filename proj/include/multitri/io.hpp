#pragma once

// JSON and SVG formats.  Triangulation JSON:
//   {"surface":"polygon"|"cylinder","n":int,"k":int,"edges":[[a,b],...]}
// with cylinder edges given as canonical class representatives.

#include <string>
#include <variant>

#include "json.hpp"
#include "multitri/complex.hpp"
#include "multitri/cylinder.hpp"
#include "multitri/flip.hpp"
#include "multitri/pipedream.hpp"
#include "multitri/polygon.hpp"

namespace multitri {

using AnyTriangulation = std::variant<PolygonTriangulation, CylinderTriangulation>;

nlohmann::json to_json(const PolygonTriangulation& t);
nlohmann::json to_json(const CylinderTriangulation& t);
nlohmann::json to_json(const AnyTriangulation& t);

/// Strict schema check; raises InvalidInput on any deviation, including
/// unknown fields.
AnyTriangulation triangulation_from_json(const nlohmann::json& j);
AnyTriangulation parse_triangulation(const std::string& text);

nlohmann::json to_json(const PipeDream& p);
nlohmann::json to_json(const FlipGraph& g);
nlohmann::json to_json(const ComplexReport& r);

/// 24-unit tiles; bumps as two quarter circles, crosses as two segments.
std::string render_svg(const PipeDream& p);

}  // namespace multitri
