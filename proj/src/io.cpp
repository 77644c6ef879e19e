#include "multitri/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

using nlohmann::json;

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.a, e.b});
  return out;
}

int int_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_number_integer()) {
    raise(ErrorCode::InvalidInput, std::string("field '") + name + "' must be an integer");
  }
  return j[name].get<int>();
}

const char* kind_name(TileKind k) {
  switch (k) {
    case TileKind::Bump: return "bump";
    case TileKind::Cross: return "cross";
    case TileKind::HalfUp: return "half_up";
    case TileKind::HalfRight: return "half_right";
  }
  return "cross";
}

}  // namespace

json to_json(const PolygonTriangulation& t) {
  return json{{"surface", "polygon"}, {"n", t.surface.n}, {"k", t.surface.k}, {"edges", edge_list(t.edges)}};
}

json to_json(const CylinderTriangulation& t) {
  std::vector<Edge> reps;
  for (const auto& c : t.classes) reps.push_back(c.rep);
  return json{{"surface", "cylinder"}, {"n", t.surface.n}, {"k", t.surface.k}, {"edges", edge_list(reps)}};
}

json to_json(const AnyTriangulation& t) {
  return std::visit([](const auto& x) { return to_json(x); }, t);
}

AnyTriangulation triangulation_from_json(const json& j) {
  if (!j.is_object()) raise(ErrorCode::InvalidInput, "triangulation must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "surface" && key != "n" && key != "k" && key != "edges") {
      raise(ErrorCode::InvalidInput, "unknown field '" + key + "'");
    }
  }
  if (!j.contains("surface") || !j["surface"].is_string()) {
    raise(ErrorCode::InvalidInput, "field 'surface' must be \"polygon\" or \"cylinder\"");
  }
  const std::string kind = j["surface"].get<std::string>();
  const int n = int_field(j, "n");
  const int k = int_field(j, "k");
  if (!j.contains("edges") || !j["edges"].is_array()) raise(ErrorCode::InvalidInput, "field 'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      raise(ErrorCode::InvalidInput, "each edge must be a pair of integers");
    }
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a >= b) raise(ErrorCode::InvalidInput, "edge [" + std::to_string(a) + "," + std::to_string(b) + "] needs a < b");
    edges.emplace_back(a, b);
  }
  if (kind == "polygon") {
    const SurfaceDesc s = SurfaceDesc::polygon(n, k);
    for (const Edge& e : edges) {
      if (e.a < 0 || e.b >= n) raise(ErrorCode::InvalidInput, to_string(e) + " is outside the polygon");
    }
    std::set<Edge> unique(edges.begin(), edges.end());
    if (unique.size() != edges.size()) raise(ErrorCode::InvalidInput, "duplicate edges");
    return PolygonTriangulation{s, {unique.begin(), unique.end()}};
  }
  if (kind == "cylinder") {
    const SurfaceDesc s = SurfaceDesc::cylinder(n, k);
    std::vector<EdgeClass> classes;
    for (const Edge& e : edges) {
      if (e.a < 0 || e.a >= n || e.length() > k * n) {
        raise(ErrorCode::InvalidInput, to_string(e) + " is not a canonical class representative");
      }
      classes.push_back(EdgeClass::of(e, n));
    }
    CylinderTriangulation t = make_cylinder(s, classes);
    if (t.classes.size() != classes.size()) raise(ErrorCode::InvalidInput, "duplicate edges");
    return t;
  }
  raise(ErrorCode::InvalidInput, "unknown surface '" + kind + "'");
}

AnyTriangulation parse_triangulation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  return triangulation_from_json(j);
}

json to_json(const PipeDream& p) {
  json tiles = json::array();
  for (const auto& [cell, kind] : p.tiles) {
    tiles.push_back({{"row", cell.first}, {"col", cell.second}, {"kind", kind_name(kind)}});
  }
  return json{{"shape", p.shape == Shape::Staircase ? "staircase" : "chevron"},
              {"n", p.m},
              {"k", p.k},
              {"tiles", tiles}};
}

json to_json(const FlipGraph& g) {
  json vertices = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    vertices.push_back({{"id", i}, {"degree", g.degrees[i]}, {"triangulation", to_json(g.vertices[i])}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"removed", {e.removed.rep.a, e.removed.rep.b}},
                     {"added", {e.added.rep.a, e.added.rep.b}}});
  }
  const bool regular = g.is_regular(2 * (g.n - 1));
  return json{{"n", g.n},
              {"vertices", vertices},
              {"edges", edges},
              {"regular_degree", regular ? json(2 * (g.n - 1)) : json(nullptr)},
              {"components", g.component_count()}};
}

json to_json(const ComplexReport& r) {
  json hist = json::object();
  for (const auto& [count, mult] : r.ridge_link_histogram) hist[std::to_string(count)] = mult;
  return json{{"n", r.n},
              {"k", r.k},
              {"facet_count", r.facet_count},
              {"facet_dimension", r.facet_dimension},
              {"dimension_convention", "facet cardinality (number of relevant classes)"},
              {"is_pure", r.is_pure},
              {"ridge_count", r.ridge_count},
              {"ridge_link_histogram", hist},
              {"is_weak_pseudomanifold", r.is_weak_pseudomanifold}};
}

std::string render_svg(const PipeDream& p) {
  constexpr int kTile = 24;
  constexpr int kHalf = kTile / 2;
  std::ostringstream os;
  if (p.tiles.empty()) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n";
    return os.str();
  }
  int top = p.tiles.begin()->first.first, bottom = top;
  int left = p.tiles.begin()->first.second, right = left;
  for (const auto& [cell, _] : p.tiles) {
    top = std::max(top, cell.first);
    bottom = std::min(bottom, cell.first);
    left = std::min(left, cell.second);
    right = std::max(right, cell.second);
  }
  const int width = (right - left + 1) * kTile;
  const int height = (top - bottom + 1) * kTile;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& [cell, kind] : p.tiles) {
    const int x = (cell.second - left) * kTile;
    const int y = (top - cell.first) * kTile;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kTile << "\" height=\"" << kTile
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    // Left-to-top strand bends around the NW corner, bottom-to-right around the SE corner.
    auto nw_arc = [&] {
      os << "<path d=\"M " << x << " " << y + kHalf << " A " << kHalf << " " << kHalf << " 0 0 0 " << x + kHalf
         << " " << y << "\"/>\n";
    };
    auto se_arc = [&] {
      os << "<path d=\"M " << x + kHalf << " " << y + kTile << " A " << kHalf << " " << kHalf << " 0 0 1 "
         << x + kTile << " " << y + kHalf << "\"/>\n";
    };
    switch (kind) {
      case TileKind::Bump:
        nw_arc();
        se_arc();
        break;
      case TileKind::HalfUp: nw_arc(); break;
      case TileKind::HalfRight: se_arc(); break;
      case TileKind::Cross:
        os << "<line x1=\"" << x << "\" y1=\"" << y + kHalf << "\" x2=\"" << x + kTile << "\" y2=\"" << y + kHalf
           << "\"/>\n";
        os << "<line x1=\"" << x + kHalf << "\" y1=\"" << y << "\" x2=\"" << x + kHalf << "\" y2=\"" << y + kTile
           << "\"/>\n";
        break;
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace multitri
