#include "multitri/flip.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "multitri/bijection.hpp"
#include "multitri/errors.hpp"
#include "multitri/pipedream.hpp"

namespace multitri {

namespace {

Edge polygon_representative(const EdgeClass& e, int m) { return Edge(e.rep.a % m, e.rep.b % m); }

EdgeClass flip_partner(const CylinderTriangulation& t, const EdgeClass& e, FlipBackend backend) {
  const int n = t.surface.n;
  const PeriodicPolygonTriangulation image = phi(t);
  const int m = image.inner.surface.n;
  const Edge rep = polygon_representative(e, m);

  auto by_polygon = [&] { return class_of_polygon_edge(polygon_flip(image.inner, rep).second, 2, n); };
  auto by_pipes = [&] {
    const PipeDream chevron = chevron_from_staircase(staircase_from_triangulation(image.inner));
    return class_of_polygon_edge(pipe_crossing_partner(chevron, rep), 2, n);
  };
  switch (backend) {
    case FlipBackend::Polygon: return by_polygon();
    case FlipBackend::PipeDream: return by_pipes();
    case FlipBackend::Both: {
      const EdgeClass a = by_polygon();
      const EdgeClass b = by_pipes();
      if (!(a == b)) {
        raise(ErrorCode::StructureViolation, "flip backends disagree on " + to_string(e) + ": " +
                                                 to_string(a) + " vs " + to_string(b));
      }
      return a;
    }
  }
  return by_polygon();
}

}  // namespace

OrbitFlip orbit_flip(const CylinderTriangulation& t, const EdgeClass& e, FlipBackend backend) {
  const int n = t.surface.n;
  if (t.surface.k != 2) raise(ErrorCode::InvalidInput, "orbit flips are defined for k=2");
  const EdgeClass canon = EdgeClass::of(e.rep, n);
  if (!is_relevant_class(canon, 2, n)) raise(ErrorCode::NotRelevant, to_string(canon) + " is not 2-relevant");
  if (!t.contains(canon)) raise(ErrorCode::NotInTriangulation, to_string(canon) + " is not in the triangulation");

  const EdgeClass added = flip_partner(t, canon, backend);
  std::vector<EdgeClass> classes = t.classes;
  std::erase(classes, canon);
  classes.push_back(added);
  return OrbitFlip{make_cylinder(t.surface, std::move(classes)), added};
}

std::vector<EdgeClass> flip_completions(const CylinderTriangulation& t, const EdgeClass& e) {
  const CylinderSpace space(t.surface);
  if (space.index_of(e) < 0) raise(ErrorCode::NotRelevant, to_string(e) + " is not relevant");
  const Mask base = space.mask_of(t) & ~bit(space.index_of(e));
  std::vector<EdgeClass> out;
  for (int i = 0; i < space.problem().size; ++i) {
    if ((base & bit(i)) || space.relevant()[i] == EdgeClass::of(e.rep, t.surface.n)) continue;
    if (is_maximal_free(space.problem(), base | bit(i))) out.push_back(space.relevant()[i]);
  }
  return out;
}

bool FlipGraph::is_regular(int degree) const {
  return std::all_of(degrees.begin(), degrees.end(), [degree](int d) { return d == degree; });
}

int FlipGraph::component_count() const {
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    const int a = find(e.from), b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

FlipGraph build_flip_graph(int n, const EnumerationOptions& options, FlipBackend backend) {
  const SurfaceDesc surface = SurfaceDesc::cylinder(n, 2);
  check_cylinder_budget(surface, options);
  const CylinderSpace space(surface);
  const std::vector<Mask> masks = enumerate_cylinder_masks(space, options);
  std::unordered_map<Mask, int> index;
  for (std::size_t i = 0; i < masks.size(); ++i) index.emplace(masks[i], static_cast<int>(i));

  FlipGraph g;
  g.n = n;
  for (Mask m : masks) g.vertices.push_back(space.triangulation(m));
  std::vector<FlipGraphEdge> arcs;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& t = g.vertices[i];
    for (const auto& c : t.relevant_classes()) {
      const OrbitFlip f = orbit_flip(t, c, backend);
      auto it = index.find(space.mask_of(f.result));
      if (it == index.end()) {
        raise(ErrorCode::StructureViolation, "flip of " + to_string(c) + " leaves the enumerated set");
      }
      if (it->second == static_cast<int>(i)) raise(ErrorCode::StructureViolation, "flip produced a self-loop");
      arcs.push_back({static_cast<int>(i), it->second, c, f.added});
    }
  }
  // Keep each undirected edge once and insist the reverse arc exists.
  auto key = [](int a, int b) { return (static_cast<long long>(a) << 32) | static_cast<unsigned>(b); };
  std::unordered_map<long long, const FlipGraphEdge*> seen;
  for (const auto& a : arcs) {
    if (!seen.emplace(key(a.from, a.to), &a).second) {
      raise(ErrorCode::StructureViolation, "parallel flips between two triangulations");
    }
  }
  g.degrees.assign(g.vertices.size(), 0);
  for (const auto& a : arcs) {
    auto back = seen.find(key(a.to, a.from));
    if (back == seen.end() || !(back->second->removed == a.added) || !(back->second->added == a.removed)) {
      raise(ErrorCode::StructureViolation, "flip is not symmetric");
    }
    ++g.degrees[a.from];
    if (a.from < a.to) g.edges.push_back(a);
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const auto& x, const auto& y) { return std::pair(x.from, x.to) < std::pair(y.from, y.to); });
  return g;
}

std::string to_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "graph flips_n" << g.n << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) os << "  " << i << ";\n";
  for (const auto& e : g.edges) {
    os << "  " << e.from << " -- " << e.to << " [label=\"" << e.removed.rep.a << "-" << e.removed.rep.b
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace multitri
