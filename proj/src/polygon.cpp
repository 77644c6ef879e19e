#include "multitri/polygon.hpp"

#include <algorithm>
#include <map>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

void check_vertex(const Edge& e, int m) {
  if (e.a < 0 || e.b >= m) {
    raise(ErrorCode::InvalidInput, to_string(e) + " is not an edge of the " + std::to_string(m) + "-gon");
  }
}

std::string key(const std::vector<int>& vs) {
  std::string s;
  for (int v : vs) s += std::to_string(v) + ",";
  return s;
}

}  // namespace

bool PolygonTriangulation::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool is_relevant_polygon_edge(const Edge& e, const SurfaceDesc& polygon) {
  check_vertex(e, polygon.n);
  return cyclic_length(e, polygon.n) > polygon.k;
}

int polygon_edge_count(int m, int k) {
  if (m <= 2 * k + 1) return m * (m - 1) / 2;
  return k * (2 * m - 2 * k - 1);
}

int default_polygon_budget(int k) {
  switch (k) {
    case 1: return 12;
    case 2: return 10;
    case 3: return 12;
    default: return 2 * k + 6;
  }
}

PolygonSpace::PolygonSpace(const SurfaceDesc& polygon) : surface_(polygon) {
  if (!polygon.is_polygon()) raise(ErrorCode::InvalidInput, "expected a polygon surface");
  const int m = polygon.n;
  index_.assign(static_cast<std::size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      Edge e(a, b);
      if (cyclic_length(e, m) > polygon.k) {
        index_[a * m + b] = static_cast<int>(relevant_.size());
        relevant_.push_back(e);
      } else {
        short_.push_back(e);
      }
    }
  }
  if (relevant_.size() > static_cast<std::size_t>(kMaxCandidates)) {
    raise(ErrorCode::TooLarge, std::to_string(relevant_.size()) + " relevant edges exceed the " +
                                   std::to_string(kMaxCandidates) + "-candidate search");
  }
  problem_.size = static_cast<int>(relevant_.size());
  for (const auto& clique : enumerate_crossings(relevant_, polygon.k + 1)) {
    Mask f = 0;
    for (int i : clique) f |= bit(i);
    problem_.forbidden.push_back(f);
  }
  minimize_forbidden(problem_.forbidden);
}

int PolygonSpace::index_of(const Edge& e) const {
  const int m = surface_.n;
  if (e.a < 0 || e.b >= m) return -1;
  return index_[e.a * m + e.b];
}

PolygonTriangulation PolygonSpace::triangulation(Mask relevant_set) const {
  PolygonTriangulation t{surface_, short_};
  for (std::size_t i = 0; i < relevant_.size(); ++i) {
    if (relevant_set & bit(static_cast<int>(i))) t.edges.push_back(relevant_[i]);
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

Mask PolygonSpace::mask_of(const PolygonTriangulation& t) const {
  Mask out = 0;
  for (const Edge& e : t.edges) {
    int i = index_of(e);
    if (i >= 0) out |= bit(i);
  }
  return out;
}

void check_polygon_budget(const SurfaceDesc& polygon, const EnumerationOptions& options) {
  const int limit = options.max_n == 0 ? default_polygon_budget(polygon.k) : options.max_n;
  if (limit > 0 && polygon.n > limit) {
    raise(ErrorCode::TooLarge, "polygon enumeration budget is n <= " + std::to_string(limit) +
                                   " for k=" + std::to_string(polygon.k) + ", got n=" +
                                   std::to_string(polygon.n));
  }
}

std::vector<Mask> enumerate_polygon_masks(const PolygonSpace& space, const EnumerationOptions& options) {
  check_polygon_budget(space.surface(), options);
  return enumerate_maximal_free_sets(space.problem(), options.search);
}

std::vector<PolygonTriangulation> enumerate_polygon(const SurfaceDesc& polygon,
                                                    const EnumerationOptions& options) {
  check_polygon_budget(polygon, options);
  PolygonSpace space(polygon);
  std::vector<PolygonTriangulation> out;
  for (Mask m : enumerate_polygon_masks(space, options)) out.push_back(space.triangulation(m));
  return out;
}

void validate(const PolygonTriangulation& t) {
  const int m = t.surface.n;
  const int k = t.surface.k;
  if (!std::is_sorted(t.edges.begin(), t.edges.end()) ||
      std::adjacent_find(t.edges.begin(), t.edges.end()) != t.edges.end()) {
    raise(ErrorCode::StructureViolation, "edge list is not sorted and duplicate-free");
  }
  for (const Edge& e : t.edges) check_vertex(e, m);
  std::vector<Edge> relevant;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Edge e(a, b);
      if (cyclic_length(e, m) > k) {
        if (t.contains(e)) relevant.push_back(e);
      } else if (!t.contains(e)) {
        raise(ErrorCode::StructureViolation, "short edge " + to_string(e) + " missing");
      }
    }
  }
  if (auto hit = find_crossing(relevant, k + 1)) {
    raise(ErrorCode::StructureViolation, "contains the crossing starting at " + to_string(hit->front()));
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Edge e(a, b);
      if (cyclic_length(e, m) <= k || t.contains(e)) continue;
      std::vector<Edge> with = relevant;
      with.push_back(e);
      if (!find_crossing(with, k + 1, [&e](const Edge& x) { return x == e; })) {
        raise(ErrorCode::StructureViolation, to_string(e) + " can be added, the set is not maximal");
      }
    }
  }
}

std::vector<int> polygon_neighbors(const PolygonTriangulation& t, int v) {
  const int m = t.surface.n;
  std::vector<int> out;
  for (const Edge& e : t.edges) {
    if (e.a == v) out.push_back(e.b);
    else if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end(), [v, m](int x, int y) {
    return (x - v + m) % m < (y - v + m) % m;
  });
  return out;
}

std::vector<KStar> star_decomposition(const PolygonTriangulation& t) {
  const int m = t.surface.n;
  const int k = t.surface.k;
  std::vector<std::vector<int>> nbr(m);
  for (int v = 0; v < m; ++v) nbr[v] = polygon_neighbors(t, v);
  NeighborFn neighbors = [&nbr](int x) { return nbr[x]; };
  BetweenFn between = [m](int x, int y, int z) { return cyclically_between_mod(x, y, z, m); };

  std::map<std::string, KStar> found;
  for (int v = 0; v < m; ++v) {
    for (const Angle& ang : angles_at(v, nbr[v])) {
      const int lu = cyclic_length(Edge(ang.u, v), m);
      const int lw = cyclic_length(Edge(v, ang.w), m);
      if (lu < k || lw < k) continue;
      auto stars = stars_through_angle(k, ang, neighbors, between);
      if ((lu > k || lw > k) && stars.size() != 1) {
        raise(ErrorCode::StructureViolation,
              "angle (" + std::to_string(ang.u) + "," + std::to_string(v) + "," + std::to_string(ang.w) +
                  ") lies in " + std::to_string(stars.size()) + " stars");
      }
      for (auto& s : stars) found.emplace(key(s.sorted_vertices()), std::move(s));
    }
  }
  std::vector<KStar> out;
  for (auto& [_, s] : found) out.push_back(std::move(s));
  std::sort(out.begin(), out.end(),
            [](const KStar& x, const KStar& y) { return x.sorted_vertices() < y.sorted_vertices(); });
  const int expected = std::max(0, m - 2 * k);
  if (static_cast<int>(out.size()) != expected) {
    raise(ErrorCode::StructureViolation, "found " + std::to_string(out.size()) + " stars, expected " +
                                             std::to_string(expected));
  }
  return out;
}

std::pair<KStar, KStar> stars_containing(const PolygonTriangulation& t, const Edge& e) {
  std::vector<KStar> hits;
  for (auto& s : star_decomposition(t)) {
    if (s.contains_edge(e)) hits.push_back(std::move(s));
  }
  if (hits.size() != 2) {
    raise(ErrorCode::StructureViolation,
          to_string(e) + " lies in " + std::to_string(hits.size()) + " stars, expected 2");
  }
  return {hits[0], hits[1]};
}

std::pair<PolygonTriangulation, Edge> polygon_flip(const PolygonTriangulation& t, const Edge& e) {
  const int m = t.surface.n;
  if (!is_relevant_polygon_edge(e, t.surface)) {
    raise(ErrorCode::NotRelevant, to_string(e) + " is not " + std::to_string(t.surface.k) + "-relevant");
  }
  if (!t.contains(e)) raise(ErrorCode::NotInTriangulation, to_string(e) + " is not in the triangulation");

  auto [first, second] = stars_containing(t, e);
  BetweenFn between = [m](int x, int y, int z) { return cyclically_between_mod(x, y, z, m); };
  std::vector<Edge> bisectors;
  for (int r : first.vertices) {
    for (int s : second.vertices) {
      if (r == s || t.contains(Edge(r, s))) continue;
      if (bisects_star_angle(first, r, s, between) && bisects_star_angle(second, s, r, between)) {
        bisectors.emplace_back(r, s);
      }
    }
  }
  if (bisectors.size() != 1) {
    raise(ErrorCode::StructureViolation, "stars around " + to_string(e) + " have " +
                                             std::to_string(bisectors.size()) + " common bisectors");
  }
  const Edge f = bisectors.front();
  PolygonTriangulation out = t;
  std::erase(out.edges, e);
  out.edges.insert(std::lower_bound(out.edges.begin(), out.edges.end(), f), f);
  return {out, f};
}

}  // namespace multitri
