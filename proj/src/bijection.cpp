#include "multitri/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

Edge shifted(const Edge& e, int shift, int m) { return Edge(mod(e.a + shift, m), mod(e.b + shift, m)); }

}  // namespace

bool is_shift_invariant(const PolygonTriangulation& t, int shift) {
  const int m = t.surface.n;
  return std::all_of(t.edges.begin(), t.edges.end(),
                     [&](const Edge& e) { return t.contains(shifted(e, shift, m)); });
}

std::vector<Edge> polygon_orbit(const EdgeClass& c, int k, int n) {
  const int m = 2 * k * n;
  std::set<Edge> out;
  for (int t = 0; t < 2 * k; ++t) {
    const Edge e = c.rep.translated(t * n);
    out.insert(Edge(mod(e.a, m), mod(e.b, m)));
  }
  return {out.begin(), out.end()};
}

EdgeClass class_of_polygon_edge(const Edge& e, int k, int n) {
  const int m = 2 * k * n;
  const Edge lifted = (e.b - e.a <= k * n) ? e : Edge(e.b, e.a + m);
  return EdgeClass::of(lifted, n);
}

PeriodicPolygonTriangulation phi(const CylinderTriangulation& t, bool any_k) {
  const int n = t.surface.n;
  const int k = t.surface.k;
  if (k != 2 && !any_k) raise(ErrorCode::InvalidInput, "phi is established for k=2 only");
  std::set<Edge> edges;
  for (const auto& c : t.classes) {
    if (c.length() > k * n) raise(ErrorCode::EdgeTooLong, to_string(c) + " is longer than kn");
    for (const Edge& e : polygon_orbit(c, k, n)) edges.insert(e);
  }
  PeriodicPolygonTriangulation out;
  out.inner.surface = SurfaceDesc::polygon(2 * k * n, k);
  out.inner.edges.assign(edges.begin(), edges.end());
  out.period = n;
  validate(out.inner);
  return out;
}

CylinderTriangulation phi_inverse(const PeriodicPolygonTriangulation& p) {
  const int n = p.period;
  const int k = p.inner.surface.k;
  if (n < 1 || p.inner.surface.n != 2 * k * n) {
    raise(ErrorCode::InvalidInput, "polygon size must be 2kn for period n");
  }
  if (!is_shift_invariant(p.inner, n)) {
    raise(ErrorCode::NotPeriodic, "triangulation is not invariant under the shift by " + std::to_string(n));
  }
  std::vector<EdgeClass> classes;
  for (const Edge& e : p.inner.edges) classes.push_back(class_of_polygon_edge(e, k, n));
  return make_cylinder(SurfaceDesc::cylinder(n, k), std::move(classes));
}

CountReport observed_counts(const CylinderTriangulation& t) {
  CountReport r;
  r.stars = static_cast<int>(star_classes(t).size());
  r.relevant = static_cast<int>(t.relevant_classes().size());
  r.total = static_cast<int>(t.classes.size());
  return r;
}

CountReport count_report(const CylinderTriangulation& t) {
  const int n = t.surface.n;
  if (t.surface.k != 2) raise(ErrorCode::InvalidInput, "count_report covers k=2");
  std::set<std::vector<int>> stars;
  for (const auto& fa : find_angles(t)) {
    if (fa.relevant) stars.insert(canonical_star(star_of_angle(t, fa.angle), n).sorted_vertices());
  }
  CountReport r;
  r.stars = static_cast<int>(stars.size());
  r.relevant = static_cast<int>(t.relevant_classes().size());
  r.total = static_cast<int>(t.classes.size());
  const CountReport expected{n - 1, 2 * (n - 1), 2 * (2 * n - 1)};
  if (!(r == expected)) {
    raise(ErrorCode::StructureViolation,
          "counts (" + std::to_string(r.stars) + "," + std::to_string(r.relevant) + "," +
              std::to_string(r.total) + ") differ from (" + std::to_string(expected.stars) + "," +
              std::to_string(expected.relevant) + "," + std::to_string(expected.total) + ")");
  }
  return r;
}

std::vector<PolygonTriangulation> enumerate_periodic_polygon(int n, int k, const EnumerationOptions& options) {
  check_cylinder_budget(SurfaceDesc::cylinder(n, k), options);
  const int m = 2 * k * n;
  const SurfaceDesc polygon = SurfaceDesc::polygon(m, k);

  std::vector<Edge> relevant, shorts;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const Edge e(a, b);
      (cyclic_length(e, m) > k ? relevant : shorts).push_back(e);
    }
  }
  // Orbit index of every relevant edge under the shift by n.
  std::map<Edge, int> orbit_of;
  std::vector<std::vector<Edge>> orbits;
  for (const Edge& e : relevant) {
    if (orbit_of.count(e)) continue;
    std::vector<Edge> orbit;
    for (int t = 0; t < 2 * k; ++t) {
      const Edge f = shifted(e, t * n, m);
      if (!orbit_of.count(f)) {
        orbit_of[f] = static_cast<int>(orbits.size());
        orbit.push_back(f);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  if (orbits.size() > static_cast<std::size_t>(kMaxCandidates)) {
    raise(ErrorCode::TooLarge, std::to_string(orbits.size()) + " edge orbits exceed the search");
  }
  FreeSetProblem problem;
  problem.size = static_cast<int>(orbits.size());
  for (const auto& clique : enumerate_crossings(relevant, k + 1)) {
    Mask f = 0;
    for (int i : clique) f |= bit(orbit_of[relevant[i]]);
    problem.forbidden.push_back(f);
  }
  minimize_forbidden(problem.forbidden);

  std::vector<PolygonTriangulation> out;
  for (Mask set : enumerate_maximal_free_sets(problem, options.search)) {
    std::vector<Edge> present;
    for (int i = 0; i < problem.size; ++i) {
      if (set & bit(i)) present.insert(present.end(), orbits[i].begin(), orbits[i].end());
    }
    // Maximal among periodic sets need not be maximal in the polygon.
    bool maximal = true;
    for (int i = 0; i < problem.size && maximal; ++i) {
      if (set & bit(i)) continue;
      for (const Edge& e : orbits[i]) {
        std::vector<Edge> with = present;
        with.push_back(e);
        if (!find_crossing(with, k + 1, [&e](const Edge& x) { return x == e; })) {
          maximal = false;
          break;
        }
      }
    }
    if (!maximal) continue;
    PolygonTriangulation t{polygon, shorts};
    t.edges.insert(t.edges.end(), present.begin(), present.end());
    std::sort(t.edges.begin(), t.edges.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.edges < y.edges; });
  return out;
}

}  // namespace multitri
