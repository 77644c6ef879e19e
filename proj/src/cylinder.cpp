#include "multitri/cylinder.hpp"

#include <algorithm>
#include <map>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

int floor_mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

long long floor_div(long long x, long long d) {
  long long q = x / d;
  return (x % d != 0 && ((x < 0) != (d < 0))) ? q - 1 : q;
}

bool between(long long x, long long y, long long z) { return cyclically_between(x, y, z); }

// x precedes-or-equals y inside the arc that starts at `from`.
bool weakly_before(long long from, long long x, long long y) { return x == y || between(from, x, y); }

std::string angle_text(const Angle& a) {
  return "(" + std::to_string(a.u) + "," + std::to_string(a.v) + "," + std::to_string(a.w) + ")";
}

}  // namespace

bool CylinderTriangulation::contains(const EdgeClass& c) const {
  return std::binary_search(classes.begin(), classes.end(), EdgeClass::of(c.rep, surface.n));
}

bool CylinderTriangulation::contains_lift_edge(const Edge& e) const {
  return contains(EdgeClass::of(e, surface.n));
}

std::vector<EdgeClass> CylinderTriangulation::relevant_classes() const {
  std::vector<EdgeClass> out;
  for (const auto& c : classes) {
    if (is_relevant_class(c, surface.k, surface.n)) out.push_back(c);
  }
  return out;
}

std::vector<Edge> CylinderTriangulation::lift(int lo, int hi) const {
  const int n = surface.n;
  std::vector<Edge> out;
  for (const auto& c : classes) {
    const long long t0 = -floor_div(-(static_cast<long long>(lo) - c.rep.a), n);
    const long long t1 = floor_div(static_cast<long long>(hi) - c.rep.b, n);
    for (long long t = t0; t <= t1; ++t) out.push_back(c.member(static_cast<int>(t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CylinderTriangulation::neighbors(int x) const {
  const int n = surface.n;
  std::vector<int> above, below;
  for (const auto& c : classes) {
    if (floor_mod(static_cast<long long>(x) - c.rep.a, n) == 0) above.push_back(x + c.length());
    if (floor_mod(static_cast<long long>(x) - c.rep.b, n) == 0) below.push_back(x - c.length());
  }
  std::sort(above.begin(), above.end());
  std::sort(below.begin(), below.end());
  above.insert(above.end(), below.begin(), below.end());
  return above;
}

bool is_relevant_class(const EdgeClass& c, int k, int n) {
  return c.length() > k && c.length() <= k * n;
}

CylinderTriangulation make_cylinder(const SurfaceDesc& cylinder, std::vector<EdgeClass> classes) {
  if (cylinder.is_polygon()) raise(ErrorCode::InvalidInput, "expected a cylinder surface");
  for (auto& c : classes) c = EdgeClass::of(c.rep, cylinder.n);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return CylinderTriangulation{cylinder, std::move(classes)};
}

int default_cylinder_budget(int k) {
  switch (k) {
    case 1: return 8;
    case 2: return 5;
    case 3: return 3;
    default: return 2;
  }
}

CylinderSpace::CylinderSpace(const SurfaceDesc& cylinder) : surface_(cylinder) {
  if (cylinder.is_polygon()) raise(ErrorCode::InvalidInput, "expected a cylinder surface");
  const int n = cylinder.n;
  const int k = cylinder.k;
  const long long count = static_cast<long long>(n) * (k * n - k);
  if (count > kMaxCandidates) {
    raise(ErrorCode::TooLarge, std::to_string(count) + " relevant classes exceed the " +
                                   std::to_string(kMaxCandidates) + "-candidate search");
  }
  for (int a = 0; a < n; ++a) {
    for (int len = 1; len <= k; ++len) short_.push_back(EdgeClass::of(Edge(a, a + len), n));
    for (int len = k + 1; len <= k * n; ++len) relevant_.push_back(EdgeClass::of(Edge(a, a + len), n));
  }
  std::sort(short_.begin(), short_.end());
  problem_.size = static_cast<int>(relevant_.size());

  const std::vector<Edge> window = periodic_crossing_window(relevant_, k, n);
  auto anchored = [n](const Edge& e) { return e.a >= 0 && e.a < n; };
  for (const auto& clique : enumerate_crossings(window, k + 1, anchored)) {
    Mask f = 0;
    for (int i : clique) f |= bit(index_of(EdgeClass::of(window[i], n)));
    problem_.forbidden.push_back(f);
  }
  minimize_forbidden(problem_.forbidden);
}

int CylinderSpace::index_of(const EdgeClass& c) const {
  const int n = surface_.n;
  const int k = surface_.k;
  const EdgeClass canon = EdgeClass::of(c.rep, n);
  if (!is_relevant_class(canon, k, n)) return -1;
  return canon.rep.a * (k * n - k) + (canon.length() - k - 1);
}

CylinderTriangulation CylinderSpace::triangulation(Mask relevant_set) const {
  std::vector<EdgeClass> classes = short_;
  for (std::size_t i = 0; i < relevant_.size(); ++i) {
    if (relevant_set & bit(static_cast<int>(i))) classes.push_back(relevant_[i]);
  }
  std::sort(classes.begin(), classes.end());
  return CylinderTriangulation{surface_, std::move(classes)};
}

Mask CylinderSpace::mask_of(const CylinderTriangulation& t) const {
  Mask out = 0;
  for (const auto& c : t.classes) {
    int i = index_of(c);
    if (i >= 0) out |= bit(i);
  }
  return out;
}

void check_cylinder_budget(const SurfaceDesc& cylinder, const EnumerationOptions& options) {
  const int limit = options.max_n == 0 ? default_cylinder_budget(cylinder.k) : options.max_n;
  if (limit > 0 && cylinder.n > limit) {
    raise(ErrorCode::TooLarge, "cylinder enumeration budget is n <= " + std::to_string(limit) +
                                   " for k=" + std::to_string(cylinder.k) + ", got n=" +
                                   std::to_string(cylinder.n));
  }
}

std::vector<Mask> enumerate_cylinder_masks(const CylinderSpace& space, const EnumerationOptions& options) {
  check_cylinder_budget(space.surface(), options);
  return enumerate_maximal_free_sets(space.problem(), options.search);
}

std::vector<CylinderTriangulation> enumerate_cylinder(const SurfaceDesc& cylinder,
                                                      const EnumerationOptions& options) {
  check_cylinder_budget(cylinder, options);
  CylinderSpace space(cylinder);
  std::vector<CylinderTriangulation> out;
  for (Mask m : enumerate_cylinder_masks(space, options)) {
    out.push_back(space.triangulation(m));
    for (const auto& c : out.back().classes) {
      if (c.length() > cylinder.k * cylinder.n) {
        raise(ErrorCode::StructureViolation, "enumerated class " + to_string(c) + " is longer than kn");
      }
    }
  }
  return out;
}

void validate(const CylinderTriangulation& t) {
  const int n = t.surface.n;
  const int k = t.surface.k;
  for (const auto& c : t.classes) {
    if (c.period != n || c.rep.a < 0 || c.rep.a >= n) {
      raise(ErrorCode::StructureViolation, to_string(c) + " is not a canonical class");
    }
    if (c.length() > k * n) raise(ErrorCode::StructureViolation, to_string(c) + " is longer than kn");
  }
  if (!std::is_sorted(t.classes.begin(), t.classes.end()) ||
      std::adjacent_find(t.classes.begin(), t.classes.end()) != t.classes.end()) {
    raise(ErrorCode::StructureViolation, "class list is not sorted and duplicate-free");
  }
  CylinderSpace space(t.surface);
  for (const auto& c : space.short_classes()) {
    if (!t.contains(c)) raise(ErrorCode::StructureViolation, "short class " + to_string(c) + " missing");
  }
  unique_spanning_class(t);
  if (!is_maximal_free(space.problem(), space.mask_of(t))) {
    raise(ErrorCode::StructureViolation, "lift is not a maximal (k+1)-crossing-free periodic set");
  }
}

EdgeClass unique_spanning_class(const CylinderTriangulation& t) {
  const int span = t.surface.k * t.surface.n;
  std::vector<EdgeClass> hits;
  for (const auto& c : t.classes) {
    if (c.length() == span) hits.push_back(c);
  }
  if (hits.size() != 1) {
    raise(ErrorCode::StructureViolation,
          std::to_string(hits.size()) + " classes of length kn=" + std::to_string(span) + ", expected 1");
  }
  return hits.front();
}

std::vector<FlaggedAngle> find_angles(const CylinderTriangulation& t, int window) {
  const int n = t.surface.n;
  const int k = t.surface.k;
  if (window < 0) window = default_window_radius(k);
  if (window < default_window_radius(k)) {
    raise(ErrorCode::InvalidInput, "angle window must cover at least 2k+1 periods");
  }
  const int span = k * n;
  auto relevant_len = [k, span](int len) { return len > k && len < span; };
  std::vector<FlaggedAngle> out;
  for (int v = 0; v < n; ++v) {
    for (const Angle& a : angles_at(v, t.neighbors(v))) {
      const int lu = std::abs(a.u - v);
      const int lw = std::abs(a.w - v);
      out.push_back(FlaggedAngle{a, relevant_len(lu) || relevant_len(lw)});
    }
  }
  return out;
}

Edge v_maximal_edge(const CylinderTriangulation& t, const Angle& angle) {
  const int span = t.surface.k * t.surface.n;
  const long long u = angle.u, v = angle.v, w = angle.w;
  struct Oriented {
    long long a, b;
  };
  std::vector<Oriented> cands;
  for (const Edge& e : t.lift(angle.v - 3 * span, angle.v + 3 * span)) {
    for (auto [a, b] : {std::pair<long long, long long>{e.a, e.b}, {e.b, e.a}}) {
      if (between(u, a, v) && between(v, b, w)) cands.push_back({a, b});
    }
  }
  auto farther = [&](const Oriented& e, const Oriented& f) {
    return (e.a != f.a || e.b != f.b) && weakly_before(u, e.a, f.a) &&
           (e.b == f.b || between(f.b, e.b, w));
  };
  std::vector<Oriented> maximal;
  for (const auto& e : cands) {
    bool dominated = std::any_of(cands.begin(), cands.end(), [&](const Oriented& f) { return farther(f, e); });
    if (!dominated) maximal.push_back(e);
  }
  if (maximal.size() != 1) {
    raise(ErrorCode::StructureViolation, std::to_string(maximal.size()) +
                                             " v-maximal edges cross the angle " + angle_text(angle));
  }
  return Edge(static_cast<int>(maximal[0].a), static_cast<int>(maximal[0].b));
}

KStar star_of_angle(const CylinderTriangulation& t, const Angle& angle) {
  const int n = t.surface.n;
  const int k = t.surface.k;
  if (k != 2) raise(ErrorCode::InvalidInput, "star_of_angle follows the k=2 construction");
  const int lu = std::abs(angle.u - angle.v);
  const int lw = std::abs(angle.w - angle.v);
  if (lu >= 2 * n && lw >= 2 * n) {
    raise(ErrorCode::LengthPrecondition, "both edges of " + angle_text(angle) + " have length >= 2n");
  }
  auto relevant_len = [k, n](int len) { return len > k && len < k * n; };
  if (!relevant_len(lu) && !relevant_len(lw)) {
    raise(ErrorCode::LengthPrecondition, "angle " + angle_text(angle) + " has no relevant edge shorter than kn");
  }
  const Edge mid = v_maximal_edge(t, angle);
  // Recover the orientation: a sits between u and v.
  const int a = between(angle.u, mid.a, angle.v) ? mid.a : mid.b;
  const int b = a == mid.a ? mid.b : mid.a;
  KStar star = KStar::from_cyclic({angle.u, a, angle.v, b, angle.w}, 2);
  for (const Edge& e : star.edges()) {
    if (!t.contains_lift_edge(e) || e.length() > k * n) {
      raise(ErrorCode::StructureViolation, "star edge " + to_string(e) + " of angle " + angle_text(angle) +
                                               " is missing from the lift");
    }
  }
  return star;
}

std::vector<KStar> lift_stars_through(const CylinderTriangulation& t, const Angle& angle) {
  NeighborFn neighbors = [&t](int x) { return t.neighbors(x); };
  BetweenFn order = [](int x, int y, int z) { return cyclically_between(x, y, z); };
  return stars_through_angle(t.surface.k, angle, neighbors, order);
}

KStar canonical_star(const KStar& s, int n) {
  const int lo = *std::min_element(s.vertices.begin(), s.vertices.end());
  const int shift = floor_mod(lo, n) - lo;
  KStar out = s;
  for (int& v : out.vertices) v += shift;
  return out;
}

std::vector<KStar> star_classes(const CylinderTriangulation& t) {
  std::map<std::vector<int>, KStar> found;
  for (const auto& fa : find_angles(t)) {
    for (const auto& s : lift_stars_through(t, fa.angle)) {
      KStar c = canonical_star(s, t.surface.n);
      found.emplace(c.sorted_vertices(), c);
    }
  }
  std::vector<KStar> out;
  for (auto& [_, s] : found) out.push_back(s);
  return out;
}

LiftingReport check_maximal_lifting(const CylinderTriangulation& t) {
  const int n = t.surface.n;
  const int k = t.surface.k;
  const int radius = default_window_radius(k);
  std::vector<Edge> window = t.lift(-radius * n, (radius + 1) * n + k * n);
  std::erase_if(window, [k](const Edge& e) { return e.length() <= k; });
  LiftingReport report;
  for (int a = 0; a < n; ++a) {
    for (int len = k + 1; len <= k * n; ++len) {
      const Edge e(a, a + len);
      if (t.contains_lift_edge(e)) continue;
      ++report.checked;
      std::vector<Edge> with = window;
      with.push_back(e);
      auto hit = find_crossing(with, k + 1, [&e](const Edge& x) { return x == e; });
      if (!hit) report.addable.push_back(e);
    }
  }
  return report;
}

}  // namespace multitri
