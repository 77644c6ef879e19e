#include "multitri/conjecture.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "multitri/bijection.hpp"
#include "multitri/errors.hpp"

namespace multitri {

namespace {

using nlohmann::json;

json classes_json(const std::vector<EdgeClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back({c.rep.a, c.rep.b});
  return out;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.a, e.b});
  return out;
}

json angle_json(const Angle& a) { return {a.u, a.v, a.w}; }

LabReport start(const std::string& name, int n, int k) {
  LabReport r;
  r.check = name;
  r.n = n;
  r.k = k;
  r.control = k == 2;
  return r;
}

constexpr std::size_t kMaxWitnesses = 5;

}  // namespace

json LabReport::to_json() const {
  return json{{"check", check},         {"n", n},
              {"k", k},                 {"control", control},
              {"instances", instances}, {"failures", failures},
              {"holds", holds()},       {"details", details},
              {"witnesses", witnesses}};
}

std::vector<EdgeClass> minimize_witness(std::vector<EdgeClass> classes, const std::vector<EdgeClass>& keep,
                                        const std::function<bool(const std::vector<EdgeClass>&)>& still_fails) {
  for (std::size_t i = 0; i < classes.size();) {
    if (std::find(keep.begin(), keep.end(), classes[i]) != keep.end()) {
      ++i;
      continue;
    }
    std::vector<EdgeClass> fewer = classes;
    fewer.erase(fewer.begin() + static_cast<long>(i));
    if (still_fails(fewer)) classes = std::move(fewer);
    else ++i;
  }
  return classes;
}

LabReport check_star_decomposition_k(int n, int k, const EnumerationOptions& options) {
  LabReport r = start("star_decomposition", n, k);
  const SurfaceDesc surface = SurfaceDesc::cylinder(n, k);
  long long none = 0, several = 0, triangulations = 0;
  for (const auto& t : enumerate_cylinder(surface, options)) {
    ++triangulations;
    for (const auto& fa : find_angles(t)) {
      if (!fa.relevant) continue;
      ++r.instances;
      const std::size_t found = lift_stars_through(t, fa.angle).size();
      if (found == 1) continue;
      ++r.failures;
      ++(found == 0 ? none : several);
      if (r.witnesses.size() >= kMaxWitnesses) continue;
      const Angle a = fa.angle;
      const std::vector<EdgeClass> keep{EdgeClass::of(Edge(a.u, a.v), n), EdgeClass::of(Edge(a.v, a.w), n)};
      auto fails = [&](const std::vector<EdgeClass>& cs) {
        return lift_stars_through(make_cylinder(surface, cs), a).size() == found;
      };
      r.witnesses.push_back({{"triangulation", classes_json(t.classes)},
                             {"angle", angle_json(a)},
                             {"stars_found", found},
                             {"minimized", classes_json(minimize_witness(t.classes, keep, fails))}});
    }
  }
  r.details = {{"triangulations", triangulations}, {"angles_without_star", none},
               {"angles_with_several_stars", several}};
  return r;
}

LabReport check_bijection_k(int n, int k, const EnumerationOptions& options) {
  LabReport r = start("bijection", n, k);
  const auto cylinder = enumerate_cylinder(SurfaceDesc::cylinder(n, k), options);
  const auto periodic = enumerate_periodic_polygon(n, k, options);
  std::set<std::vector<Edge>> targets;
  for (const auto& p : periodic) targets.insert(p.edges);

  std::set<std::vector<Edge>> images;
  long long invalid = 0, outside = 0;
  for (const auto& t : cylinder) {
    ++r.instances;
    try {
      const auto image = phi(t, true);
      images.insert(image.inner.edges);
      if (!targets.count(image.inner.edges)) {
        ++outside;
        ++r.failures;
      }
    } catch (const Error& err) {
      ++invalid;
      ++r.failures;
      if (r.witnesses.size() < kMaxWitnesses) {
        r.witnesses.push_back({{"triangulation", classes_json(t.classes)}, {"error", err.what()}});
      }
    }
  }
  const bool injective = images.size() == cylinder.size() - static_cast<std::size_t>(invalid);
  const bool surjective = images == targets;
  if (!injective || !surjective) ++r.failures;
  r.details = {{"cylinder_count", cylinder.size()}, {"periodic_polygon_count", periodic.size()},
               {"invalid_images", invalid},         {"images_outside", outside},
               {"injective", injective},            {"surjective", surjective}};
  return r;
}

LabReport check_counts_k(int n, int k, const EnumerationOptions& options) {
  LabReport r = start("counts", n, k);
  const CountReport expected{n - 1, k * (n - 1), k * (2 * n - 1)};
  std::map<std::string, long long> observed;
  for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, k), options)) {
    ++r.instances;
    const CountReport got = observed_counts(t);
    ++observed[std::to_string(got.stars) + "," + std::to_string(got.relevant) + "," + std::to_string(got.total)];
    if (got == expected) continue;
    ++r.failures;
    if (r.witnesses.size() < kMaxWitnesses) {
      r.witnesses.push_back({{"triangulation", classes_json(t.classes)},
                             {"observed", {got.stars, got.relevant, got.total}}});
    }
  }
  r.details = {{"expected", {expected.stars, expected.relevant, expected.total}}, {"observed", observed}};
  return r;
}

std::optional<std::vector<Edge>> single_translate_crossing(const std::vector<Edge>& crossing, int k, int n) {
  std::map<EdgeClass, int> multiplicity;
  for (const Edge& e : crossing) ++multiplicity[EdgeClass::of(e, n)];
  std::vector<EdgeClass> classes;
  std::optional<EdgeClass> repeated;
  for (const auto& [c, count] : multiplicity) {
    classes.push_back(c);
    if (count > 1) repeated = c;
  }
  if (!repeated) return std::nullopt;
  const auto window = periodic_crossing_window(classes, k, n);
  auto anchored = [n](const Edge& e) { return e.a >= 0 && e.a < n; };
  for (const auto& clique : enumerate_crossings(window, k + 1, anchored)) {
    int hits = 0;
    for (int i : clique) hits += repeated->contains(window[i]) ? 1 : 0;
    if (hits == 1) {
      std::vector<Edge> out;
      for (int i : clique) out.push_back(window[i]);
      return out;
    }
  }
  return std::nullopt;
}

LabReport check_translation_lemma(int n, int k, const EnumerationOptions& options) {
  if (k != 2) raise(ErrorCode::InvalidInput, "the translation check concerns 3-crossings (k=2)");
  check_cylinder_budget(SurfaceDesc::cylinder(n, k), options);
  LabReport r = start("translation_lemma", n, k);
  const CylinderSpace space(SurfaceDesc::cylinder(n, k));
  const auto window = periodic_crossing_window(space.relevant(), k, n);
  auto anchored = [n](const Edge& e) { return e.a >= 0 && e.a < n; };
  long long crossings = 0, with_pair = 0, spread = 0, spread_unreplaced = 0;
  for (const auto& clique : enumerate_crossings(window, k + 1, anchored)) {
    ++crossings;
    std::vector<Edge> e;
    for (int i : clique) e.push_back(window[i]);
    std::set<EdgeClass> distinct;
    for (const Edge& x : e) distinct.insert(EdgeClass::of(x, n));
    if (distinct.size() == e.size()) continue;
    ++with_pair;
    // Edges come sorted by left endpoint, so neighbors in `e` are consecutive
    // in the a_1 < a_2 < a_3 labeling.  Only a translated pair of neighbors
    // meets the hypothesis; the others are tallied for the record.
    bool adjacent = false;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      adjacent = adjacent || EdgeClass::of(e[i], n) == EdgeClass::of(e[i + 1], n);
    }
    const bool replaced = single_translate_crossing(e, k, n).has_value();
    if (!adjacent) {
      ++spread;
      if (!replaced) ++spread_unreplaced;
      continue;
    }
    ++r.instances;
    if (replaced) continue;
    ++r.failures;
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back({{"crossing", edges_json(e)}});
  }
  r.details = {{"crossings_examined", crossings},
               {"with_translated_pair", with_pair},
               {"translated_pair_not_adjacent", spread},
               {"not_adjacent_without_replacement", spread_unreplaced}};
  return r;
}

}  // namespace multitri
