// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [golden-dir]

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "multitri/bijection.hpp"
#include "multitri/complex.hpp"
#include "multitri/conjecture.hpp"
#include "multitri/errors.hpp"
#include "multitri/flip.hpp"
#include "multitri/pipedream.hpp"

using namespace multitri;

namespace {

std::string golden_dir = GOLDEN_DIR;

struct Outcome {
  bool pass = true;
  std::string note;
};

std::string slurp(const std::string& name) {
  std::ifstream in(golden_dir + "/" + name);
  if (!in) throw std::runtime_error("missing golden " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs body(i) for i in [0, count) on all cores; returns the number of
// indices for which it returned false.
long long parallel_failures(std::size_t count, const std::function<bool(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::atomic<long long> failures{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      constexpr std::size_t kChunk = 512;
      for (std::size_t start; (start = next.fetch_add(kChunk)) < count;) {
        for (std::size_t i = start; i < std::min(count, start + kChunk); ++i)
          if (!body(i)) ++failures;
      }
    });
  }
  for (auto& t : pool) t.join();
  return failures;
}

Edge shifted(const Edge& e, int s, int m) { return Edge((e.a + s) % m, (e.b + s) % m); }

bool invariant(const PolygonTriangulation& t, int s) {
  return std::all_of(t.edges.begin(), t.edges.end(),
                     [&](const Edge& e) { return t.contains(shifted(e, s, t.surface.n)); });
}

std::vector<std::pair<int, int>> polygon_cases() {
  std::vector<std::pair<int, int>> out;
  for (int m = 5; m <= 10; ++m) out.emplace_back(m, 1);
  for (int m = 5; m <= 9; ++m) out.emplace_back(m, 2);
  for (int m = 7; m <= 9; ++m) out.emplace_back(m, 3);
  return out;
}

Outcome edge_count_law() {
  long long seen = 0;
  for (auto [m, k] : polygon_cases()) {
    for (const auto& t : enumerate_polygon(SurfaceDesc::polygon(m, k))) {
      ++seen;
      if (static_cast<int>(t.edges.size()) != k * (2 * m - 2 * k - 1))
        return {false, "m=" + std::to_string(m) + " k=" + std::to_string(k) + " has " +
                           std::to_string(t.edges.size()) + " edges"};
    }
  }
  return {true, std::to_string(seen) + " triangulations"};
}

Outcome star_count_law() {
  long long seen = 0;
  for (auto [m, k] : polygon_cases()) {
    for (const auto& t : enumerate_polygon(SurfaceDesc::polygon(m, k))) {
      ++seen;
      // star_decomposition itself rejects a count other than m-2k.
      if (static_cast<int>(star_decomposition(t).size()) != m - 2 * k)
        return {false, "m=" + std::to_string(m) + " k=" + std::to_string(k)};
    }
  }
  return {true, std::to_string(seen) + " triangulations"};
}

Outcome staircase_bijection() {
  const auto pi = staircase_permutation(8, 2);
  const auto ts = enumerate_polygon(SurfaceDesc::polygon(8, 2));
  std::set<std::map<Cell, TileKind>> images;
  for (const auto& t : ts) {
    const auto p = staircase_from_triangulation(t);
    const auto trace = trace_pipes(p);
    if (trace.permutation != pi || !trace.reduced()) return {false, "a staircase is not a reduced pipe dream for pi"};
    images.insert(p.tiles);
  }
  const int free = static_cast<int>(staircase_free_cells(8, 2).size());
  long long reduced = 0;
  for (long long s = 0; s < (1LL << free); ++s) {
    std::vector<bool> bumps(free);
    for (int i = 0; i < free; ++i) bumps[i] = (s >> i) & 1;
    const auto trace = trace_pipes(staircase_from_bits(8, 2, bumps));
    if (trace.reduced() && trace.permutation == pi) ++reduced;
  }
  const bool ok = ts.size() == 84 && images.size() == 84 && reduced == 84;
  return {ok, std::to_string(ts.size()) + " triangulations, " + std::to_string(reduced) + " reduced pipe dreams"};
}

Outcome cylinder_counts() {
  std::ostringstream note;
  for (int n = 1; n <= 5; ++n) {
    const auto ts = enumerate_cylinder(SurfaceDesc::cylinder(n, 2));
    for (const auto& t : ts) count_report(t);  // raises on a mismatch
    note << "n=" << n << ":" << ts.size() << " ";
  }
  return {true, note.str()};
}

Outcome spanning_edge() {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      int spanning = 0;
      for (const auto& c : t.classes) spanning += c.length() == 2 * n ? 1 : 0;
      if (spanning != 1) return {false, "n=" + std::to_string(n) + ": " + std::to_string(spanning) + " classes of length 2n"};
    }
  }
  return {true, "n <= 5"};
}

Outcome star_uniqueness() {
  long long angles = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      for (const auto& fa : find_angles(t)) {
        if (!fa.relevant) continue;
        ++angles;
        const KStar s = star_of_angle(t, fa.angle);
        const auto edges = s.edges();
        const bool present = edges.size() == 5 && std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
                               return t.contains_lift_edge(e);
                             });
        const auto all = lift_stars_through(t, fa.angle);
        if (!present || all.size() != 1 || !(all.front() == s)) return {false, "angle without a unique star"};
      }
    }
  }
  return {true, std::to_string(angles) + " angles"};
}

Outcome maximal_lifting() {
  long long checked = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      const auto r = check_maximal_lifting(t);
      checked += r.checked;
      if (!r.ok()) return {false, to_string(r.addable.front()) + " can be added"};
    }
  }
  return {true, std::to_string(checked) + " absent classes each complete a 3-crossing"};
}

Outcome bijection() {
  std::ostringstream note;
  for (int n = 1; n <= 3; ++n) {
    const auto cyl = enumerate_cylinder(SurfaceDesc::cylinder(n, 2));
    const auto poly = enumerate_periodic_polygon(n, 2);
    std::set<std::vector<Edge>> targets;
    for (const auto& p : poly) targets.insert(p.edges);
    std::set<std::vector<Edge>> images;
    for (const auto& c : cyl) {
      const auto p = phi(c);
      if (!targets.count(p.inner.edges)) return {false, "image outside the periodic set"};
      if (!(phi_inverse(p) == c)) return {false, "inverse does not recover the cylinder triangulation"};
      images.insert(p.inner.edges);
    }
    if (cyl.size() != poly.size() || images.size() != cyl.size()) return {false, "counts differ at n=" + std::to_string(n)};
    note << "n=" << n << ":" << cyl.size() << " ";
  }
  return {true, note.str()};
}

struct TwelveGon {
  PolygonSpace space{SurfaceDesc::polygon(12, 2)};
  std::vector<Mask> masks;
  TwelveGon() {
    EnumerationOptions o;
    o.max_n = 12;
    masks = enumerate_polygon_masks(space, o);
  }
};

const TwelveGon& twelve_gon() {
  static const TwelveGon data;
  return data;
}

Outcome chevron_construction() {
  std::vector<EdgeClass> classes;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 2), Edge(1, 3), Edge(2, 4), Edge(0, 4), Edge(1, 4),
                 Edge(1, 7), Edge(2, 7)})
    classes.push_back(EdgeClass::of(e, 3));
  const auto running = phi(make_cylinder(SurfaceDesc::cylinder(3, 2), classes)).inner;
  const auto staircase = staircase_from_triangulation(running);
  if (render_ascii(staircase) != slurp("staircase_12_2.txt")) return {false, "staircase differs from golden"};
  const auto steps = chevron_steps_ascii(staircase);
  for (int i = 0; i < 5; ++i)
    if (steps[i] != slurp("chevron_step" + std::to_string(i + 1) + ".txt"))
      return {false, "step " + std::to_string(i + 1) + " differs from golden"};
  if (render_ascii(chevron_from_staircase(staircase)) != slurp("chevron_12_2.txt")) return {false, "chevron differs"};

  const auto& data = twelve_gon();
  const long long bad = parallel_failures(data.masks.size(), [&](std::size_t i) {
    const auto chevron = chevron_from_staircase(staircase_from_triangulation(data.space.triangulation(data.masks[i])));
    return trace_pipes(chevron).each_pair_once();
  });
  if (bad) return {false, std::to_string(bad) + " chevrons with a pair not crossing exactly once"};
  return {true, "goldens match; " + std::to_string(data.masks.size()) + " chevrons cross once per pair"};
}

Outcome periodicity() {
  const auto& data = twelve_gon();
  std::atomic<long long> periodic{0};
  const long long bad = parallel_failures(data.masks.size(), [&](std::size_t i) {
    const auto t = data.space.triangulation(data.masks[i]);
    const bool shift = invariant(t, 3);
    if (shift) ++periodic;
    return shift == is_n_periodic(chevron_from_staircase(staircase_from_triangulation(t)), 3);
  });
  if (bad) return {false, std::to_string(bad) + " disagreements"};
  return {true, std::to_string(periodic.load()) + " of " + std::to_string(data.masks.size()) + " are 3-periodic"};
}

Outcome flips() {
  long long count = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      for (const auto& e : t.relevant_classes()) {
        ++count;
        const auto f = orbit_flip(t, e, FlipBackend::Both);
        validate(f.result);
        const auto alternatives = flip_completions(t, e);
        if (alternatives.size() != 1 || !(alternatives.front() == f.added)) return {false, "flip of " + to_string(e) + " not unique"};
        if (!(orbit_flip(f.result, f.added).result == t)) return {false, "flip of " + to_string(e) + " not an involution"};
      }
    }
  }
  return {true, std::to_string(count) + " flips"};
}

Outcome flip_graph_and_complex() {
  std::ostringstream note;
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_flip_graph(n);
    if (!g.is_regular(2 * (n - 1))) return {false, "flip graph for n=" + std::to_string(n) + " is not regular"};
    const auto r = analyze_complex(n, 2);
    if (!r.is_pure || !r.is_weak_pseudomanifold) return {false, "complex for n=" + std::to_string(n)};
    note << "n=" << n << ":" << g.vertices.size() << " vertices, " << r.ridge_count << " ridges; ";
  }
  return {true, note.str()};
}

Outcome conjecture_lab() {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& r : {check_star_decomposition_k(n, 2), check_bijection_k(n, 2), check_counts_k(n, 2),
                          check_translation_lemma(n, 2)})
      if (!r.holds()) return {false, "control " + r.check + " fails at n=" + std::to_string(n)};
  }
  std::ostringstream note;
  note << "k=3 n=2:";
  for (const auto& r : {check_star_decomposition_k(2, 3), check_bijection_k(2, 3), check_counts_k(2, 3)}) {
    r.to_json().dump();
    note << " " << r.check << "=" << (r.holds() ? "holds" : "fails");
  }
  return {true, note.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) golden_dir = argv[1];
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"polygon edge-count law", edge_count_law},
      {"polygon star-count law", star_count_law},
      {"staircase pipe dream bijection (m=8, k=2)", staircase_bijection},
      {"cylinder counts (n <= 5)", cylinder_counts},
      {"unique spanning edge (n <= 5)", spanning_edge},
      {"star decomposition (n <= 4)", star_uniqueness},
      {"maximal lifting (n <= 4)", maximal_lifting},
      {"cylinder vs periodic polygon bijection (n <= 3)", bijection},
      {"chevron goldens and single crossings (m=12)", chevron_construction},
      {"periodicity equivalence (m=12, n=3)", periodicity},
      {"flip existence, uniqueness, involution (n <= 4)", flips},
      {"regular flip graph, pure pseudomanifold (n = 2..4)", flip_graph_and_complex},
      {"conjecture lab reports", conjecture_lab},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << i + 1 << " " << criteria[i].first << " ("
              << std::fixed << std::setprecision(1) << secs << " s) " << o.note << std::endl;
  }
  return failed ? 1 : 0;
}
