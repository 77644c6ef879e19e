#include <set>

#include "common.hpp"
#include "multitri/flip.hpp"

using namespace multitri;
using testing::code_of;

namespace {

CylinderTriangulation flip_example() {
  std::vector<EdgeClass> classes;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 2), Edge(1, 3), Edge(2, 4), Edge(0, 3), Edge(1, 4),
                 Edge(1, 6), Edge(1, 7)})
    classes.push_back(EdgeClass::of(e, 3));
  return make_cylinder(SurfaceDesc::cylinder(3, 2), classes);
}

}  // namespace

TEST_CASE("worked flip") {
  const auto t = flip_example();
  validate(t);
  const auto f = orbit_flip(t, EdgeClass::of(Edge(1, 6), 3), FlipBackend::Both);
  CHECK(f.added.rep == Edge(0, 4));
  CHECK(f.result.contains(EdgeClass::of(Edge(0, 4), 3)));
  CHECK_FALSE(f.result.contains(EdgeClass::of(Edge(1, 6), 3)));
  CHECK(orbit_flip(f.result, f.added).added.rep == Edge(1, 6));
}

TEST_CASE("flips exist, are unique, agree across backends and are involutions") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      for (const auto& e : t.relevant_classes()) {
        const auto f = orbit_flip(t, e, FlipBackend::Both);
        validate(f.result);
        const auto alternatives = flip_completions(t, e);
        REQUIRE(alternatives.size() == 1);
        CHECK(alternatives.front() == f.added);
        const auto back = orbit_flip(f.result, f.added);
        CHECK(back.result == t);
        CHECK(back.added == e);
      }
    }
  }
}

TEST_CASE("the spanning class flips too") {
  const auto t = flip_example();
  const auto spanning = unique_spanning_class(t);
  const auto f = orbit_flip(t, spanning);
  CHECK(unique_spanning_class(f.result).length() == 6);
  CHECK_FALSE(f.result.contains(spanning));
}

TEST_CASE("flip errors") {
  const auto t = flip_example();
  CHECK(code_of([&] { orbit_flip(t, EdgeClass::of(Edge(0, 2), 3)); }) == ErrorCode::NotRelevant);
  CHECK(code_of([&] { orbit_flip(t, EdgeClass::of(Edge(0, 5), 3)); }) == ErrorCode::NotInTriangulation);
  CHECK(code_of([&] { orbit_flip(t, EdgeClass::of(Edge(0, 7), 3)); }) == ErrorCode::NotRelevant);
  const auto k1 = enumerate_cylinder(SurfaceDesc::cylinder(3, 1)).front();
  CHECK(code_of([&] { orbit_flip(k1, k1.relevant_classes().front()); }) == ErrorCode::InvalidInput);
}

TEST_CASE("flip graphs are connected and regular of degree 2(n-1)") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = build_flip_graph(n);
    CHECK(g.is_regular(2 * (n - 1)));
    CHECK(g.component_count() == 1);
    CHECK(g.edges.size() == g.vertices.size() * (n - 1));
  }
}

TEST_CASE("dot export") {
  const auto g = build_flip_graph(2);
  const auto dot = to_dot(g);
  CHECK(dot.rfind("graph flips_n2 {", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(g.vertices.size() == 4);
  CHECK(g.edges.size() == 4);
}
