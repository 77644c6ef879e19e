#include <set>

#include "common.hpp"
#include "multitri/bijection.hpp"

using namespace multitri;
using testing::code_of;

TEST_CASE("the running example lifts to a 2-triangulation of the 12-gon") {
  const auto p = phi(testing::running_example());
  CHECK(p.period == 3);
  CHECK(p.inner.surface == SurfaceDesc::polygon(12, 2));
  CHECK(p.inner.edges.size() == 38);
  CHECK(is_shift_invariant(p.inner, 3));
  CHECK_FALSE(is_shift_invariant(p.inner, 1));
  CHECK(phi_inverse(p) == testing::running_example());
}

TEST_CASE("orbits and classes of polygon edges") {
  CHECK(polygon_orbit(EdgeClass::of(Edge(1, 7), 3), 2, 3) == std::vector<Edge>{{1, 7}, {4, 10}});
  CHECK(polygon_orbit(EdgeClass::of(Edge(0, 4), 3), 2, 3).size() == 4);
  CHECK(class_of_polygon_edge(Edge(1, 9), 2, 3) == EdgeClass::of(Edge(9, 13), 3));
  CHECK(class_of_polygon_edge(Edge(3, 7), 2, 3) == EdgeClass::of(Edge(0, 4), 3));
}

TEST_CASE("phi is a bijection onto the periodic triangulations") {
  for (int n = 1; n <= 3; ++n) {
    const auto cyl = enumerate_cylinder(SurfaceDesc::cylinder(n, 2));
    const auto poly = enumerate_periodic_polygon(n, 2);
    REQUIRE(cyl.size() == poly.size());
    std::set<std::vector<Edge>> targets, images;
    for (const auto& p : poly) {
      targets.insert(p.edges);
      validate(p);
      CHECK(is_shift_invariant(p, n));
    }
    for (const auto& c : cyl) {
      const auto p = phi(c);
      CHECK(targets.count(p.inner.edges) == 1);
      CHECK(phi_inverse(p) == c);
      images.insert(p.inner.edges);
    }
    CHECK(images == targets);
  }
}

TEST_CASE("counts on the cylinder") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      const CountReport expected{n - 1, 2 * (n - 1), 2 * (2 * n - 1)};
      CHECK(count_report(t) == expected);
      CHECK(observed_counts(t) == expected);
    }
  }
}

TEST_CASE("other orders only on request") {
  const auto t = enumerate_cylinder(SurfaceDesc::cylinder(2, 3)).front();
  CHECK(code_of([&] { phi(t); }) == ErrorCode::InvalidInput);
  CHECK(phi(t, true).inner.surface.n == 12);
}

TEST_CASE("inverse rejects non-periodic input") {
  const auto t = enumerate_polygon(SurfaceDesc::polygon(8, 2)).front();
  bool found = false;
  for (const auto& u : enumerate_polygon(SurfaceDesc::polygon(8, 2))) {
    if (is_shift_invariant(u, 2)) continue;
    CHECK(code_of([&] { phi_inverse({u, 2}); }) == ErrorCode::NotPeriodic);
    found = true;
    break;
  }
  CHECK(found);
  CHECK(code_of([&] { phi_inverse({t, 3}); }) == ErrorCode::InvalidInput);
}
