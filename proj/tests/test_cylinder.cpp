#include "common.hpp"
#include "multitri/cylinder.hpp"

using namespace multitri;
using testing::code_of;

TEST_CASE("enumeration counts") {
  // Frozen from the orbit brute force in tests/oracles/periodic_count.py.
  const std::vector<std::pair<std::pair<int, int>, std::size_t>> expected{
      {{1, 2}, 1}, {{2, 2}, 4}, {{3, 2}, 36}, {{4, 2}, 400}, {{5, 2}, 4900}, {{2, 1}, 2}, {{3, 1}, 6}, {{2, 3}, 8}};
  for (const auto& [nk, count] : expected) {
    CAPTURE(nk.first);
    CAPTURE(nk.second);
    CHECK(enumerate_cylinder(SurfaceDesc::cylinder(nk.first, nk.second)).size() == count);
  }
}

TEST_CASE("enumerated triangulations satisfy the structural invariants") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      validate(t);
      CHECK(static_cast<int>(t.classes.size()) == 2 * (2 * n - 1));
      CHECK(static_cast<int>(t.relevant_classes().size()) == 2 * (n - 1));
      CHECK(unique_spanning_class(t).length() == 2 * n);
      CHECK(check_maximal_lifting(t).ok());
      for (const auto& c : t.classes) {
        CHECK(c.rep.a >= 0);
        CHECK(c.rep.a < n);
        CHECK(c.length() <= 2 * n);
      }
    }
  }
}

TEST_CASE("the running example") {
  const auto t = testing::running_example();
  validate(t);
  CHECK(t.relevant_classes().size() == 4);
  CHECK(unique_spanning_class(t).rep == Edge(1, 7));
  CHECK(t.contains_lift_edge(Edge(-2, 4)));
  CHECK_FALSE(t.contains_lift_edge(Edge(0, 3)));
  CHECK(t.neighbors(4) == std::vector<int>{5, 6, 7, 10, -2, -1, 0, 1, 2, 3});
}

TEST_CASE("every relevant angle lies in one star built from its v-maximal edge") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& t : enumerate_cylinder(SurfaceDesc::cylinder(n, 2))) {
      for (const auto& fa : find_angles(t)) {
        if (!fa.relevant) continue;
        const KStar s = star_of_angle(t, fa.angle);
        for (const Edge& e : s.edges()) CHECK(t.contains_lift_edge(e));
        CHECK(s.contains_edge(Edge(fa.angle.u, fa.angle.v)));
        CHECK(s.contains_edge(Edge(fa.angle.v, fa.angle.w)));
        const auto found = lift_stars_through(t, fa.angle);
        REQUIRE(found.size() == 1);
        CHECK(found.front() == s);
      }
      CHECK(static_cast<int>(star_classes(t).size()) == n - 1);
    }
  }
}

TEST_CASE("angles without a relevant edge are rejected") {
  const auto t = testing::running_example();
  bool seen = false;
  for (const auto& fa : find_angles(t)) {
    if (fa.relevant) continue;
    seen = true;
    CHECK(code_of([&] { star_of_angle(t, fa.angle); }) == ErrorCode::LengthPrecondition);
  }
  CHECK(seen);
  CHECK(code_of([&] { find_angles(t, 2); }) == ErrorCode::InvalidInput);
}

TEST_CASE("validation catches structural faults") {
  auto t = testing::running_example();
  auto missing = t;
  missing.classes.erase(missing.classes.begin());
  CHECK(code_of([&] { validate(missing); }) == ErrorCode::StructureViolation);
  auto crossing = make_cylinder(t.surface, {EdgeClass::of(Edge(0, 4), 3), EdgeClass::of(Edge(1, 5), 3)});
  CHECK(code_of([&] { validate(crossing); }) == ErrorCode::StructureViolation);
}

TEST_CASE("budget gate") {
  CHECK(code_of([] { enumerate_cylinder(SurfaceDesc::cylinder(6, 2)); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { enumerate_cylinder(SurfaceDesc::cylinder(4, 3)); }) == ErrorCode::TooLarge);
  CHECK(default_cylinder_budget(1) == 8);
}

TEST_CASE("space indexing round-trips") {
  const CylinderSpace space(SurfaceDesc::cylinder(3, 2));
  CHECK(space.relevant().size() == 3 * (6 - 2));
  CHECK(space.short_classes().size() == 6);
  const auto t = testing::running_example();
  CHECK(space.triangulation(space.mask_of(t)) == t);
  CHECK(space.index_of(EdgeClass::of(Edge(0, 1), 3)) == -1);
}
