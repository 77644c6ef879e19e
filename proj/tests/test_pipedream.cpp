#include <algorithm>

#include "common.hpp"
#include "multitri/bijection.hpp"
#include "multitri/pipedream.hpp"
#include "oracle.hpp"

using namespace multitri;
using testing::code_of;

namespace {

PipeDream running_staircase() { return staircase_from_triangulation(phi(testing::running_example()).inner); }

Edge shifted(const Edge& e, int s, int m) { return Edge((e.a + s) % m, (e.b + s) % m); }

bool invariant(const PolygonTriangulation& t, int s) {
  return std::all_of(t.edges.begin(), t.edges.end(), [&](const Edge& e) { return t.contains(shifted(e, s, t.surface.n)); });
}

}  // namespace

TEST_CASE("boundary permutation") {
  CHECK(staircase_permutation(8, 2) == std::vector<int>{1, 2, 6, 5, 4, 3});
  CHECK(staircase_permutation(6, 1) == std::vector<int>{1, 5, 4, 3, 2});
  CHECK(staircase_free_cells(8, 2).size() == 15);
}

TEST_CASE("octagon staircases are reduced pipe dreams for the boundary permutation") {
  const auto pi = staircase_permutation(8, 2);
  for (const auto& t : enumerate_polygon(SurfaceDesc::polygon(8, 2))) {
    const auto p = staircase_from_triangulation(t);
    const auto trace = trace_pipes(p);
    CHECK(trace.permutation == pi);
    CHECK(trace.reduced());
    CHECK(triangulation_from_pipedream(p) == t);
  }
}

TEST_CASE("reduced staircase fillings are counted by the octagon triangulations") {
  const auto pi = staircase_permutation(8, 2);
  CHECK(oracle::count_reduced_staircase(6, pi) == 84);
  const int free = static_cast<int>(staircase_free_cells(8, 2).size());
  int reduced = 0;
  for (int s = 0; s < (1 << free); ++s) {
    std::vector<bool> bumps(free);
    for (int i = 0; i < free; ++i) bumps[i] = (s >> i) & 1;
    const auto trace = trace_pipes(staircase_from_bits(8, 2, bumps));
    if (trace.reduced() && trace.permutation == pi) ++reduced;
  }
  CHECK(reduced == 84);
}

TEST_CASE("staircase and chevron pictures of the running example") {
  const auto s = running_staircase();
  CHECK(render_ascii(s) == testing::golden("staircase_12_2.txt"));
  const auto steps = chevron_steps_ascii(s);
  REQUIRE(steps.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CAPTURE(i + 1);
    CHECK(steps[i] == testing::golden("chevron_step" + std::to_string(i + 1) + ".txt"));
  }
  const auto c = chevron_from_staircase(s);
  CHECK(render_ascii(c) == testing::golden("chevron_12_2.txt"));
  const auto crosses = std::count_if(c.tiles.begin(), c.tiles.end(),
                                     [](const auto& kv) { return kv.second == TileKind::Cross; });
  CHECK(crosses == 28);
}

TEST_CASE("ascii round-trip infers half tiles") {
  for (const auto& p : {running_staircase(), chevron_from_staircase(running_staircase())}) {
    CHECK(parse_ascii(render_ascii(p)) == p);
  }
}

TEST_CASE("periodic chevrons: pipes cross once, symmetric, and label periodic") {
  for (const auto& c : enumerate_cylinder(SurfaceDesc::cylinder(3, 2))) {
    const auto t = phi(c).inner;
    const auto chevron = chevron_from_staircase(staircase_from_triangulation(t));
    const auto trace = trace_pipes(chevron);
    CHECK(trace.each_pair_once());
    CHECK(is_n_periodic(chevron, 3));
    CHECK(is_reflection_symmetric(chevron));
    CHECK(triangulation_from_pipedream(chevron) == t);
  }
}

TEST_CASE("periodicity and symmetry track shift invariance on the octagon") {
  for (const auto& t : enumerate_polygon(SurfaceDesc::polygon(8, 2))) {
    const auto chevron = chevron_from_staircase(staircase_from_triangulation(t));
    CHECK(trace_pipes(chevron).each_pair_once());
    CHECK(is_n_periodic(chevron, 2) == invariant(t, 2));
    CHECK(is_reflection_symmetric(chevron) == invariant(t, 4));
  }
}

TEST_CASE("crossing partner of a bump") {
  const auto chevron = chevron_from_staircase(running_staircase());
  const auto t = phi(testing::running_example()).inner;
  const Edge e(2, 7);
  REQUIRE(t.contains(e));
  const Edge partner = pipe_crossing_partner(chevron, e);
  CHECK_FALSE(t.contains(partner));
  CHECK(code_of([&] { pipe_crossing_partner(chevron, Edge(0, 5)); }) == ErrorCode::NotInTriangulation);
}

TEST_CASE("shape errors") {
  const auto odd = staircase_from_triangulation(enumerate_polygon(SurfaceDesc::polygon(9, 2)).front());
  CHECK(code_of([&] { chevron_from_staircase(odd); }) == ErrorCode::ShapeMismatch);
  const auto chevron = chevron_from_staircase(running_staircase());
  CHECK(code_of([&] { chevron_from_staircase(chevron); }) == ErrorCode::ShapeMismatch);
  auto broken = running_staircase();
  broken.tiles[{12, 1}] = TileKind::HalfUp;
  CHECK(code_of([&] { trace_pipes(broken); }) == ErrorCode::MalformedShape);
  CHECK(code_of([] { parse_ascii("shape=staircase n=8\nB\n"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_ascii("shape=staircase n=8 k=2 row0=8 col0=1\nBQ\n"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { staircase_from_bits(8, 2, std::vector<bool>(3)); }) == ErrorCode::InvalidInput);
}
