#include <random>

#include "doctest.h"
#include "multitri/errors.hpp"
#include "multitri/surface.hpp"
#include "oracle.hpp"

using namespace multitri;

TEST_CASE("edges normalize and measure") {
  CHECK(Edge(5, 2) == Edge(2, 5));
  CHECK(Edge(2, 5).length() == 3);
  CHECK(cyclic_length(Edge(0, 7), 8) == 1);
  CHECK(cyclic_length(Edge(1, 5), 8) == 4);
  CHECK_THROWS_AS(Edge(3, 3), Error);
}

TEST_CASE("surface descriptors reject degenerate input") {
  CHECK_THROWS_AS(SurfaceDesc::polygon(2, 1), Error);
  CHECK_THROWS_AS(SurfaceDesc::cylinder(0, 2), Error);
  CHECK_THROWS_AS(SurfaceDesc::cylinder(3, 0), Error);
  CHECK(SurfaceDesc::polygon(6, 2).is_polygon());
}

TEST_CASE("edge classes are canonical") {
  const auto c = EdgeClass::of(Edge(7, 11), 3);
  CHECK(c.rep == Edge(1, 5));
  CHECK(c.contains(Edge(-2, 2)));
  CHECK_FALSE(c.contains(Edge(0, 4)));
  CHECK(c.member(2) == Edge(7, 11));
}

TEST_CASE("crossing is strict interleaving") {
  CHECK(crosses(Edge(0, 2), Edge(1, 3)));
  CHECK_FALSE(crosses(Edge(0, 2), Edge(2, 4)));
  CHECK_FALSE(crosses(Edge(0, 5), Edge(1, 3)));
  CHECK(crosses(Edge(-4, 2), Edge(-1, 10)));
  const auto hex = SurfaceDesc::polygon(6, 1);
  CHECK_THROWS_AS(crosses(Edge(0, 6), Edge(1, 3), hex), Error);
}

TEST_CASE("cyclic betweenness") {
  CHECK(cyclically_between(1, 2, 3));
  CHECK_FALSE(cyclically_between(1, 5, 3));
  CHECK(cyclically_between(5, 7, 2));   // wraps through infinity
  CHECK(cyclically_between(5, -3, 2));
  CHECK(cyclically_between_mod(10, 1, 3, 12));
  CHECK_FALSE(cyclically_between_mod(10, 5, 3, 12));
}

TEST_CASE("crossing search agrees with brute force") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> vertex(0, 11);
  for (int round = 0; round < 200; ++round) {
    std::vector<Edge> edges;
    std::vector<oracle::Pair> pairs;
    while (edges.size() < 9) {
      int a = vertex(rng), b = vertex(rng);
      if (a == b) continue;
      Edge e(a, b);
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
      edges.push_back(e);
      pairs.emplace_back(e.a, e.b);
    }
    for (int size = 2; size <= 4; ++size) {
      const bool expected = oracle::has_crossing(pairs, size);
      CHECK(find_crossing(edges, size).has_value() == expected);
      CHECK(enumerate_crossings(edges, size).empty() == !expected);
    }
  }
}

TEST_CASE("enumerated crossings are pairwise crossing and anchored") {
  std::vector<Edge> edges{{0, 4}, {1, 5}, {2, 6}, {3, 7}, {-1, 3}};
  auto all = enumerate_crossings(edges, 3);
  for (const auto& c : all) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(crosses(edges[c[i]], edges[c[j]]));
  }
  auto anchored = enumerate_crossings(edges, 3, [](const Edge& e) { return e.a == 0; });
  CHECK_FALSE(anchored.empty());
  for (const auto& c : anchored) CHECK(edges[c.front()].a == 0);
}

TEST_CASE("periodic window and crossings") {
  // [0,4] and its translate [3,7] with [1,5] and [2,6] cross on C_3.
  std::vector<EdgeClass> classes{EdgeClass::of(Edge(0, 4), 3), EdgeClass::of(Edge(1, 5), 3)};
  CHECK_FALSE(is_periodic_crossing_free(classes, 2, 3));
  std::vector<EdgeClass> safe{EdgeClass::of(Edge(0, 6), 3)};
  CHECK(is_periodic_crossing_free(safe, 2, 3));
  std::vector<EdgeClass> too_long{EdgeClass::of(Edge(0, 7), 3)};
  CHECK_THROWS_AS(periodic_crossing_window(too_long, 2, 3), Error);
  auto window = periodic_crossing_window(safe, 2, 3, 1);
  CHECK(window.size() == 3);
}

TEST_CASE("short edges never enter a crossing test") {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  CHECK_FALSE(has_k_plus_1_crossing(edges, 1, SurfaceDesc::polygon(5, 1)));
  std::vector<Edge> x{{0, 2}, {1, 3}};
  CHECK(has_k_plus_1_crossing(x, 1, SurfaceDesc::polygon(5, 1)));
}
