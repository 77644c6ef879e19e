#include "doctest.h"
#include "multitri/stars.hpp"
#include "multitri/surface.hpp"

using namespace multitri;

TEST_CASE("star order steps by k") {
  const auto s = KStar::from_cyclic({0, 1, 2, 3, 4}, 2);
  CHECK(s.vertices == std::vector<int>{0, 2, 4, 1, 3});
  CHECK(s.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(s.contains_edge(Edge(3, 0)));
  CHECK_FALSE(s.contains_edge(Edge(0, 1)));
  CHECK(KStar::from_cyclic({0, 1, 2}, 1).edges().size() == 3);
}

TEST_CASE("stars compare by vertex set") {
  CHECK(KStar::from_cyclic({0, 1, 2, 3, 4}, 2) == KStar{2, {1, 3, 0, 2, 4}});
}

TEST_CASE("angles come from consecutive neighbors") {
  const auto angles = angles_at(0, {2, 3, 5});
  REQUIRE(angles.size() == 2);
  CHECK(angles[0] == Angle{3, 0, 2});
  CHECK(angles[1] == Angle{5, 0, 3});
  CHECK(angles_at(0, {4}).empty());
}

TEST_CASE("the 2-star of the pentagon is found through each of its angles") {
  // Complete graph on 5 vertices: its 2-star uses the five diagonals.
  const int m = 5;
  NeighborFn nbr = [](int v) {
    std::vector<int> out;
    for (int d = 1; d < 5; ++d) out.push_back((v + d) % 5);
    return out;
  };
  BetweenFn between = [m](int x, int y, int z) { return cyclically_between_mod(x, y, z, m); };
  const auto stars = stars_through_angle(2, Angle{3, 0, 2}, nbr, between);
  REQUIRE(stars.size() == 1);
  CHECK(stars[0].sorted_vertices() == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("bisector test at a star vertex") {
  const auto s = KStar::from_cyclic({0, 2, 4, 6, 8}, 2);
  BetweenFn between = [](int x, int y, int z) { return cyclically_between_mod(x, y, z, 10); };
  // The angle of s at 0 is spanned by 4 and 6.
  CHECK(bisects_star_angle(s, 0, 5, between));
  CHECK_FALSE(bisects_star_angle(s, 0, 3, between));
  CHECK_FALSE(bisects_star_angle(s, 0, 7, between));
}
