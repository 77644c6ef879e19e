#pragma once

// k-stars and angles, shared by the polygon and the cylinder modules.  Both
// are phrased over an abstract vertex type (residues on the polygon, cover
// integers on the cylinder) given by a neighbor oracle and a cyclic-order
// predicate.

#include <functional>
#include <vector>

#include "multitri/surface.hpp"

namespace multitri {

/// A k-star given by its 2k+1 vertices in star order s_0..s_{2k}, where
/// s_j = z_{kj mod (2k+1)} for the cyclically sorted vertices z.
struct KStar {
  int k = 1;
  std::vector<int> vertices;

  /// Builds the star on cyclically ordered vertices z_0 < ... < z_{2k},
  /// starting the star order at z_0.
  static KStar from_cyclic(const std::vector<int>& z, int k);

  std::vector<Edge> edges() const;
  std::vector<int> sorted_vertices() const;
  bool contains_edge(const Edge& e) const;

  bool operator==(const KStar& other) const { return sorted_vertices() == other.sorted_vertices(); }
};

/// An angle at apex v: edges [u,v], [v,w] with u < v < w cyclically and no
/// edge at v ending strictly inside the arc from w to u.
struct Angle {
  int u = 0;
  int v = 0;
  int w = 0;

  auto operator<=>(const Angle&) const = default;
};

using NeighborFn = std::function<std::vector<int>(int)>;
using BetweenFn = std::function<bool(int, int, int)>;

/// Angles at apex v given its neighbors sorted in counterclockwise order
/// starting just after v.
std::vector<Angle> angles_at(int v, const std::vector<int>& ccw_neighbors);

/// Every k-star whose edges are all present (per `neighbors`) and which
/// contains the angle's two edges as the consecutive star edges at v.
std::vector<KStar> stars_through_angle(int k, const Angle& angle, const NeighborFn& neighbors,
                                       const BetweenFn& between);

/// True iff x lies inside the angle of `star` at its vertex r, i.e. an edge
/// [r, x] would bisect that angle.
bool bisects_star_angle(const KStar& star, int r, int x, const BetweenFn& between);

}  // namespace multitri
