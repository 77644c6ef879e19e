#pragma once

// k-triangulations of the convex m-gon.  Vertices are 0..m-1 in
// counterclockwise order.

#include <utility>
#include <vector>

#include "multitri/free_sets.hpp"
#include "multitri/stars.hpp"
#include "multitri/surface.hpp"

namespace multitri {

struct PolygonTriangulation {
  SurfaceDesc surface;
  std::vector<Edge> edges;  // sorted, includes short and hull edges

  bool contains(const Edge& e) const;
  bool operator==(const PolygonTriangulation&) const = default;
};

/// Cyclic length > k.
bool is_relevant_polygon_edge(const Edge& e, const SurfaceDesc& polygon);

/// k(2m-2k-1) for m >= 2k+1, otherwise every edge.
int polygon_edge_count(int m, int k);

/// Largest n enumerated without an explicit override.
int default_polygon_budget(int k);

/// Relevant edges as bit positions together with their (k+1)-crossings.
class PolygonSpace {
 public:
  explicit PolygonSpace(const SurfaceDesc& polygon);

  const SurfaceDesc& surface() const { return surface_; }
  const std::vector<Edge>& relevant() const { return relevant_; }
  const std::vector<Edge>& short_edges() const { return short_; }
  const FreeSetProblem& problem() const { return problem_; }

  /// Bit position of a relevant edge, -1 otherwise.
  int index_of(const Edge& e) const;
  PolygonTriangulation triangulation(Mask relevant_set) const;
  Mask mask_of(const PolygonTriangulation& t) const;

 private:
  SurfaceDesc surface_;
  std::vector<Edge> relevant_;
  std::vector<Edge> short_;
  std::vector<int> index_;  // a*m + b -> bit
  FreeSetProblem problem_;
};

/// Raises TooLarge when the surface is over budget.
void check_polygon_budget(const SurfaceDesc& polygon, const EnumerationOptions& options);

std::vector<Mask> enumerate_polygon_masks(const PolygonSpace& space,
                                          const EnumerationOptions& options = {});

std::vector<PolygonTriangulation> enumerate_polygon(const SurfaceDesc& polygon,
                                                    const EnumerationOptions& options = {});

/// Throws StructureViolation unless t is a maximal (k+1)-crossing-free set
/// with every short edge present.
void validate(const PolygonTriangulation& t);

/// Neighbors of v sorted counterclockwise starting just after v.
std::vector<int> polygon_neighbors(const PolygonTriangulation& t, int v);

std::vector<KStar> star_decomposition(const PolygonTriangulation& t);

/// The two stars of t having e as an edge.
std::pair<KStar, KStar> stars_containing(const PolygonTriangulation& t, const Edge& e);

/// Replaces e by the common bisector of its two stars.
std::pair<PolygonTriangulation, Edge> polygon_flip(const PolygonTriangulation& t, const Edge& e);

}  // namespace multitri
