#pragma once

// k-triangulations of the half-cylinder with n marked points, handled
// through their n-periodic lift to the integer cover.

#include <vector>

#include "multitri/free_sets.hpp"
#include "multitri/stars.hpp"
#include "multitri/surface.hpp"

namespace multitri {

struct CylinderTriangulation {
  SurfaceDesc surface;
  std::vector<EdgeClass> classes;  // sorted canonical classes

  bool contains(const EdgeClass& c) const;
  bool contains_lift_edge(const Edge& e) const;
  std::vector<EdgeClass> relevant_classes() const;

  /// Lift edges with both endpoints in [lo, hi], sorted.
  std::vector<Edge> lift(int lo, int hi) const;

  /// Cover neighbors of x sorted counterclockwise starting just after x
  /// (increasing above x, then increasing below x).
  std::vector<int> neighbors(int x) const;

  bool operator==(const CylinderTriangulation&) const = default;
};

/// k < length <= kn.
bool is_relevant_class(const EdgeClass& c, int k, int n);

/// Builds a sorted, canonical, duplicate-free class list.
CylinderTriangulation make_cylinder(const SurfaceDesc& cylinder, std::vector<EdgeClass> classes);

int default_cylinder_budget(int k);

class CylinderSpace {
 public:
  explicit CylinderSpace(const SurfaceDesc& cylinder);

  const SurfaceDesc& surface() const { return surface_; }
  const std::vector<EdgeClass>& relevant() const { return relevant_; }
  const std::vector<EdgeClass>& short_classes() const { return short_; }
  const FreeSetProblem& problem() const { return problem_; }

  int index_of(const EdgeClass& c) const;
  CylinderTriangulation triangulation(Mask relevant_set) const;
  Mask mask_of(const CylinderTriangulation& t) const;

 private:
  SurfaceDesc surface_;
  std::vector<EdgeClass> relevant_;
  std::vector<EdgeClass> short_;
  FreeSetProblem problem_;
};

void check_cylinder_budget(const SurfaceDesc& cylinder, const EnumerationOptions& options);

std::vector<Mask> enumerate_cylinder_masks(const CylinderSpace& space,
                                           const EnumerationOptions& options = {});

std::vector<CylinderTriangulation> enumerate_cylinder(const SurfaceDesc& cylinder,
                                                      const EnumerationOptions& options = {});

/// Throws StructureViolation when a triangulation invariant fails.
void validate(const CylinderTriangulation& t);

EdgeClass unique_spanning_class(const CylinderTriangulation& t);

struct FlaggedAngle {
  Angle angle;
  bool relevant = false;  // an edge is k-relevant with length < kn
};

/// Angles with apex in [0, n).  `window` is the lift radius in periods.
std::vector<FlaggedAngle> find_angles(const CylinderTriangulation& t, int window = -1);

/// The 2-star through an angle, assembled from the v-maximal edge crossing it.
KStar star_of_angle(const CylinderTriangulation& t, const Angle& angle);

/// The v-maximal edge [a,b] crossing the angle (k = 2 route).
Edge v_maximal_edge(const CylinderTriangulation& t, const Angle& angle);

/// Every k-star of the lift through the angle, by exhaustive search.
std::vector<KStar> lift_stars_through(const CylinderTriangulation& t, const Angle& angle);

/// Translate of s whose smallest vertex lies in [0, n).
KStar canonical_star(const KStar& s, int n);

/// Distinct stars of the lift up to translation, searched through every angle.
std::vector<KStar> star_classes(const CylinderTriangulation& t);

struct LiftingReport {
  int checked = 0;
  std::vector<Edge> addable;  // absent edges whose addition leaves the lift crossing-free

  bool ok() const { return addable.empty(); }
};

LiftingReport check_maximal_lifting(const CylinderTriangulation& t);

}  // namespace multitri
