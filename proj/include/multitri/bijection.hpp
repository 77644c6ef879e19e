#pragma once

// Cylinder k-triangulations versus rotation-invariant triangulations of the
// 2kn-gon: vertex x of the cover goes to x mod 2kn.

#include <vector>

#include "multitri/cylinder.hpp"
#include "multitri/polygon.hpp"

namespace multitri {

struct PeriodicPolygonTriangulation {
  PolygonTriangulation inner;  // on the 2kn-gon
  int period = 1;              // n

  bool operator==(const PeriodicPolygonTriangulation&) const = default;
};

bool is_shift_invariant(const PolygonTriangulation& t, int shift);

/// Distinct polygon edges covered by the lift of a class.
std::vector<Edge> polygon_orbit(const EdgeClass& c, int k, int n);

/// Cover representative of a 2kn-gon edge, as a class of period n.
EdgeClass class_of_polygon_edge(const Edge& e, int k, int n);

/// k = 2 unless `any_k` is set.  Raises StructureViolation when the image is
/// not a maximal (k+1)-crossing-free set.
PeriodicPolygonTriangulation phi(const CylinderTriangulation& t, bool any_k = false);

/// Raises NotPeriodic unless p is invariant under the shift by its period.
CylinderTriangulation phi_inverse(const PeriodicPolygonTriangulation& p);

struct CountReport {
  int stars = 0;
  int relevant = 0;
  int total = 0;

  bool operator==(const CountReport&) const = default;
};

/// Observed counts; stars are distinct star classes of the lift.
CountReport observed_counts(const CylinderTriangulation& t);

/// k = 2 counts asserted against (n-1, 2(n-1), 2(2n-1)).
CountReport count_report(const CylinderTriangulation& t);

/// n-periodic k-triangulations of the 2kn-gon, enumerated over shift orbits
/// of polygon edges (no cylinder machinery involved).
std::vector<PolygonTriangulation> enumerate_periodic_polygon(int n, int k,
                                                             const EnumerationOptions& options = {});

}  // namespace multitri
