#pragma once

// Orbit flips on cylinder 2-triangulations (equivalently on n-periodic
// 2-triangulations of the 4n-gon) and the graph they generate.

#include <string>
#include <utility>
#include <vector>

#include "multitri/cylinder.hpp"

namespace multitri {

enum class FlipBackend {
  Polygon,    // common bisector of the two stars in the 4n-gon
  PipeDream,  // crossing tile of the two strands in the chevron
  Both,       // run both and require agreement
};

struct OrbitFlip {
  CylinderTriangulation result;
  EdgeClass added;
};

OrbitFlip orbit_flip(const CylinderTriangulation& t, const EdgeClass& e,
                     FlipBackend backend = FlipBackend::Polygon);

/// Every relevant class g with (T \ {e}) + {g} a triangulation, g != e.
std::vector<EdgeClass> flip_completions(const CylinderTriangulation& t, const EdgeClass& e);

struct FlipGraphEdge {
  int from = 0;
  int to = 0;
  EdgeClass removed;  // class of `from` replaced on the way to `to`
  EdgeClass added;
};

struct FlipGraph {
  int n = 0;
  std::vector<CylinderTriangulation> vertices;
  std::vector<FlipGraphEdge> edges;  // from < to, sorted
  std::vector<int> degrees;

  bool is_regular(int degree) const;
  int component_count() const;
};

FlipGraph build_flip_graph(int n, const EnumerationOptions& options = {},
                           FlipBackend backend = FlipBackend::Polygon);

std::string to_dot(const FlipGraph& g);

}  // namespace multitri
