#pragma once

// Facets and ridges of the complex whose vertices are relevant classes and
// whose facets are the relevant parts of cylinder k-triangulations.

#include <map>
#include <string>

#include "multitri/free_sets.hpp"

namespace multitri {

struct ComplexReport {
  int n = 0;
  int k = 0;
  int facet_count = 0;
  // Facet cardinality (number of relevant classes), which is what the
  // "dimension 2(n-1)" statement counts; the simplicial dimension is one less.
  int facet_dimension = 0;
  int min_facet_size = 0;
  int max_facet_size = 0;
  bool is_pure = false;
  std::map<int, int> ridge_link_histogram;  // facets per ridge -> number of ridges
  long long ridge_count = 0;
  bool is_weak_pseudomanifold = false;
};

ComplexReport analyze_complex(int n, int k, const EnumerationOptions& options = {});

}  // namespace multitri
