#include "multitri/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "multitri/cylinder.hpp"

namespace multitri {

ComplexReport analyze_complex(int n, int k, const EnumerationOptions& options) {
  const SurfaceDesc surface = SurfaceDesc::cylinder(n, k);
  check_cylinder_budget(surface, options);
  const CylinderSpace space(surface);
  const std::vector<Mask> facets = enumerate_cylinder_masks(space, options);

  ComplexReport r;
  r.n = n;
  r.k = k;
  r.facet_count = static_cast<int>(facets.size());
  std::unordered_map<Mask, int> ridges;
  if (!facets.empty()) r.min_facet_size = r.max_facet_size = std::popcount(facets.front());
  for (Mask f : facets) {
    const int size = std::popcount(f);
    r.min_facet_size = std::min(r.min_facet_size, size);
    r.max_facet_size = std::max(r.max_facet_size, size);
    for (Mask rest = f; rest; rest &= rest - 1) ++ridges[f & ~(rest & -rest)];
  }
  r.is_pure = r.min_facet_size == r.max_facet_size;
  r.facet_dimension = r.max_facet_size;
  r.ridge_count = static_cast<long long>(ridges.size());
  for (const auto& [_, count] : ridges) ++r.ridge_link_histogram[count];
  r.is_weak_pseudomanifold = r.is_pure && std::all_of(r.ridge_link_histogram.begin(), r.ridge_link_histogram.end(),
                                                      [](const auto& kv) { return kv.first == 2; });
  return r;
}

}  // namespace multitri
