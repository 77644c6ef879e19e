#include "doctest.h"
#include "multitri/complex.hpp"

using namespace multitri;

TEST_CASE("the complex is a pure weak pseudomanifold") {
  const std::vector<int> facets{1, 4, 36, 400};
  for (int n = 1; n <= 4; ++n) {
    const auto r = analyze_complex(n, 2);
    CHECK(r.facet_count == facets[n - 1]);
    CHECK(r.is_pure);
    CHECK(r.facet_dimension == 2 * (n - 1));
    if (n > 1) {
      CHECK(r.is_weak_pseudomanifold);
      CHECK(r.ridge_link_histogram == std::map<int, int>{{2, static_cast<int>(r.ridge_count)}});
      CHECK(r.ridge_count == static_cast<long long>(r.facet_count) * r.facet_dimension / 2);
    }
  }
}

TEST_CASE("other orders") {
  const auto r = analyze_complex(3, 1);
  CHECK(r.facet_count == 6);
  CHECK(r.is_pure);
  CHECK(r.facet_dimension == 2);
}
