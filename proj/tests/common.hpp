#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "multitri/cylinder.hpp"
#include "multitri/errors.hpp"

namespace testing {

template <class F>
multitri::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const multitri::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return multitri::ErrorCode::InvalidInput;
}

/// The running example on C_3: four relevant classes plus the six short ones.
inline multitri::CylinderTriangulation running_example() {
  using multitri::Edge;
  std::vector<multitri::EdgeClass> classes;
  for (Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 2), Edge(1, 3), Edge(2, 4), Edge(0, 4), Edge(1, 4),
                 Edge(1, 7), Edge(2, 7)})
    classes.push_back(multitri::EdgeClass::of(e, 3));
  return multitri::make_cylinder(multitri::SurfaceDesc::cylinder(3, 2), classes);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string golden(const std::string& name) { return read_file(std::string(GOLDEN_DIR) + "/" + name); }

}  // namespace testing
