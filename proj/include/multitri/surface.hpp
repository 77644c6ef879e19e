#pragma once

// Vertices, edges and crossings on the convex polygon and on the universal
// cover of the half-cylinder.  Cover vertices are plain integers; the cover
// is closed into a cycle by a point at infinity, so a finite vertex set is
// cyclically ordered by its increasing order.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace multitri {

enum class SurfaceKind { Polygon, Cylinder };

struct SurfaceDesc {
  SurfaceKind kind = SurfaceKind::Polygon;
  int n = 0;  // polygon vertices, or marked points on the cylinder
  int k = 1;  // order of the multitriangulation

  static SurfaceDesc polygon(int n, int k);
  static SurfaceDesc cylinder(int n, int k);

  bool is_polygon() const { return kind == SurfaceKind::Polygon; }
  bool operator==(const SurfaceDesc&) const = default;
};

std::string to_string(const SurfaceDesc& s);

/// Unordered vertex pair, stored with a < b.
struct Edge {
  int a = 0;
  int b = 1;

  Edge() = default;
  Edge(int u, int v);

  int length() const { return b - a; }
  Edge translated(int shift) const { return Edge(a + shift, b + shift); }
  bool has_endpoint(int v) const { return a == v || b == v; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Length of a polygon edge in the cyclic metric of the m-gon.
int cyclic_length(const Edge& e, int m);

/// Translation orbit {rep + t*n} of a cover edge; rep.a lies in [0, n).
struct EdgeClass {
  Edge rep;
  int period = 1;

  EdgeClass() = default;
  static EdgeClass of(const Edge& e, int n);

  int length() const { return rep.length(); }
  Edge member(int t) const { return rep.translated(t * period); }
  bool contains(const Edge& e) const;

  auto operator<=>(const EdgeClass&) const = default;
};

std::string to_string(const EdgeClass& c);

/// Strict interleaving of endpoints.  Valid both for polygon labels and for
/// cover integers; edges sharing an endpoint never cross.
bool crosses(const Edge& e, const Edge& f);

/// Surface-checked variant: polygon edges must have endpoints in [0, n).
bool crosses(const Edge& e, const Edge& f, const SurfaceDesc& surface);

/// y lies strictly inside the counterclockwise arc from x to z (integers
/// closed by the point at infinity).
bool cyclically_between(long long x, long long y, long long z);

/// Same predicate on residues modulo m.
bool cyclically_between_mod(int x, int y, int z, int m);

/// Searches `edges` for `size` pairwise crossing edges, at least one of which
/// satisfies `anchor` (when given).  Returns the crossing in input order.
std::optional<std::vector<Edge>> find_crossing(
    std::span<const Edge> edges, int size,
    const std::function<bool(const Edge&)>& anchor = {});

/// Every `size`-subset of pairwise crossing edges, as ascending index lists.
/// When `anchor` is given only cliques whose first (lowest-index) member
/// satisfies it are returned.
std::vector<std::vector<int>> enumerate_crossings(
    std::span<const Edge> edges, int size,
    const std::function<bool(const Edge&)>& anchor = {});

/// True iff some k+1 of `edges` pairwise cross.  Edges too short to take
/// part in a (k+1)-crossing are skipped.
bool has_k_plus_1_crossing(std::span<const Edge> edges, int k, const SurfaceDesc& surface);

/// Default translate radius of the periodic window.
int default_window_radius(int k);

/// Finite truncation of the lift: {rep + t*n : |t| <= radius} per class.
/// Rejects classes longer than k*n with EdgeTooLong.
std::vector<Edge> periodic_crossing_window(std::span<const EdgeClass> classes, int k, int n,
                                           int radius = -1);

/// A (k+1)-crossing of the lifted class set, one edge anchored in [0, n).
std::optional<std::vector<Edge>> find_periodic_crossing(std::span<const EdgeClass> classes, int k,
                                                        int n, int radius = -1);

bool is_periodic_crossing_free(std::span<const EdgeClass> classes, int k, int n,
                               int radius = -1);

}  // namespace multitri

template <>
struct std::hash<multitri::Edge> {
  std::size_t operator()(const multitri::Edge& e) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(e.a) << 32) ^ static_cast<unsigned>(e.b));
  }
};
