#pragma once

// Staircase and chevron pipe dreams.  Tiles are keyed by integer (row, col)
// labels; rows grow upward, columns grow rightward.  Labels are 1-based
// polygon vertices: tile (r, c) stands for the edge {r-1, c-1} mod m of the
// 0-indexed m-gon.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multitri/polygon.hpp"

namespace multitri {

enum class TileKind {
  Bump,
  Cross,
  HalfUp,     // single strand, left side to top side
  HalfRight,  // single strand, bottom side to right side
};

/// Bump-like tiles (full or half) print as B.
bool is_bump_like(TileKind kind);

enum class Shape { Staircase, Chevron };

using Cell = std::pair<int, int>;  // (row label, col label)

struct PipeDream {
  Shape shape = Shape::Staircase;
  int m = 0;  // polygon size of the source triangulation
  int k = 1;
  std::map<Cell, TileKind> tiles;

  std::optional<TileKind> at(int row, int col) const;
  bool operator==(const PipeDream&) const = default;
};

/// Polygon edge (0-indexed) carried by the tile at (row, col).
Edge tile_edge(int row, int col, int m);

enum class Side { Left, Bottom, Top, Right };

struct BoundaryPoint {
  Side side = Side::Left;
  int row = 0;
  int col = 0;

  bool operator==(const BoundaryPoint&) const = default;
};

struct PipeStep {
  int row = 0;
  int col = 0;
  bool horizontal = false;  // entered through the left side

  bool operator==(const PipeStep&) const = default;
};

struct PipePath {
  BoundaryPoint entry;
  BoundaryPoint exit;
  std::vector<PipeStep> visited;
};

struct TraceResult {
  std::vector<PipePath> pipes;   // ordered along the SW boundary, NW to SE
  std::vector<int> permutation;  // 1-based rank of each pipe's exit along the NE boundary
  std::map<std::pair<int, int>, int> crossings;  // pipe index pair -> crossing tiles

  bool reduced() const;
  /// Every pair of pipes crosses exactly once.
  bool each_pair_once() const;
  int crossing_count(int p, int q) const;
};

/// Raises MalformedShape on a dangling strand or a strand leaving through a gap.
TraceResult trace_pipes(const PipeDream& p);

/// pi_{m,k} = [1..k, m-k, m-k-1, ..., k+1].
std::vector<int> staircase_permutation(int m, int k);

PipeDream staircase_from_triangulation(const PolygonTriangulation& t);

/// Staircase of the given shape with every free box set from `bumps`, in
/// row-major order (top row first); diagonal boxes are always HalfUp.
PipeDream staircase_from_bits(int m, int k, const std::vector<bool>& bumps);

/// Boxes of the (m, k) staircase that are not forced, top row first.
std::vector<Cell> staircase_free_cells(int m, int k);

PipeDream chevron_from_staircase(const PipeDream& staircase);

/// Intermediate pictures of the chevron construction, steps 1 through 5.
/// Moved pieces are drawn beside the static part, as in a hand drawing.
std::vector<std::string> chevron_steps_ascii(const PipeDream& staircase);

/// Bump tiles back to polygon edges, plus edges too short to carry a tile.
PolygonTriangulation triangulation_from_pipedream(const PipeDream& p);

/// Tile kinds agree across label pairs related by a shift of the vertices by n.
bool is_n_periodic(const PipeDream& p, int n);

/// Symmetry under (r, c) -> (c + m/2, r - m/2).
bool is_reflection_symmetric(const PipeDream& p);

/// Cell whose tile carries the polygon edge e.
std::optional<Cell> cell_of_edge(const PipeDream& p, const Edge& e);

/// The edge at the unique tile where the two strands through e's bump cross.
Edge pipe_crossing_partner(const PipeDream& p, const Edge& e);

std::string render_ascii(const PipeDream& p);
PipeDream parse_ascii(const std::string& text);

}  // namespace multitri
