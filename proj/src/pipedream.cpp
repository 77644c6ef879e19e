#include "multitri/pipedream.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

using TileMap = std::map<Cell, TileKind>;

int mod(int x, int m) { return ((x % m) + m) % m; }

TileKind transposed(TileKind kind) {
  switch (kind) {
    case TileKind::HalfUp: return TileKind::HalfRight;
    case TileKind::HalfRight: return TileKind::HalfUp;
    default: return kind;
  }
}

// Both cut-and-glue moves send (r, c) to (c, r - m): a reflection in the
// anti-diagonal followed by a translation, which keeps the edge label.
Cell moved_cell(const Cell& cell, int m) { return {cell.second, cell.first - m}; }

TileMap moved(const TileMap& piece, int m) {
  TileMap out;
  for (const auto& [cell, kind] : piece) out.emplace(moved_cell(cell, m), transposed(kind));
  return out;
}

TileMap shifted(const TileMap& piece, int drow, int dcol) {
  TileMap out;
  for (const auto& [cell, kind] : piece) out.emplace(Cell{cell.first + drow, cell.second + dcol}, kind);
  return out;
}

void merge_into(TileMap& into, const TileMap& piece) {
  for (const auto& [cell, kind] : piece) {
    if (!into.emplace(cell, kind).second) {
      raise(ErrorCode::StructureViolation, "glued pieces overlap at (" + std::to_string(cell.first) + "," +
                                               std::to_string(cell.second) + ")");
    }
  }
}

struct Bounds {
  int top, bottom, left, right;
};

Bounds bounds_of(const TileMap& tiles) {
  Bounds b{tiles.begin()->first.first, tiles.begin()->first.first, tiles.begin()->first.second,
           tiles.begin()->first.second};
  for (const auto& [cell, _] : tiles) {
    b.top = std::max(b.top, cell.first);
    b.bottom = std::min(b.bottom, cell.first);
    b.left = std::min(b.left, cell.second);
    b.right = std::max(b.right, cell.second);
  }
  return b;
}

std::string grid_text(const TileMap& tiles, const std::string& header) {
  std::ostringstream os;
  if (tiles.empty()) {
    os << header << " row0=0 col0=0\n";
    return os.str();
  }
  const Bounds b = bounds_of(tiles);
  os << header << " row0=" << b.top << " col0=" << b.left << "\n";
  for (int r = b.top; r >= b.bottom; --r) {
    for (int c = b.left; c <= b.right; ++c) {
      auto it = tiles.find({r, c});
      os << (it == tiles.end() ? '.' : (is_bump_like(it->second) ? 'B' : 'X'));
    }
    os << "\n";
  }
  return os.str();
}

std::string shape_name(Shape s) { return s == Shape::Staircase ? "staircase" : "chevron"; }

// Pieces of the chevron construction, all at their original labels.
struct Pieces {
  TileMap remainder;  // pruned staircase without pyramid and triangle
  TileMap pyramid;
  TileMap triangle;
};

Pieces cut(const PipeDream& s) {
  const int m = s.m;
  const int k = s.k;
  if (s.shape != Shape::Staircase) raise(ErrorCode::ShapeMismatch, "chevron construction needs a staircase");
  if (m % 2 != 0 || m < 2 * k + 2) {
    raise(ErrorCode::ShapeMismatch, "chevron construction needs an even polygon with m >= 2k+2");
  }
  std::set<Cell> expected;
  for (int r = m; r >= k + 1; --r) {
    for (int c = 1; c <= r - k; ++c) expected.insert({r, c});
  }
  std::set<Cell> present;
  for (const auto& [cell, _] : s.tiles) present.insert(cell);
  if (present != expected) raise(ErrorCode::ShapeMismatch, "tiles do not form the (m,k) staircase");

  // Grid position: R counts rows from the top, C = column label.
  auto grid_row = [m](int r) { return m + 1 - r; };

  Pieces p;
  for (const auto& [cell, kind] : s.tiles) {
    const int diag = grid_row(cell.first) + cell.second;
    if (diag <= k + 1 && !is_bump_like(kind)) {
      raise(ErrorCode::ShapeMismatch, "the NW corner must hold the k pruned strands");
    }
    if (diag <= k) continue;
    p.remainder.emplace(cell, diag == k + 1 ? TileKind::HalfRight : kind);
  }

  // Largest inverted pyramid hanging from the top row, right of column k+1.
  int height = 0;
  int top_width = 0;
  for (int row = 1;; ++row) {
    const int left = k + 1 + row;
    const int right = m - k + 1 - row;
    if (left > right) break;
    if (row == 1) top_width = right - left + 1;
    height = row;
    for (int c = left; c <= right; ++c) {
      const Cell cell{m + 1 - row, c};
      p.pyramid.emplace(cell, p.remainder.at(cell));
      p.remainder.erase(cell);
    }
  }
  if (top_width != m - 2 * k - 1 || height != m / 2 - k) {
    raise(ErrorCode::ShapeMismatch, "inverted pyramid has top width " + std::to_string(top_width) +
                                        ", expected " + std::to_string(m - 2 * k - 1));
  }
  // NE triangle of what is left: rows 1..height, columns k+1..k+row.
  for (int row = 1; row <= height; ++row) {
    for (int c = k + 1; c <= k + row; ++c) {
      const Cell cell{m + 1 - row, c};
      p.triangle.emplace(cell, p.remainder.at(cell));
      p.remainder.erase(cell);
    }
  }
  return p;
}

}  // namespace

bool is_bump_like(TileKind kind) { return kind != TileKind::Cross; }

std::optional<TileKind> PipeDream::at(int row, int col) const {
  auto it = tiles.find({row, col});
  if (it == tiles.end()) return std::nullopt;
  return it->second;
}

Edge tile_edge(int row, int col, int m) { return Edge(mod(row - 1, m), mod(col - 1, m)); }

bool TraceResult::reduced() const {
  return std::all_of(crossings.begin(), crossings.end(), [](const auto& kv) { return kv.second <= 1; });
}

int TraceResult::crossing_count(int p, int q) const {
  auto it = crossings.find({std::min(p, q), std::max(p, q)});
  return it == crossings.end() ? 0 : it->second;
}

bool TraceResult::each_pair_once() const {
  const int count = static_cast<int>(pipes.size());
  for (int p = 0; p < count; ++p) {
    for (int q = p + 1; q < count; ++q) {
      if (crossing_count(p, q) != 1) return false;
    }
  }
  return true;
}

TraceResult trace_pipes(const PipeDream& pd) {
  const auto& tiles = pd.tiles;
  auto has = [&](int r, int c) { return tiles.count({r, c}) > 0; };
  auto accepts = [](TileKind kind, bool from_left) {
    return from_left ? kind != TileKind::HalfRight : kind != TileKind::HalfUp;
  };
  // Position along a boundary running NW to SE, in half units.
  auto key = [](const BoundaryPoint& p) {
    switch (p.side) {
      case Side::Left: return 2 * p.col - 1 - 2 * p.row;
      case Side::Bottom: return 2 * p.col - 2 * p.row + 1;
      case Side::Top: return 2 * p.col - 2 * p.row - 1;
      case Side::Right: return 2 * p.col + 1 - 2 * p.row;
    }
    return 0;
  };

  std::vector<BoundaryPoint> entries;
  for (const auto& [cell, kind] : tiles) {
    const auto [r, c] = cell;
    if (!has(r, c - 1) && accepts(kind, true)) entries.push_back({Side::Left, r, c});
    if (!has(r - 1, c) && accepts(kind, false)) entries.push_back({Side::Bottom, r, c});
  }
  std::sort(entries.begin(), entries.end(),
            [&](const BoundaryPoint& x, const BoundaryPoint& y) { return key(x) < key(y); });

  TraceResult out;
  std::map<Cell, std::pair<int, int>> strands;  // cross tile -> (horizontal pipe, vertical pipe)
  const std::size_t limit = 2 * tiles.size() + 2;
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    PipePath path;
    path.entry = entries[idx];
    int r = path.entry.row, c = path.entry.col;
    bool from_left = path.entry.side == Side::Left;
    while (true) {
      const TileKind kind = tiles.at({r, c});
      if (!accepts(kind, from_left)) {
        raise(ErrorCode::MalformedShape, "strand runs into the closed side of a half tile at (" +
                                             std::to_string(r) + "," + std::to_string(c) + ")");
      }
      path.visited.push_back({r, c, from_left});
      if (path.visited.size() > limit) raise(ErrorCode::MalformedShape, "strand does not terminate");
      if (kind == TileKind::Cross) {
        auto& slot = strands[{r, c}];
        (from_left ? slot.first : slot.second) = static_cast<int>(idx) + 1;
      }
      const bool go_right = (kind == TileKind::Cross) == from_left;
      const int nr = go_right ? r : r + 1;
      const int nc = go_right ? c + 1 : c;
      if (has(nr, nc)) {
        r = nr;
        c = nc;
        from_left = go_right;
        continue;
      }
      bool gap = false;
      for (const auto& [cell, _] : tiles) {
        if (go_right ? (cell.first == r && cell.second > c) : (cell.second == c && cell.first > r)) gap = true;
      }
      if (gap) {
        raise(ErrorCode::MalformedShape, "strand leaves (" + std::to_string(r) + "," + std::to_string(c) +
                                             ") through an interior gap");
      }
      path.exit = {go_right ? Side::Right : Side::Top, r, c};
      break;
    }
    out.pipes.push_back(std::move(path));
  }

  std::vector<int> order(out.pipes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return key(out.pipes[x].exit) < key(out.pipes[y].exit); });
  out.permutation.assign(out.pipes.size(), 0);
  for (std::size_t rank = 0; rank < order.size(); ++rank) out.permutation[order[rank]] = static_cast<int>(rank) + 1;

  for (const auto& [cell, pair] : strands) {
    if (pair.first == 0 || pair.second == 0) {
      raise(ErrorCode::MalformedShape, "cross tile at (" + std::to_string(cell.first) + "," +
                                           std::to_string(cell.second) + ") is not traversed twice");
    }
    const int p = pair.first - 1, q = pair.second - 1;
    ++out.crossings[{std::min(p, q), std::max(p, q)}];
  }
  return out;
}

std::vector<int> staircase_permutation(int m, int k) {
  std::vector<int> out;
  for (int i = 1; i <= k; ++i) out.push_back(i);
  for (int i = m - k; i >= k + 1; --i) out.push_back(i);
  return out;
}

PipeDream staircase_from_triangulation(const PolygonTriangulation& t) {
  PipeDream pd;
  pd.shape = Shape::Staircase;
  pd.m = t.surface.n;
  pd.k = t.surface.k;
  for (int r = pd.m; r >= pd.k + 1; --r) {
    for (int c = 1; c <= r - pd.k; ++c) {
      const bool present = t.contains(tile_edge(r, c, pd.m));
      if (c == r - pd.k) {
        if (!present) raise(ErrorCode::StructureViolation, "boundary edge of length k is missing");
        pd.tiles[{r, c}] = TileKind::HalfUp;
      } else {
        pd.tiles[{r, c}] = present ? TileKind::Bump : TileKind::Cross;
      }
    }
  }
  return pd;
}

std::vector<Cell> staircase_free_cells(int m, int k) {
  std::vector<Cell> out;
  for (int r = m; r >= k + 1; --r) {
    for (int c = 1; c < r - k; ++c) out.push_back({r, c});
  }
  return out;
}

PipeDream staircase_from_bits(int m, int k, const std::vector<bool>& bumps) {
  const auto cells = staircase_free_cells(m, k);
  if (bumps.size() != cells.size()) raise(ErrorCode::InvalidInput, "wrong number of staircase boxes");
  PipeDream pd;
  pd.shape = Shape::Staircase;
  pd.m = m;
  pd.k = k;
  for (std::size_t i = 0; i < cells.size(); ++i) pd.tiles[cells[i]] = bumps[i] ? TileKind::Bump : TileKind::Cross;
  for (int r = m; r >= k + 1; --r) pd.tiles[{r, r - k}] = TileKind::HalfUp;
  return pd;
}

PipeDream chevron_from_staircase(const PipeDream& staircase) {
  const Pieces p = cut(staircase);
  PipeDream out;
  out.shape = Shape::Chevron;
  out.m = staircase.m;
  out.k = staircase.k;
  out.tiles = p.remainder;
  merge_into(out.tiles, moved(p.pyramid, staircase.m));
  merge_into(out.tiles, moved(p.triangle, staircase.m));
  return out;
}

std::vector<std::string> chevron_steps_ascii(const PipeDream& staircase) {
  const int m = staircase.m;
  const Pieces p = cut(staircase);
  const int height = m / 2 - staircase.k;
  auto header = [&](int step) {
    return "shape=chevron step=" + std::to_string(step) + " n=" + std::to_string(m) +
           " k=" + std::to_string(staircase.k);
  };
  TileMap body = p.remainder;
  merge_into(body, p.triangle);
  const TileMap pyramid_home = moved(p.pyramid, m);
  const TileMap triangle_home = moved(p.triangle, m);

  std::vector<std::string> out;
  TileMap step = body;
  merge_into(step, shifted(p.pyramid, 0, 2));
  out.push_back(grid_text(step, header(1)));

  step = shifted(body, 0, 2);
  merge_into(step, pyramid_home);
  out.push_back(grid_text(step, header(2)));

  step = body;
  merge_into(step, pyramid_home);
  out.push_back(grid_text(step, header(3)));

  // The mirrored triangle is drawn to the right of the hole it left.
  const Bounds from = bounds_of(p.triangle);
  const Bounds to = bounds_of(triangle_home);
  step = p.remainder;
  merge_into(step, pyramid_home);
  merge_into(step, shifted(triangle_home, from.top - to.top, from.left + height + 1 - to.left));
  out.push_back(grid_text(step, header(4)));

  step = p.remainder;
  merge_into(step, pyramid_home);
  merge_into(step, triangle_home);
  out.push_back(grid_text(step, header(5)));
  return out;
}

PolygonTriangulation triangulation_from_pipedream(const PipeDream& p) {
  std::set<Edge> edges;
  for (const auto& [cell, kind] : p.tiles) {
    if (is_bump_like(kind)) edges.insert(tile_edge(cell.first, cell.second, p.m));
  }
  for (int a = 0; a < p.m; ++a) {
    for (int b = a + 1; b < p.m; ++b) {
      if (cyclic_length(Edge(a, b), p.m) < p.k) edges.insert(Edge(a, b));
    }
  }
  return PolygonTriangulation{SurfaceDesc::polygon(p.m, p.k), {edges.begin(), edges.end()}};
}

bool is_n_periodic(const PipeDream& p, int n) {
  if (n < 1 || p.m % n != 0) raise(ErrorCode::InvalidInput, "period must divide the polygon size");
  std::map<Edge, bool> bump_of;
  for (const auto& [cell, kind] : p.tiles) bump_of[tile_edge(cell.first, cell.second, p.m)] = is_bump_like(kind);
  for (const auto& [e, bump] : bump_of) {
    const Edge image(mod(e.a + n, p.m), mod(e.b + n, p.m));
    auto it = bump_of.find(image);
    if (it == bump_of.end() || it->second != bump) return false;
  }
  return true;
}

bool is_reflection_symmetric(const PipeDream& p) {
  if (p.m % 2 != 0) return false;
  const int half = p.m / 2;
  for (const auto& [cell, kind] : p.tiles) {
    auto image = p.at(cell.second + half, cell.first - half);
    if (!image || is_bump_like(*image) != is_bump_like(kind)) return false;
  }
  return true;
}

std::optional<Cell> cell_of_edge(const PipeDream& p, const Edge& e) {
  for (const auto& [cell, _] : p.tiles) {
    if (tile_edge(cell.first, cell.second, p.m) == e) return cell;
  }
  return std::nullopt;
}

Edge pipe_crossing_partner(const PipeDream& p, const Edge& e) {
  const auto cell = cell_of_edge(p, e);
  if (!cell || p.tiles.at(*cell) != TileKind::Bump) {
    raise(ErrorCode::NotInTriangulation, to_string(e) + " has no full bump tile");
  }
  const TraceResult trace = trace_pipes(p);
  std::vector<int> through;
  for (std::size_t i = 0; i < trace.pipes.size(); ++i) {
    for (const auto& s : trace.pipes[i].visited) {
      if (s.row == cell->first && s.col == cell->second) through.push_back(static_cast<int>(i));
    }
  }
  if (through.size() != 2) raise(ErrorCode::StructureViolation, "bump tile is not traversed by two strands");
  std::set<Cell> first;
  for (const auto& s : trace.pipes[through[0]].visited) {
    if (p.tiles.at({s.row, s.col}) == TileKind::Cross) first.insert({s.row, s.col});
  }
  std::vector<Cell> shared;
  for (const auto& s : trace.pipes[through[1]].visited) {
    if (first.count({s.row, s.col})) shared.push_back({s.row, s.col});
  }
  if (shared.size() != 1) {
    raise(ErrorCode::StructureViolation, "strands through " + to_string(e) + " cross " +
                                             std::to_string(shared.size()) + " times");
  }
  return tile_edge(shared[0].first, shared[0].second, p.m);
}

std::string render_ascii(const PipeDream& p) {
  return grid_text(p.tiles, "shape=" + shape_name(p.shape) + " n=" + std::to_string(p.m) +
                                " k=" + std::to_string(p.k));
}

PipeDream parse_ascii(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) raise(ErrorCode::InvalidInput, "empty pipe dream text");
  std::istringstream hs(line);
  std::map<std::string, std::string> fields;
  for (std::string tok; hs >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) raise(ErrorCode::InvalidInput, "bad header token '" + tok + "'");
    fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* f : {"shape", "n", "k", "row0", "col0"}) {
    if (!fields.count(f)) raise(ErrorCode::InvalidInput, std::string("header lacks ") + f);
  }
  PipeDream pd;
  if (fields["shape"] == "staircase") pd.shape = Shape::Staircase;
  else if (fields["shape"] == "chevron") pd.shape = Shape::Chevron;
  else raise(ErrorCode::InvalidInput, "unknown shape " + fields["shape"]);
  try {
    pd.m = std::stoi(fields["n"]);
    pd.k = std::stoi(fields["k"]);
    int r = std::stoi(fields["row0"]);
    const int c0 = std::stoi(fields["col0"]);
    for (; std::getline(is, line); --r) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (ch == '.') continue;
        if (ch != 'B' && ch != 'X') raise(ErrorCode::InvalidInput, std::string("unknown tile '") + ch + "'");
        pd.tiles[{r, c0 + static_cast<int>(i)}] = ch == 'B' ? TileKind::Bump : TileKind::Cross;
      }
    }
  } catch (const std::logic_error&) {
    raise(ErrorCode::InvalidInput, "non-numeric header field");
  }
  // A bump with nothing on one pair of adjacent sides carries a single strand.
  for (auto& [cell, kind] : pd.tiles) {
    if (kind != TileKind::Bump) continue;
    const auto [r, c] = cell;
    if (!pd.at(r, c + 1) && !pd.at(r - 1, c)) kind = TileKind::HalfUp;
    else if (pd.shape == Shape::Chevron && !pd.at(r, c - 1) && !pd.at(r + 1, c)) kind = TileKind::HalfRight;
  }
  return pd;
}

}  // namespace multitri
