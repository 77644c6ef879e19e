#include "multitri/stars.hpp"

#include <algorithm>
#include <optional>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

// Star-order position j sits at cyclic position k*j mod (2k+1).
int cyclic_slot(int k, int j) { return (k * j) % (2 * k + 1); }

// Filled slots must read counterclockwise starting from slot 0.
bool consistent(const std::vector<std::optional<int>>& slots, const BetweenFn& between) {
  const int origin = *slots[0];
  std::optional<int> prev;
  for (std::size_t i = 1; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    if (*slots[i] == origin) return false;
    if (prev && !between(origin, *prev, *slots[i])) return false;
    prev = slots[i];
  }
  return true;
}

bool adjacent(const NeighborFn& neighbors, int x, int y) {
  auto nb = neighbors(x);
  return std::find(nb.begin(), nb.end(), y) != nb.end();
}

}  // namespace

KStar KStar::from_cyclic(const std::vector<int>& z, int k) {
  if (static_cast<int>(z.size()) != 2 * k + 1) {
    raise(ErrorCode::InvalidInput, "a k-star needs exactly 2k+1 vertices");
  }
  KStar s;
  s.k = k;
  for (int j = 0; j <= 2 * k; ++j) s.vertices.push_back(z[cyclic_slot(k, j)]);
  return s;
}

std::vector<Edge> KStar::edges() const {
  std::vector<Edge> out;
  const std::size_t m = vertices.size();
  for (std::size_t j = 0; j < m; ++j) out.emplace_back(vertices[j], vertices[(j + 1) % m]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> KStar::sorted_vertices() const {
  std::vector<int> out = vertices;
  std::sort(out.begin(), out.end());
  return out;
}

bool KStar::contains_edge(const Edge& e) const {
  const std::size_t m = vertices.size();
  for (std::size_t j = 0; j < m; ++j) {
    if (Edge(vertices[j], vertices[(j + 1) % m]) == e) return true;
  }
  return false;
}

std::vector<Angle> angles_at(int v, const std::vector<int>& ccw_neighbors) {
  std::vector<Angle> out;
  for (std::size_t i = 0; i + 1 < ccw_neighbors.size(); ++i) {
    out.push_back(Angle{ccw_neighbors[i + 1], v, ccw_neighbors[i]});
  }
  return out;
}

std::vector<KStar> stars_through_angle(int k, const Angle& angle, const NeighborFn& neighbors,
                                       const BetweenFn& between) {
  const int len = 2 * k + 1;
  std::vector<int> order(len);
  std::vector<std::optional<int>> slots(len);
  order[0] = angle.v;
  order[1] = angle.w;
  order[len - 1] = angle.u;
  slots[cyclic_slot(k, 0)] = angle.v;
  slots[cyclic_slot(k, 1)] = angle.w;
  slots[cyclic_slot(k, len - 1)] = angle.u;

  std::vector<KStar> found;
  if (!consistent(slots, between)) return found;

  // Walk the star order s_2 .. s_{2k-1}; the closing edge [s_{2k-1}, u]
  // is checked at the end.
  auto dfs = [&](auto&& self, int j) -> void {
    if (j == len - 1) {
      if (adjacent(neighbors, order[j - 1], angle.u)) {
        KStar s;
        s.k = k;
        s.vertices = order;
        found.push_back(std::move(s));
      }
      return;
    }
    const int slot = cyclic_slot(k, j);
    for (int x : neighbors(order[j - 1])) {
      slots[slot] = x;
      if (consistent(slots, between)) {
        order[j] = x;
        self(self, j + 1);
      }
      slots[slot].reset();
    }
  };
  if (k == 0) return found;
  dfs(dfs, 2);
  return found;
}

bool bisects_star_angle(const KStar& star, int r, int x, const BetweenFn& between) {
  const int k = star.k;
  const int len = 2 * k + 1;
  std::vector<int> z(len);
  for (int j = 0; j < len; ++j) z[cyclic_slot(k, j)] = star.vertices[j];
  auto it = std::find(z.begin(), z.end(), r);
  if (it == z.end()) return false;
  const int i = static_cast<int>(it - z.begin());
  return between(z[(i + k) % len], x, z[(i + k + 1) % len]);
}

}  // namespace multitri
