#include "multitri/surface.hpp"

#include <algorithm>
#include <sstream>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

int floor_mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

// Extends `clique` to `need` more members drawn from `cands` (indices into
// `edges`, increasing).  Every candidate already crosses every clique member.
bool extend_clique(std::span<const Edge> edges, std::vector<int>& clique,
                   const std::vector<int>& cands, int need) {
  if (need == 0) return true;
  if (static_cast<int>(cands.size()) < need) return false;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (static_cast<int>(cands.size() - i) < need) break;
    const Edge& e = edges[cands[i]];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (crosses(e, edges[cands[j]])) next.push_back(cands[j]);
    }
    clique.push_back(cands[i]);
    if (extend_clique(edges, clique, next, need - 1)) return true;
    clique.pop_back();
  }
  return false;
}

void collect_cliques(std::span<const Edge> edges, std::vector<int>& clique,
                     const std::vector<int>& cands, int need,
                     std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(clique);
    return;
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (static_cast<int>(cands.size() - i) < need) break;
    std::vector<int> next;
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      if (crosses(edges[cands[i]], edges[cands[j]])) next.push_back(cands[j]);
    }
    clique.push_back(cands[i]);
    collect_cliques(edges, clique, next, need - 1, out);
    clique.pop_back();
  }
}

}  // namespace

SurfaceDesc SurfaceDesc::polygon(int n, int k) {
  if (n < 3 || k < 1) raise(ErrorCode::InvalidInput, "polygon needs n >= 3 and k >= 1");
  return SurfaceDesc{SurfaceKind::Polygon, n, k};
}

SurfaceDesc SurfaceDesc::cylinder(int n, int k) {
  if (n < 1 || k < 1) raise(ErrorCode::InvalidInput, "cylinder needs n >= 1 and k >= 1");
  return SurfaceDesc{SurfaceKind::Cylinder, n, k};
}

std::string to_string(const SurfaceDesc& s) {
  std::ostringstream os;
  os << (s.is_polygon() ? "polygon" : "cylinder") << "(n=" << s.n << ", k=" << s.k << ")";
  return os.str();
}

Edge::Edge(int u, int v) {
  if (u == v) raise(ErrorCode::InvalidInput, "degenerate edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
  a = std::min(u, v);
  b = std::max(u, v);
}

std::string to_string(const Edge& e) {
  return "[" + std::to_string(e.a) + "," + std::to_string(e.b) + "]";
}

int cyclic_length(const Edge& e, int m) {
  int d = floor_mod(e.b - e.a, m);
  return std::min(d, m - d);
}

EdgeClass EdgeClass::of(const Edge& e, int n) {
  if (n < 1) raise(ErrorCode::InvalidInput, "edge class period must be positive");
  int shift = floor_mod(e.a, n) - e.a;
  EdgeClass c;
  c.rep = e.translated(shift);
  c.period = n;
  return c;
}

bool EdgeClass::contains(const Edge& e) const {
  return e.length() == rep.length() && floor_mod(e.a - rep.a, period) == 0;
}

std::string to_string(const EdgeClass& c) { return to_string(c.rep) + "~" + std::to_string(c.period); }

bool crosses(const Edge& e, const Edge& f) {
  return (e.a < f.a && f.a < e.b && e.b < f.b) || (f.a < e.a && e.a < f.b && f.b < e.b);
}

bool crosses(const Edge& e, const Edge& f, const SurfaceDesc& surface) {
  if (surface.is_polygon()) {
    for (int v : {e.a, e.b, f.a, f.b}) {
      if (v < 0 || v >= surface.n) raise(ErrorCode::InvalidInput, "polygon vertex out of range");
    }
  }
  return crosses(e, f);
}

bool cyclically_between(long long x, long long y, long long z) {
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

bool cyclically_between_mod(int x, int y, int z, int m) {
  return cyclically_between(floor_mod(x, m), floor_mod(y, m), floor_mod(z, m));
}

std::optional<std::vector<Edge>> find_crossing(std::span<const Edge> edges, int size,
                                               const std::function<bool(const Edge&)>& anchor) {
  if (size <= 0) return std::vector<Edge>{};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    // With an anchor, the anchored edge leads the clique and the rest may
    // come from anywhere; without one, cliques are built in index order.
    if (anchor && !anchor(edges[i])) continue;
    std::vector<int> cands;
    for (std::size_t j = anchor ? 0 : i + 1; j < edges.size(); ++j) {
      if (j != i && crosses(edges[i], edges[j])) cands.push_back(static_cast<int>(j));
    }
    std::vector<int> clique{static_cast<int>(i)};
    if (extend_clique(edges, clique, cands, size - 1)) {
      std::sort(clique.begin(), clique.end());
      std::vector<Edge> out;
      for (int idx : clique) out.push_back(edges[idx]);
      return out;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> enumerate_crossings(std::span<const Edge> edges, int size,
                                                  const std::function<bool(const Edge&)>& anchor) {
  std::vector<std::vector<int>> out;
  if (size <= 0) return out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (anchor && !anchor(edges[i])) continue;
    std::vector<int> cands;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (crosses(edges[i], edges[j])) cands.push_back(static_cast<int>(j));
    }
    std::vector<int> clique{static_cast<int>(i)};
    collect_cliques(edges, clique, cands, size - 1, out);
  }
  return out;
}

bool has_k_plus_1_crossing(std::span<const Edge> edges, int k, const SurfaceDesc& surface) {
  std::vector<Edge> relevant;
  for (const Edge& e : edges) {
    if (surface.is_polygon()) {
      if (e.a < 0 || e.b >= surface.n) raise(ErrorCode::InvalidInput, "polygon vertex out of range");
      if (cyclic_length(e, surface.n) <= k) continue;
    } else if (e.length() <= k) {
      continue;
    }
    relevant.push_back(e);
  }
  return find_crossing(relevant, k + 1).has_value();
}

int default_window_radius(int k) { return 2 * k + 1; }

std::vector<Edge> periodic_crossing_window(std::span<const EdgeClass> classes, int k, int n,
                                           int radius) {
  if (radius < 0) radius = default_window_radius(k);
  std::vector<Edge> out;
  out.reserve(classes.size() * static_cast<std::size_t>(2 * radius + 1));
  for (const EdgeClass& c : classes) {
    if (c.length() > k * n) {
      raise(ErrorCode::EdgeTooLong, to_string(c.rep) + " is longer than kn=" + std::to_string(k * n));
    }
    EdgeClass canon = EdgeClass::of(c.rep, n);
    for (int t = -radius; t <= radius; ++t) out.push_back(canon.member(t));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<Edge>> find_periodic_crossing(std::span<const EdgeClass> classes, int k,
                                                        int n, int radius) {
  std::vector<Edge> window = periodic_crossing_window(classes, k, n, radius);
  std::erase_if(window, [k](const Edge& e) { return e.length() <= k; });
  return find_crossing(window, k + 1, [n](const Edge& e) { return e.a >= 0 && e.a < n; });
}

bool is_periodic_crossing_free(std::span<const EdgeClass> classes, int k, int n, int radius) {
  return !find_periodic_crossing(classes, k, n, radius).has_value();
}

}  // namespace multitri
