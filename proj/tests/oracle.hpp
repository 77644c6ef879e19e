#pragma once

// Brute-force reference implementations.  Deliberately naive and free of
// the library, so that tests compare two unrelated computations.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<int, int>;

inline bool cross(Pair e, Pair f) {
  auto [a, b] = e;
  auto [c, d] = f;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool has_clique(const std::vector<Pair>& edges, int size, std::vector<int>& pick, int from,
                       int must = -1) {
  if (static_cast<int>(pick.size()) == size) {
    return must < 0 || std::find(pick.begin(), pick.end(), must) != pick.end();
  }
  for (int i = from; i < static_cast<int>(edges.size()); ++i) {
    bool ok = true;
    for (int j : pick) ok = ok && cross(edges[i], edges[j]);
    if (!ok) continue;
    pick.push_back(i);
    const bool hit = has_clique(edges, size, pick, i + 1, must);
    pick.pop_back();
    if (hit) return true;
  }
  return false;
}

inline bool has_crossing(const std::vector<Pair>& edges, int size, int must = -1) {
  std::vector<int> pick;
  return has_clique(edges, size, pick, 0, must);
}

inline int cyclic_len(Pair e, int m) { return std::min(e.second - e.first, m - e.second + e.first); }

/// Relevant-edge subsets of the m-gon that are maximal (k+1)-crossing-free.
inline std::vector<std::vector<Pair>> polygon_triangulations(int m, int k) {
  std::vector<Pair> rel;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (cyclic_len({a, b}, m) > k) rel.emplace_back(a, b);
  std::vector<std::vector<Pair>> out;
  const std::uint32_t total = 1u << rel.size();
  for (std::uint32_t s = 0; s < total; ++s) {
    std::vector<Pair> chosen;
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (s >> i & 1u) chosen.push_back(rel[i]);
    if (has_crossing(chosen, k + 1)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < rel.size() && maximal; ++i) {
      if (s >> i & 1u) continue;
      auto with = chosen;
      with.push_back(rel[i]);
      maximal = has_crossing(with, k + 1, static_cast<int>(with.size()) - 1);
    }
    if (maximal) out.push_back(chosen);
  }
  return out;
}

inline long long catalan(int i) {
  long long c = 1;
  for (int j = 0; j < i; ++j) c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

/// det[C_{m-i-j}]_{1<=i,j<=k} by fraction-free elimination.
inline long long hankel_count(int m, int k) {
  std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = catalan(m - (i + 1) - (j + 1));
  __int128 prev = 1;
  int sign = 1;
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (int r = c + 1; r < k; ++r) {
      for (int j = c + 1; j < k; ++j) a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[c][c];
  }
  return static_cast<long long>(sign * a[k - 1][k - 1]);
}

/// Reduced fillings of the (m-k)-row staircase whose pipes, entering on the
/// left of each row (top row first), leave through the tops of the columns
/// in the order `target` (1-based column ranks).  The last box of each row
/// is a single elbow; every other box is a bump or a cross.
inline long long count_reduced_staircase(int rows, const std::vector<int>& target) {
  std::vector<Pair> free;  // (row from top, column)
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j + 1 < rows - i; ++j) free.emplace_back(i, j);
  long long count = 0;
  const std::uint64_t total = std::uint64_t{1} << free.size();
  std::vector<std::vector<char>> grid(rows, std::vector<char>(rows, 0));
  for (std::uint64_t s = 0; s < total; ++s) {
    for (std::size_t f = 0; f < free.size(); ++f) grid[free[f].first][free[f].second] = (s >> f & 1u) ? 'B' : 'X';
    std::vector<int> exit(rows);
    std::vector<std::vector<int>> crossings(rows, std::vector<int>(rows, 0));
    std::vector<std::vector<int>> owner(rows, std::vector<int>(rows, -1));
    bool reduced = true;
    for (int p = 0; p < rows && reduced; ++p) {
      int i = p, j = 0;
      bool east = true;
      while (true) {
        const bool elbow = j == rows - 1 - i;
        const char tile = elbow ? 'B' : grid[i][j];
        if (tile == 'X') {
          if (owner[i][j] >= 0) {
            if (++crossings[owner[i][j]][p] > 1) reduced = false;
          }
          owner[i][j] = p;
        } else {
          east = !east;
        }
        if (east) {
          ++j;
        } else if (i == 0) {
          exit[p] = j + 1;
          break;
        } else {
          --i;
        }
      }
    }
    if (reduced && exit == target) ++count;
  }
  return count;
}

}  // namespace oracle
