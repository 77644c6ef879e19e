#pragma once

// Enumeration of maximal sets avoiding a family of forbidden subsets, over a
// ground set of at most 64 candidates encoded as bits.  Both the polygon and
// the cylinder enumerators reduce to this: candidates are k-relevant edges
// (or edge classes) and forbidden sets are the (k+1)-crossings among them.

#include <cstdint>
#include <vector>

namespace multitri {

using Mask = std::uint64_t;

inline constexpr int kMaxCandidates = 64;

inline Mask bit(int i) { return Mask{1} << i; }

struct FreeSetProblem {
  int size = 0;
  std::vector<Mask> forbidden;
};

/// Drops duplicates and supersets so that only minimal forbidden sets remain.
void minimize_forbidden(std::vector<Mask>& forbidden);

bool is_free(const FreeSetProblem& problem, Mask set);

/// Free, and adding any absent candidate completes a forbidden set.
bool is_maximal_free(const FreeSetProblem& problem, Mask set);

struct SearchOptions {
  unsigned threads = 0;  // 0 picks std::thread::hardware_concurrency()
};

/// Size gate for the surface enumerators.  `max_n == 0` applies the
/// per-order default budget, a negative value disables the gate (the 64
/// candidate limit still holds).
struct EnumerationOptions {
  int max_n = 0;
  SearchOptions search;
};

/// All maximal free sets, sorted ascending.  Branches are explored
/// independently and merged, so the output does not depend on scheduling.
std::vector<Mask> enumerate_maximal_free_sets(const FreeSetProblem& problem,
                                              const SearchOptions& options = {});

}  // namespace multitri
