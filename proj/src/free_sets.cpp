#include "multitri/free_sets.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "multitri/errors.hpp"

namespace multitri {

namespace {

struct Node {
  int idx;
  Mask inc;
  Mask exc;
};

class Search {
 public:
  explicit Search(const FreeSetProblem& p) : size_(p.size), containing_(p.size) {
    for (Mask f : p.forbidden) {
      for (int i = 0; i < size_; ++i) {
        if (f & bit(i)) containing_[i].push_back(f);
      }
    }
  }

  // Depth-first expansion; nodes at `split_depth` are handed to `frontier`
  // instead of being explored when a frontier is supplied.
  void run(Node node, std::vector<Mask>& out, std::vector<Node>* frontier = nullptr,
           int split_depth = -1) {
    if (frontier && node.idx == split_depth) {
      frontier->push_back(node);
      return;
    }
    if (node.idx == size_) {
      for (int e = 0; e < size_; ++e) {
        if ((node.exc & bit(e)) && !completes(node.inc, e)) return;
      }
      out.push_back(node.inc);
      return;
    }
    const int i = node.idx;
    if (!completes(node.inc, i)) {
      run({i + 1, node.inc | bit(i), node.exc}, out, frontier, split_depth);
    }
    // Excluding i only pays off if every excluded candidate can still be
    // blocked by what is included or undecided.
    const Mask exc = node.exc | bit(i);
    const Mask undecided = (i + 1 >= 64) ? Mask{0} : (~Mask{0} << (i + 1)) & all();
    const Mask pool = node.inc | undecided;
    for (int e = 0; e <= i; ++e) {
      if ((exc & bit(e)) && !completes(pool, e)) return;
    }
    run({i + 1, node.inc, exc}, out, frontier, split_depth);
  }

  int size() const { return size_; }

 private:
  Mask all() const { return size_ == 64 ? ~Mask{0} : bit(size_) - 1; }

  // Some forbidden set containing e lies inside base + {e}.
  bool completes(Mask base, int e) const {
    const Mask with = base | bit(e);
    for (Mask f : containing_[e]) {
      if ((f & ~with) == 0) return true;
    }
    return false;
  }

  int size_;
  std::vector<std::vector<Mask>> containing_;
};

}  // namespace

void minimize_forbidden(std::vector<Mask>& forbidden) {
  std::sort(forbidden.begin(), forbidden.end(), [](Mask x, Mask y) {
    int px = __builtin_popcountll(x), py = __builtin_popcountll(y);
    return px != py ? px < py : x < y;
  });
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  std::vector<Mask> kept;
  for (Mask f : forbidden) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [f](Mask g) { return (g & ~f) == 0; });
    if (!redundant) kept.push_back(f);
  }
  forbidden = std::move(kept);
}

bool is_free(const FreeSetProblem& problem, Mask set) {
  return std::none_of(problem.forbidden.begin(), problem.forbidden.end(),
                      [set](Mask f) { return (f & ~set) == 0; });
}

bool is_maximal_free(const FreeSetProblem& problem, Mask set) {
  if (!is_free(problem, set)) return false;
  for (int e = 0; e < problem.size; ++e) {
    if (set & bit(e)) continue;
    if (is_free(problem, set | bit(e))) return false;
  }
  return true;
}

std::vector<Mask> enumerate_maximal_free_sets(const FreeSetProblem& problem,
                                              const SearchOptions& options) {
  if (problem.size < 0 || problem.size > kMaxCandidates) {
    raise(ErrorCode::TooLarge, std::to_string(problem.size) + " candidates exceed the 64-bit search");
  }
  Search search(problem);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  std::vector<Mask> out;
  if (threads == 1 || problem.size < 12) {
    search.run({0, 0, 0}, out);
  } else {
    std::vector<Node> frontier;
    search.run({0, 0, 0}, out, &frontier, std::min(problem.size, 10));
    std::vector<std::vector<Mask>> partial(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      Search local(problem);
      for (std::size_t j = next++; j < frontier.size(); j = next++) {
        local.run(frontier[j], partial[j]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace multitri
