#include "ipcover/solver.hpp"

#include <algorithm>
#include <bit>

#include "ipcover/error.hpp"

namespace ipcover {

PathPool::PathPool(int vertex_count, std::vector<Path> paths)
    : vertex_count_(vertex_count),
      words_(std::max<std::size_t>(1, (static_cast<std::size_t>(vertex_count) + 63) / 64)),
      paths_(std::move(paths)),
      masks_(paths_.size() * words_, 0),
      containing_(vertex_count) {
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    for (Vertex v : paths_[i].vertices) {
      if (v < 0 || v >= vertex_count_) throw RangeError("pool path vertex out of range");
      masks_[i * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      containing_[v].push_back(i);
    }
    max_path_vertices_ = std::max(max_path_vertices_, paths_[i].size());
  }
}

namespace {

struct Enumerator {
  const Graph& g;
  const DistanceMatrix& d;
  std::size_t cap;
  std::vector<Path>& out;
  std::vector<Vertex> partial;

  void extend(Vertex target) {
    const Vertex source = partial.front();
    const int k = static_cast<int>(partial.size()) - 1;
    const Vertex tip = partial.back();
    if (tip == target) {
      if (out.size() >= cap) {
        throw BudgetExceeded("isometric path pool exceeds cap of " + std::to_string(cap));
      }
      out.emplace_back(partial);
      return;
    }
    const int remaining = d(source, target) - (k + 1);
    for (Vertex w : g.neighbors(tip)) {
      if (d(source, w) == k + 1 && d(w, target) == remaining) {
        partial.push_back(w);
        extend(target);
        partial.pop_back();
      }
    }
  }
};

}  // namespace

PathPool enumerate_isometric_paths(const Graph& g, const DistanceMatrix& d, std::size_t cap) {
  if (!g.is_connected()) throw DisconnectedGraph("isometric path pool needs a connected graph");
  const int n = g.vertex_count();
  std::vector<Path> paths;
  Enumerator e{g, d, cap, paths, {}};
  for (Vertex s = 0; s < n; ++s) {
    if (paths.size() >= cap) throw BudgetExceeded("isometric path pool exceeds cap");
    paths.push_back(Path{s});
    for (Vertex t = s + 1; t < n; ++t) {
      e.partial.assign(1, s);
      e.extend(t);
    }
  }
  std::sort(paths.begin(), paths.end());
  return PathPool(n, std::move(paths));
}

PathPool enumerate_isometric_paths(const Graph& g, std::size_t cap) {
  return enumerate_isometric_paths(g, all_pairs_distances(g), cap);
}

Cover greedy_cover(const Graph& g, const PathPool& pool) {
  const int n = g.vertex_count();
  Cover cover;
  cover.provenance = Provenance::ExactSolver;
  cover.note = "greedy";
  if (n == 0) return cover;
  if (pool.size() == 0) throw InvalidInput("greedy cover needs a non-empty pool");

  const std::size_t words = pool.words();
  std::vector<std::uint64_t> uncovered(words, 0);
  for (Vertex v = 0; v < n; ++v) uncovered[v / 64] |= std::uint64_t{1} << (v % 64);
  auto remaining = [&] {
    int c = 0;
    for (auto w : uncovered) c += std::popcount(w);
    return c;
  };
  while (remaining() > 0) {
    std::size_t best = 0;
    int best_gain = -1;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto* m = pool.mask(i);
      int gain = 0;
      for (std::size_t w = 0; w < words; ++w) gain += std::popcount(m[w] & uncovered[w]);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    const auto* m = pool.mask(best);
    for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~m[w];
    cover.paths.push_back(pool[best]);
  }
  return cover;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const PathPool& pool, std::uint64_t budget, std::size_t bound)
      : pool_(pool), budget_(budget), best_size_(bound) {
    max_len_ = std::max<std::size_t>(1, pool.max_path_vertices());
  }

  void run() {
    const int n = pool_.vertex_count();
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search(all);
  }

  bool truncated() const { return truncated_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::size_t>& best() const { return best_; }
  bool found() const { return found_; }

 private:
  void search(std::uint64_t uncovered) {
    if (truncated_) return;
    if (++nodes_ > budget_) {
      truncated_ = true;
      return;
    }
    if (uncovered == 0) {
      if (chosen_.size() < best_size_) {
        best_size_ = chosen_.size();
        best_ = chosen_;
        found_ = true;
      }
      return;
    }
    const auto left = static_cast<std::size_t>(std::popcount(uncovered));
    if (chosen_.size() + (left + max_len_ - 1) / max_len_ >= best_size_) return;

    const Vertex v = std::countr_zero(uncovered);
    // Singletons are dominated by any edge through v once the graph has one.
    const bool skip_singletons = pool_.vertex_count() > 1;
    for (std::size_t i : pool_.containing(v)) {
      if (skip_singletons && pool_[i].size() == 1) continue;
      chosen_.push_back(i);
      search(uncovered & ~pool_.mask(i)[0]);
      chosen_.pop_back();
      if (truncated_) return;
      if (chosen_.size() + (left + max_len_ - 1) / max_len_ >= best_size_) return;
    }
  }

  const PathPool& pool_;
  std::uint64_t budget_;
  std::size_t best_size_;
  std::size_t max_len_ = 1;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  bool found_ = false;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

SolveResult solve_min_cover(const Graph& g, const SolveOptions& options) {
  const int n = g.vertex_count();
  if (n > 64) throw InvalidInput("exact solver supports at most 64 vertices, got " + std::to_string(n));
  SolveResult result;
  result.optimum.provenance = Provenance::ExactSolver;
  if (n == 0) {
    result.proof_of_optimality = true;
    return result;
  }
  const auto pool = enumerate_isometric_paths(g, options.pool_cap);
  const Cover greedy = greedy_cover(g, pool);

  BranchAndBound search(pool, options.node_budget, greedy.size() + 1);
  search.run();
  result.nodes_explored = search.nodes();
  result.proof_of_optimality = !search.truncated();
  if (search.found()) {
    for (std::size_t i : search.best()) result.optimum.paths.push_back(pool[i]);
  } else {
    result.optimum.paths = greedy.paths;
  }
  result.size = result.optimum.paths.size();
  result.optimum.note = result.proof_of_optimality ? "branch-and-bound optimum"
                                                   : "best incumbent (node budget exhausted)";
  return result;
}

}  // namespace ipcover
