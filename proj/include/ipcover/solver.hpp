#pragma once

#include <cstdint>
#include <vector>

#include "ipcover/cover.hpp"
#include "ipcover/graph.hpp"

namespace ipcover {

/// Every isometric path of a graph, each stored once with its smaller
/// endpoint first, sorted lexicographically by vertex sequence.
class PathPool {
 public:
  PathPool(int vertex_count, std::vector<Path> paths);

  int vertex_count() const { return vertex_count_; }
  std::size_t size() const { return paths_.size(); }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& operator[](std::size_t i) const { return paths_[i]; }

  /// Pool indices of the paths through `v`, ascending.
  const std::vector<std::size_t>& containing(Vertex v) const { return containing_.at(v); }
  bool covers(std::size_t path, Vertex v) const {
    return (masks_[path * words_ + v / 64] >> (v % 64)) & 1U;
  }
  const std::uint64_t* mask(std::size_t path) const { return &masks_[path * words_]; }
  std::size_t words() const { return words_; }

  /// Vertex count of the longest path in the pool (0 for an empty pool).
  std::size_t max_path_vertices() const { return max_path_vertices_; }

 private:
  int vertex_count_ = 0;
  std::size_t words_ = 1;
  std::vector<Path> paths_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::size_t>> containing_;
  std::size_t max_path_vertices_ = 0;
};

inline constexpr std::size_t kDefaultPoolCap = 10'000'000;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Throws DisconnectedGraph, or BudgetExceeded past `cap` paths.
PathPool enumerate_isometric_paths(const Graph& g, const DistanceMatrix& d,
                                   std::size_t cap = kDefaultPoolCap);
PathPool enumerate_isometric_paths(const Graph& g, std::size_t cap = kDefaultPoolCap);

/// Repeatedly takes the first pool path covering the most uncovered vertices.
Cover greedy_cover(const Graph& g, const PathPool& pool);

struct SolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t pool_cap = kDefaultPoolCap;
};

struct SolveResult {
  Cover optimum;
  std::size_t size = 0;
  std::uint64_t nodes_explored = 0;
  /// False when the node budget ran out before the search finished.
  bool proof_of_optimality = false;
};

/// Minimum isometric path cover by branch and bound over the full pool.
///
/// Branches on the lowest-index uncovered vertex, trying every pool path
/// through it in pool order; a branch is cut once the paths used so far plus
/// ceil(uncovered / longest pool path) cannot beat the incumbent. The search
/// starts with an incumbent bound one above the greedy size, so the returned
/// cover is the first optimum met in pool order. Graphs above 64 vertices
/// are rejected.
SolveResult solve_min_cover(const Graph& g, const SolveOptions& options = {});

}  // namespace ipcover
