#pragma once

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <algorithm>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "ipcover/cover.hpp"
#include "ipcover/graph.hpp"

namespace ipcover::testing {

/// Non-increasing size vectors with sum n and between min_parts and
/// max_parts parts.
inline void partitions(int n, int max_part, int max_parts, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out, int min_parts = 2) {
  if (n == 0) {
    if (static_cast<int>(prefix.size()) >= min_parts) out.push_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_parts) return;
  for (int s = std::min(n, max_part); s >= 1; --s) {
    prefix.push_back(s);
    partitions(n - s, s, max_parts, prefix, out, min_parts);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions_up_to(int max_n, int max_parts = 1 << 20,
                                                      int min_n = 2) {
  std::vector<std::vector<int>> out;
  for (int n = min_n; n <= max_n; ++n) {
    std::vector<int> prefix;
    partitions(n, n, max_parts, prefix, out);
  }
  return out;
}

/// Floyd-Warshall over the adjacency test; unreachable pairs stay at `inf`.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g, int inf = 1 << 20) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v) {
      if (g.has_edge(u, v)) d[u][v] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Every simple path (as a vertex sequence starting at its smaller endpoint)
/// whose length equals the endpoint distance, by exhaustive DFS over all
/// simple paths. Exponential; tiny graphs only.
inline std::vector<Path> brute_force_isometric_paths(const Graph& g) {
  const auto d = floyd_warshall(g);
  const int n = g.vertex_count();
  std::vector<Path> out;
  std::vector<Vertex> path;
  std::vector<char> on(n, 0);
  std::function<void()> dfs = [&] {
    const Vertex s = path.front();
    const Vertex t = path.back();
    if (s <= t && d[s][t] == static_cast<int>(path.size()) - 1) out.emplace_back(path);
    for (Vertex w = 0; w < n; ++w) {
      if (!on[w] && g.has_edge(t, w)) {
        on[w] = 1;
        path.push_back(w);
        dfs();
        path.pop_back();
        on[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on[s] = 1;
    dfs();
    on[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest k such that some k paths of `candidates` cover all n vertices,
/// by trying every k-subset in increasing k. Tiny inputs only.
inline int brute_force_min_cover(int n, const std::vector<Path>& candidates) {
  std::vector<std::uint64_t> masks;
  for (const auto& p : candidates) {
    std::uint64_t m = 0;
    for (Vertex v : p.vertices) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::function<bool(std::size_t, int, std::uint64_t)> pick = [&](std::size_t from, int left,
                                                                  std::uint64_t acc) {
    if (acc == all) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i < masks.size(); ++i) {
      if (pick(i + 1, left - 1, acc | masks[i])) return true;
    }
    return false;
  };
  for (int k = 0; k <= n; ++k) {
    if (pick(0, k, 0)) return k;
  }
  return -1;
}

/// Connected random graph: a random spanning tree plus each further pair
/// with probability p.
inline Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (Vertex v = 1; v < n; ++v) {
    Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    adj[u][v] = adj[v][u] = 1;
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj[u][v] && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// All near-perfect matchings of {0..size-1} as sorted pair lists.
inline std::vector<std::vector<std::pair<int, int>>> near_perfect_matchings(int size) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> current;
  std::vector<char> used(size, 0);
  const int pairs = size / 2;
  std::function<void(bool)> rec = [&](bool skipped) {
    if (static_cast<int>(current.size()) == pairs) {
      out.push_back(current);
      return;
    }
    int a = 0;
    while (a < size && used[a]) ++a;
    if (a == size) return;
    used[a] = 1;
    for (int b = a + 1; b < size; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      current.emplace_back(a, b);
      rec(skipped);
      current.pop_back();
      used[b] = 0;
    }
    // For odd sizes one vertex stays unmatched.
    if (size % 2 == 1 && !skipped) rec(true);
    used[a] = 0;
  };
  rec(false);
  return out;
}

}  // namespace ipcover::testing
