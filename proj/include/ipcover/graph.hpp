#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ipcover {

using Vertex = int;

/// Immutable simple undirected graph stored as sorted adjacency lists.
///
/// Vertex labels are optional display strings; generators fill them with
/// coordinate tuples ("(0,1,2)") or "part:offset" pairs. The description is
/// a single free-form line written as a `c` comment by the text writer.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `vertex_count` vertices. Edges may be given in any
  /// order and orientation; duplicates and self-loops are rejected.
  Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
        std::vector<std::string> labels = {}, std::string description = {});

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of `v`, or its decimal index when no labels are attached.
  std::string label(Vertex v) const;
  const std::string& description() const { return description_; }

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::string description_;
  std::int64_t edge_count_ = 0;
};

/// Part sizes of a complete multipartite graph, kept sorted non-increasing.
class PartiteSpec {
 public:
  /// Throws InvalidSpec on an empty list or a non-positive size.
  explicit PartiteSpec(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  /// Sizes in the order they were supplied.
  const std::vector<int>& input_order() const { return input_order_; }
  int parts() const { return static_cast<int>(sizes_.size()); }
  int vertex_count() const { return total_; }
  int odd_parts() const;
  int largest() const { return sizes_.front(); }

  /// First vertex index of part `i` (parts laid out in sorted order).
  int part_offset(int i) const;
  /// Part owning vertex `v`.
  int part_of(Vertex v) const;

  friend bool operator==(const PartiteSpec& a, const PartiteSpec& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> input_order_;
  int total_ = 0;
};

/// Factor sizes of a Hamming graph K_{n_1} x ... x K_{n_r}.
class HammingSpec {
 public:
  /// Throws InvalidSpec when the list is empty or a factor is below 2.
  explicit HammingSpec(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int dimension() const { return static_cast<int>(factors_.size()); }
  int factor(int axis) const { return factors_.at(axis); }
  int vertex_count() const { return total_; }

  /// Mixed-radix index, first coordinate most significant.
  Vertex encode(const std::vector<int>& coords) const;
  std::vector<int> decode(Vertex index) const;

  friend bool operator==(const HammingSpec& a, const HammingSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  int total_ = 1;
};

/// Parses "3,3,2" into integers. Throws InvalidSpec on malformed input.
std::vector<int> parse_int_list(const std::string& text);
std::string join_ints(const std::vector<int>& values, char sep = ',');
std::string format_coords(const std::vector<int>& coords);

/// Pairs of within-part offsets that stay non-adjacent, one list per part.
using Pairings = std::vector<std::vector<std::pair<int, int>>>;

Graph make_complete_multipartite(const PartiteSpec& spec);

/// Complete multipartite graph plus every intra-part edge except the
/// designated pairs. Pairings index parts in sorted order and vertices by
/// their offset inside the part.
Graph make_augmented_multipartite(const PartiteSpec& spec, const Pairings& pairings);

Graph make_hamming(const HammingSpec& spec);

/// Parses "0-1,2-3;0-1" (parts separated by ';').
Pairings parse_pairings(const std::string& text);

/// Row-major table of BFS distances.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int size() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return data_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return data_[index(u, v)]; }

  /// Largest finite distance; kUnreachable if any pair is disconnected.
  int diameter() const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  int n_ = 0;
  std::vector<int> data_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Graph text format:
//   p <n> <m>
//   c <comment>          (optional)
//   e <u> <v>            (m lines, u < v, sorted)
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);
/// Throws FormatError on malformed input.
Graph read_graph(std::istream& in);
Graph graph_from_string(const std::string& text);

/// Graphviz rendering, optionally highlighting paths in distinct colors.
void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::vector<Vertex>>& highlight = {});

}  // namespace ipcover
