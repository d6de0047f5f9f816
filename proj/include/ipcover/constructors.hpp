#pragma once

#include <string>
#include <vector>

#include "ipcover/cover.hpp"
#include "ipcover/graph.hpp"

namespace ipcover {

enum class CoverFamily { Multipartite, Hamming2, Hamming3 };

const char* to_string(CoverFamily f);
/// Accepts "multipartite", "hamming2", "hamming3".
CoverFamily cover_family_from_string(const std::string& name);

struct BaseCoverKey {
  CoverFamily family;
  std::vector<int> sizes;  // ascending for Hamming, non-increasing for multipartite

  friend bool operator==(const BaseCoverKey&, const BaseCoverKey&) = default;
};

/// Keys of every stored base cover, in table order.
std::vector<BaseCoverKey> base_cover_keys();

/// Deep copy of a stored base cover, indexed on the graph of its key
/// (make_hamming over the ascending factors, or the complete multipartite
/// graph). Throws UnknownKey.
Cover base_cover_lookup(CoverFamily family, const std::vector<int>& key);

/// "<family>_<sizes joined by '-'>.cover"
std::string fixture_name(const BaseCoverKey& key);

/// Graph a base cover lives on.
Graph base_cover_graph(const BaseCoverKey& key);

/// Injective coordinate-wise map from a small Hamming box into a larger one.
/// Source axis i lands on target axis `axis[i]`, value x on `values[i][x]`.
/// The image is a coordinate box, hence an isometric subgraph.
class SliceEmbedding {
 public:
  /// Throws RangeError if the maps are not injective or leave the target.
  SliceEmbedding(HammingSpec source, HammingSpec target, std::vector<int> axis,
                 std::vector<std::vector<int>> values);

  /// Same axis order, each coordinate shifted by `offsets[i]`.
  static SliceEmbedding offset(const HammingSpec& source, const HammingSpec& target,
                               const std::vector<int>& offsets);
  static SliceEmbedding identity(const HammingSpec& spec);
  /// Relabels axes: source axis i becomes target axis `axis[i]`.
  static SliceEmbedding permute(const HammingSpec& source, const std::vector<int>& axis);

  const HammingSpec& source() const { return source_; }
  const HammingSpec& target() const { return target_; }
  Vertex map(Vertex v) const;

 private:
  HammingSpec source_;
  HammingSpec target_;
  std::vector<int> axis_;
  std::vector<std::vector<int>> values_;
};

/// Maps every path vertex through the embedding; path structure is kept.
Cover embed_cover(const Cover& c, const SliceEmbedding& e);

/// Cover of K_{n_1,...,n_r} (r >= 2) with ip_multipartite paths, in normal
/// form. Vertices are indexed as in make_complete_multipartite.
Cover cover_multipartite(const PartiteSpec& spec);

/// Cover of K_n with ceil(n/2) edges (or one singleton for n = 1).
Cover cover_complete(int n);

/// Cover of K_{n1} x K_{n2} with ceil(n1 n2 / 3) paths, indexed as in
/// make_hamming(HammingSpec({n1, n2})).
Cover cover_hamming2(int n1, int n2);

/// Cover of K_{n1} x K_{n2} x K_{n3} matching ip_hamming3, indexed as in
/// make_hamming(HammingSpec({n1, n2, n3})).
Cover cover_hamming3(int n1, int n2, int n3);

/// Dispatch on dimension 1..3.
Cover cover_hamming(const HammingSpec& spec);

/// Rewrites a multipartite cover into normal form without growing it: a
/// singleton gains a neighbour, and when two 3-vertex paths share an
/// endpoint the later one drops that endpoint.
Cover normalize_multipartite_cover(const Graph& g, Cover c);

}  // namespace ipcover
