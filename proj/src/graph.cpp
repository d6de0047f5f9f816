#include "ipcover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "ipcover/error.hpp"

namespace ipcover {

Graph::Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
             std::vector<std::string> labels, std::string description)
    : adjacency_(vertex_count < 0 ? 0 : vertex_count),
      labels_(std::move(labels)),
      description_(std::move(description)) {
  if (vertex_count < 0) throw InvalidInput("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count) {
    throw InvalidInput("label count does not match vertex count");
  }
  for (auto [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw RangeError("edge endpoint out of range: " + std::to_string(u) + "-" +
                       std::to_string(v));
    }
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidInput("duplicate edge");
    }
  }
  edge_count_ = static_cast<std::int64_t>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------

PartiteSpec::PartiteSpec(std::vector<int> sizes) : input_order_(sizes) {
  if (sizes.empty()) throw InvalidSpec("multipartite spec needs at least one part");
  for (int s : sizes) {
    if (s < 1) throw InvalidSpec("part sizes must be positive, got " + std::to_string(s));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  sizes_ = std::move(sizes);
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

int PartiteSpec::odd_parts() const {
  return static_cast<int>(std::count_if(sizes_.begin(), sizes_.end(),
                                        [](int s) { return s % 2 == 1; }));
}

int PartiteSpec::part_offset(int i) const {
  if (i < 0 || i > parts()) throw RangeError("part index out of range");
  return std::accumulate(sizes_.begin(), sizes_.begin() + i, 0);
}

int PartiteSpec::part_of(Vertex v) const {
  if (v < 0 || v >= total_) throw RangeError("vertex out of range");
  int offset = 0;
  for (int i = 0; i < parts(); ++i) {
    offset += sizes_[i];
    if (v < offset) return i;
  }
  return parts() - 1;
}

HammingSpec::HammingSpec(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidSpec("Hamming spec needs at least one factor");
  for (int f : factors_) {
    if (f < 2) throw InvalidSpec("Hamming factors must be >= 2, got " + std::to_string(f));
    if (total_ > std::numeric_limits<int>::max() / f) {
      throw InvalidSpec("Hamming graph too large");
    }
    total_ *= f;
  }
}

Vertex HammingSpec::encode(const std::vector<int>& coords) const {
  if (coords.size() != factors_.size()) {
    throw RangeError("coordinate tuple " + format_coords(coords) + " has wrong arity");
  }
  Vertex index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors_[i]) {
      throw RangeError("coordinate tuple " + format_coords(coords) + " out of range");
    }
    index = index * factors_[i] + coords[i];
  }
  return index;
}

std::vector<int> HammingSpec::decode(Vertex index) const {
  if (index < 0 || index >= total_) throw RangeError("vertex index out of range");
  std::vector<int> coords(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    coords[i] = index % factors_[i];
    index /= factors_[i];
  }
  return coords;
}

// ---------------------------------------------------------------------------

namespace {

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto first = token.data();
  auto last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw FormatError(std::string("malformed ") + what + ": '" + std::string(token) + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(parse_int(trim(token), "integer list"));
    } catch (const FormatError& e) {
      throw InvalidSpec(e.what());
    }
  }
  if (out.empty()) throw InvalidSpec("empty integer list");
  return out;
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_coords(const std::vector<int>& coords) {
  return "(" + join_ints(coords) + ")";
}

Pairings parse_pairings(const std::string& text) {
  Pairings out;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    auto& list = out.emplace_back();
    std::stringstream pairs(part);
    std::string pair;
    while (std::getline(pairs, pair, ',')) {
      pair = trim(pair);
      if (pair.empty()) continue;
      auto dash = pair.find('-');
      if (dash == std::string::npos) throw InvalidPairing("malformed pair '" + pair + "'");
      try {
        list.emplace_back(parse_int(trim(pair.substr(0, dash)), "pair"),
                          parse_int(trim(pair.substr(dash + 1)), "pair"));
      } catch (const FormatError& e) {
        throw InvalidPairing(e.what());
      }
    }
  }
  // A trailing ';' denotes an empty list for the last part.
  if (!text.empty() && text.back() == ';') out.emplace_back();
  return out;
}

Graph make_complete_multipartite(const PartiteSpec& spec) {
  return make_augmented_multipartite(spec, {});
}

Graph make_augmented_multipartite(const PartiteSpec& spec, const Pairings& pairings) {
  const bool augmented = !pairings.empty();
  if (augmented && static_cast<int>(pairings.size()) != spec.parts()) {
    throw InvalidPairing("expected one pairing list per part (" +
                         std::to_string(spec.parts()) + "), got " +
                         std::to_string(pairings.size()));
  }
  const int n = spec.vertex_count();
  std::vector<int> part(n);
  std::vector<std::string> labels(n);
  for (int i = 0, v = 0; i < spec.parts(); ++i) {
    for (int k = 0; k < spec.sizes()[i]; ++k, ++v) {
      part[v] = i;
      labels[v] = std::to_string(i) + ":" + std::to_string(k);
    }
  }

  // partner[v] = the vertex that must stay non-adjacent to v, or -1.
  std::vector<Vertex> partner(n, -1);
  if (augmented) {
    for (int i = 0; i < spec.parts(); ++i) {
      const int size = spec.sizes()[i];
      const int base = spec.part_offset(i);
      if (static_cast<int>(pairings[i].size()) != size / 2) {
        throw InvalidPairing("part " + std::to_string(i) + " of size " +
                             std::to_string(size) + " needs exactly " +
                             std::to_string(size / 2) + " pairs");
      }
      for (auto [a, b] : pairings[i]) {
        if (a < 0 || b < 0 || a >= size || b >= size || a == b) {
          throw InvalidPairing("pair " + std::to_string(a) + "-" + std::to_string(b) +
                               " out of range for part " + std::to_string(i));
        }
        if (partner[base + a] != -1 || partner[base + b] != -1) {
          throw InvalidPairing("overlapping pairs in part " + std::to_string(i));
        }
        partner[base + a] = base + b;
        partner[base + b] = base + a;
      }
    }
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (part[u] != part[v] || (augmented && partner[u] != v)) edges.emplace_back(u, v);
    }
  }

  std::string description = (augmented ? "augmented " : "multipartite ") + join_ints(spec.sizes());
  if (augmented) {
    description += " pairs ";
    for (int i = 0; i < spec.parts(); ++i) {
      if (i) description += ';';
      for (std::size_t k = 0; k < pairings[i].size(); ++k) {
        if (k) description += ',';
        description += std::to_string(pairings[i][k].first) + "-" +
                       std::to_string(pairings[i][k].second);
      }
    }
  }
  return Graph(n, edges, std::move(labels), std::move(description));
}

Graph make_hamming(const HammingSpec& spec) {
  const int n = spec.vertex_count();
  std::vector<std::string> labels(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto coords = spec.decode(u);
    labels[u] = format_coords(coords);
    // Neighbours differ in exactly one coordinate; emit only the larger ones.
    for (int axis = 0; axis < spec.dimension(); ++axis) {
      const int original = coords[axis];
      for (int value = original + 1; value < spec.factor(axis); ++value) {
        coords[axis] = value;
        edges.emplace_back(u, spec.encode(coords));
      }
      coords[axis] = original;
    }
  }
  return Graph(n, edges, std::move(labels), "hamming " + join_ints(spec.factors()));
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int d : data_) best = std::max(best, d);
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceMatrix dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    dist.at(s, s) = 0;
    while (head < tail) {
      Vertex u = queue[head++];
      const int du = dist(s, u);
      for (Vertex w : g.neighbors(u)) {
        if (dist(s, w) == DistanceMatrix::kUnreachable) {
          dist.at(s, w) = du + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return dist;
}

// ---------------------------------------------------------------------------

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (!g.description().empty()) {
    std::stringstream lines(g.description());
    std::string line;
    while (std::getline(lines, line)) out << "c " << line << '\n';
  }
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::int64_t m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string description;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(line_no) + ")"; };
    if (line[0] == 'c' && (line.size() == 1 || line[1] == ' ')) {
      if (!description.empty()) description += '\n';
      description += line.size() > 2 ? line.substr(2) : std::string();
      continue;
    }
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (n >= 0) throw FormatError("duplicate 'p' line" + where());
      if (!(fields >> n >> m) || n < 0 || m < 0) throw FormatError("malformed 'p' line" + where());
    } else if (tag == "e") {
      if (n < 0) throw FormatError("edge before 'p' line" + where());
      Vertex u = 0, v = 0;
      if (!(fields >> u >> v)) throw FormatError("malformed 'e' line" + where());
      if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge endpoint out of range" + where());
      edges.emplace_back(u, v);
    } else {
      throw FormatError("unknown line tag '" + tag + "'" + where());
    }
    std::string rest;
    if (fields >> rest) throw FormatError("trailing data" + where());
  }
  if (n < 0) throw FormatError("missing 'p' line");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw FormatError("header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  try {
    return Graph(n, edges, {}, std::move(description));
  } catch (const FormatError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw FormatError(e.what());
  }
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_dot(std::ostream& out, const Graph& g,
               const std::vector<std::vector<Vertex>>& highlight) {
  static const char* kPalette[] = {"red",    "blue",  "darkgreen", "orange", "purple",
                                   "brown",  "cyan",  "magenta",   "gold",   "navy"};
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << " [color=gray];\n";
  for (std::size_t i = 0; i < highlight.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    const auto& path = highlight[i];
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      out << "  " << path[k] << " -- " << path[k + 1] << " [color=" << color
          << ", penwidth=3];\n";
    }
  }
  out << "}\n";
}

}  // namespace ipcover
