#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipcover/graph.hpp"

namespace ipcover {

/// Ordered vertex sequence claimed to be an isometric path. Adjacency and
/// geodesicity are only checked by the verifier.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  Path(std::initializer_list<Vertex> vs) : vertices(vs) {}
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  /// Orientation with the smaller endpoint first.
  Path canonical() const;
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.vertices <=> b.vertices; }
};

enum class Provenance { FormulaConstruction, ExactSolver, File, BaseTable };

const char* to_string(Provenance p);

struct Cover {
  std::vector<Path> paths;
  Provenance provenance = Provenance::File;
  std::string note;

  std::size_t size() const { return paths.size(); }
};

std::size_t cover_size(const Cover& c);
/// Sorted union of all path vertices.
std::vector<Vertex> covered_set(const Cover& c);

/// Paths in canonical orientation, sorted. Two covers are the same certificate
/// iff their canonical forms compare equal.
std::vector<Path> canonical_paths(const Cover& c);

struct PathVerdict {
  bool simple = false;
  bool walk = false;  // consecutive vertices adjacent
  bool isometric = false;

  bool ok() const { return simple && walk && isometric; }
};

struct VerifyOptions {
  /// Also require multipartite normal form: only 2- and 3-vertex paths, and
  /// no two 3-vertex paths sharing an endpoint.
  bool strict_normal_form = false;
};

struct VerifyReport {
  bool valid = false;
  std::vector<PathVerdict> path_verdicts;
  std::vector<Vertex> uncovered;
  std::size_t size = 0;
  /// Sum over vertices of (times covered - 1); diagnostics only.
  std::size_t overlap = 0;
  /// Set only in strict mode.
  std::optional<bool> normal_form;
  /// Paths that referenced vertices outside the graph.
  std::vector<std::size_t> out_of_range_paths;
};

/// Throws RangeError if `p` mentions a vertex outside the graph.
bool is_isometric_path(const Graph& g, const DistanceMatrix& d, const Path& p);

PathVerdict check_path(const Graph& g, const DistanceMatrix& d, const Path& p);

VerifyReport verify_cover(const Graph& g, const Cover& c, const VerifyOptions& options = {});
VerifyReport verify_cover(const Graph& g, const DistanceMatrix& d, const Cover& c,
                          const VerifyOptions& options = {});

/// Normal form check in isolation (see VerifyOptions::strict_normal_form).
bool is_normal_form(const Cover& c);

/// One-line summary followed by one line per failing path.
void write_report(std::ostream& out, const Graph& g, const VerifyReport& report);

// Cover text format: one path per line, space-separated indices, '#' comments.
// The labeled variant writes Hamming coordinate tuples instead of indices.
void write_cover(std::ostream& out, const Cover& c);
std::string cover_to_string(const Cover& c);
void write_labeled_cover(std::ostream& out, const Cover& c, const HammingSpec& spec);

/// Accepts both plain and labeled lines; labeled lines need `spec`.
Cover read_cover(std::istream& in, const std::optional<HammingSpec>& spec = std::nullopt);
Cover cover_from_string(const std::string& text,
                        const std::optional<HammingSpec>& spec = std::nullopt);

/// Parses one labeled path such as "(0,0,0)(0,0,1) (0,1,1)".
Path parse_labeled_path(const std::string& text, const HammingSpec& spec);

}  // namespace ipcover
