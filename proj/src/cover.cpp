#include "ipcover/cover.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ipcover/error.hpp"

namespace ipcover {

Path Path::canonical() const {
  if (!vertices.empty() && vertices.back() < vertices.front()) return reversed();
  return *this;
}

Path Path::reversed() const { return Path(std::vector<Vertex>(vertices.rbegin(), vertices.rend())); }

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::FormulaConstruction: return "formula-construction";
    case Provenance::ExactSolver: return "exact-solver";
    case Provenance::File: return "file";
    case Provenance::BaseTable: return "base-table";
  }
  return "unknown";
}

std::size_t cover_size(const Cover& c) { return c.paths.size(); }

std::vector<Vertex> covered_set(const Cover& c) {
  std::vector<Vertex> out;
  for (const auto& p : c.paths) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Path> canonical_paths(const Cover& c) {
  std::vector<Path> out;
  out.reserve(c.paths.size());
  for (const auto& p : c.paths) out.push_back(p.canonical());
  std::sort(out.begin(), out.end());
  return out;
}

PathVerdict check_path(const Graph& g, const DistanceMatrix& d, const Path& p) {
  for (Vertex v : p.vertices) {
    if (!g.contains(v)) throw RangeError("path vertex " + std::to_string(v) + " out of range");
  }
  PathVerdict verdict;
  if (p.empty()) return verdict;

  auto sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  verdict.simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  verdict.walk = true;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) {
      verdict.walk = false;
      break;
    }
  }

  const int length = static_cast<int>(p.size()) - 1;
  verdict.isometric = verdict.simple && verdict.walk && d(p.front(), p.back()) == length;
  return verdict;
}

bool is_isometric_path(const Graph& g, const DistanceMatrix& d, const Path& p) {
  return check_path(g, d, p).ok();
}

bool is_normal_form(const Cover& c) {
  std::vector<Vertex> endpoints;
  for (const auto& p : c.paths) {
    if (p.size() < 2 || p.size() > 3) return false;
    if (p.size() == 3) {
      endpoints.push_back(p.front());
      endpoints.push_back(p.back());
    }
  }
  std::sort(endpoints.begin(), endpoints.end());
  return std::adjacent_find(endpoints.begin(), endpoints.end()) == endpoints.end();
}

VerifyReport verify_cover(const Graph& g, const Cover& c, const VerifyOptions& options) {
  return verify_cover(g, all_pairs_distances(g), c, options);
}

VerifyReport verify_cover(const Graph& g, const DistanceMatrix& d, const Cover& c,
                          const VerifyOptions& options) {
  VerifyReport report;
  report.size = c.paths.size();
  std::vector<int> hits(g.vertex_count(), 0);
  bool all_ok = true;
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const auto& p = c.paths[i];
    const bool in_range = std::all_of(p.vertices.begin(), p.vertices.end(),
                                      [&](Vertex v) { return g.contains(v); });
    if (!in_range) {
      report.out_of_range_paths.push_back(i);
      report.path_verdicts.emplace_back();
      all_ok = false;
      continue;
    }
    auto verdict = check_path(g, d, p);
    all_ok = all_ok && verdict.ok();
    report.path_verdicts.push_back(verdict);
    auto distinct = p.vertices;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v : distinct) ++hits[v];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (hits[v] == 0) report.uncovered.push_back(v);
    else report.overlap += static_cast<std::size_t>(hits[v] - 1);
  }
  report.valid = all_ok && report.uncovered.empty();
  if (options.strict_normal_form) {
    report.normal_form = is_normal_form(c);
    report.valid = report.valid && *report.normal_form;
  }
  return report;
}

void write_report(std::ostream& out, const Graph& g, const VerifyReport& report) {
  out << "valid=" << (report.valid ? "true" : "false") << " size=" << report.size
      << " uncovered=" << report.uncovered.size() << " overlap=" << report.overlap;
  if (report.normal_form) out << " normal_form=" << (*report.normal_form ? "true" : "false");
  out << '\n';
  for (std::size_t i = 0; i < report.path_verdicts.size(); ++i) {
    const auto& v = report.path_verdicts[i];
    if (v.ok()) continue;
    out << "path " << i << ":";
    if (std::find(report.out_of_range_paths.begin(), report.out_of_range_paths.end(), i) !=
        report.out_of_range_paths.end()) {
      out << " out-of-range\n";
      continue;
    }
    out << " simple=" << (v.simple ? "yes" : "no") << " walk=" << (v.walk ? "yes" : "no")
        << " isometric=" << (v.isometric ? "yes" : "no") << '\n';
  }
  if (!report.uncovered.empty()) {
    out << "uncovered:";
    for (Vertex v : report.uncovered) out << ' ' << g.label(v);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view kProvenanceKey = "provenance=";

void write_header(std::ostream& out, const Cover& c) {
  out << "# " << kProvenanceKey << to_string(c.provenance) << '\n';
  if (!c.note.empty()) {
    std::istringstream lines(c.note);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
  }
}

}  // namespace

void write_cover(std::ostream& out, const Cover& c) {
  write_header(out, c);
  for (const auto& p : c.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << p.vertices[i];
    }
    out << '\n';
  }
}

std::string cover_to_string(const Cover& c) {
  std::ostringstream out;
  write_cover(out, c);
  return out.str();
}

void write_labeled_cover(std::ostream& out, const Cover& c, const HammingSpec& spec) {
  write_header(out, c);
  for (const auto& p : c.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << format_coords(spec.decode(p.vertices[i]));
    }
    out << '\n';
  }
}

Path parse_labeled_path(const std::string& text, const HammingSpec& spec) {
  Path path;
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t\r", pos);
    if (pos == std::string::npos) break;
    if (text[pos] != '(') throw FormatError("expected '(' in labeled path: " + text);
    auto close = text.find(')', pos);
    if (close == std::string::npos) throw FormatError("unterminated tuple in: " + text);
    std::vector<int> coords;
    try {
      coords = parse_int_list(text.substr(pos + 1, close - pos - 1));
    } catch (const InvalidSpec& e) {
      throw FormatError(std::string("bad coordinate tuple: ") + e.what());
    }
    path.vertices.push_back(spec.encode(coords));
    pos = close + 1;
  }
  return path;
}

Cover read_cover(std::istream& in, const std::optional<HammingSpec>& spec) {
  Cover cover;
  cover.provenance = Provenance::File;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto text = line.substr(first + 1);
      if (!text.empty() && text[0] == ' ') text.erase(0, 1);
      if (text.rfind(kProvenanceKey, 0) == 0) continue;
      if (!cover.note.empty()) cover.note += '\n';
      cover.note += text;
      continue;
    }
    if (line[first] == '(') {
      if (!spec) throw FormatError("labeled path needs a Hamming spec (line " +
                                   std::to_string(line_no) + ")");
      cover.paths.push_back(parse_labeled_path(line, *spec));
      continue;
    }
    std::istringstream fields(line);
    Path path;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long value = 0;
      try {
        value = std::stol(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0 || value > std::numeric_limits<int>::max()) {
        throw FormatError("bad vertex '" + token + "' on line " + std::to_string(line_no));
      }
      path.vertices.push_back(static_cast<Vertex>(value));
    }
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

Cover cover_from_string(const std::string& text, const std::optional<HammingSpec>& spec) {
  std::istringstream in(text);
  return read_cover(in, spec);
}

}  // namespace ipcover
