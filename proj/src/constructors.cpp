#include "ipcover/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "base_covers.hpp"
#include "ipcover/error.hpp"
#include "ipcover/formulas.hpp"

namespace ipcover {

const char* to_string(CoverFamily f) {
  switch (f) {
    case CoverFamily::Multipartite: return "multipartite";
    case CoverFamily::Hamming2: return "hamming2";
    case CoverFamily::Hamming3: return "hamming3";
  }
  return "unknown";
}

CoverFamily cover_family_from_string(const std::string& name) {
  if (name == "multipartite") return CoverFamily::Multipartite;
  if (name == "hamming2") return CoverFamily::Hamming2;
  if (name == "hamming3") return CoverFamily::Hamming3;
  throw UnknownKey("unknown cover family '" + name + "'");
}

std::string fixture_name(const BaseCoverKey& key) {
  return std::string(to_string(key.family)) + "_" + join_ints(key.sizes, '-') + ".cover";
}

Graph base_cover_graph(const BaseCoverKey& key) {
  if (key.family == CoverFamily::Multipartite) {
    return make_complete_multipartite(PartiteSpec(key.sizes));
  }
  return make_hamming(HammingSpec(key.sizes));
}

// ---------------------------------------------------------------------------
// Embeddings

SliceEmbedding::SliceEmbedding(HammingSpec source, HammingSpec target, std::vector<int> axis,
                               std::vector<std::vector<int>> values)
    : source_(std::move(source)),
      target_(std::move(target)),
      axis_(std::move(axis)),
      values_(std::move(values)) {
  const int r = source_.dimension();
  if (target_.dimension() != r || static_cast<int>(axis_.size()) != r ||
      static_cast<int>(values_.size()) != r) {
    throw RangeError("embedding dimensions do not match");
  }
  std::vector<char> used(r, 0);
  for (int i = 0; i < r; ++i) {
    const int t = axis_[i];
    if (t < 0 || t >= r || used[t]) throw RangeError("embedding axis map is not a permutation");
    used[t] = 1;
    if (static_cast<int>(values_[i].size()) != source_.factor(i)) {
      throw RangeError("embedding value map has wrong length");
    }
    std::vector<char> hit(target_.factor(t), 0);
    for (int x : values_[i]) {
      if (x < 0 || x >= target_.factor(t)) throw RangeError("embedding leaves the target box");
      if (hit[x]) throw RangeError("embedding value map is not injective");
      hit[x] = 1;
    }
  }
}

SliceEmbedding SliceEmbedding::offset(const HammingSpec& source, const HammingSpec& target,
                                      const std::vector<int>& offsets) {
  const int r = source.dimension();
  if (static_cast<int>(offsets.size()) != r) throw RangeError("offset arity mismatch");
  std::vector<int> axis(r);
  std::iota(axis.begin(), axis.end(), 0);
  std::vector<std::vector<int>> values(r);
  for (int i = 0; i < r; ++i) {
    values[i].resize(source.factor(i));
    std::iota(values[i].begin(), values[i].end(), offsets[i]);
  }
  return SliceEmbedding(source, target, std::move(axis), std::move(values));
}

SliceEmbedding SliceEmbedding::identity(const HammingSpec& spec) {
  return offset(spec, spec, std::vector<int>(spec.dimension(), 0));
}

SliceEmbedding SliceEmbedding::permute(const HammingSpec& source, const std::vector<int>& axis) {
  const int r = source.dimension();
  if (static_cast<int>(axis.size()) != r) throw RangeError("axis map arity mismatch");
  std::vector<int> target_factors(r, 0);
  std::vector<std::vector<int>> values(r);
  for (int i = 0; i < r; ++i) {
    if (axis[i] < 0 || axis[i] >= r) throw RangeError("axis map out of range");
    target_factors[axis[i]] = source.factor(i);
    values[i].resize(source.factor(i));
    std::iota(values[i].begin(), values[i].end(), 0);
  }
  for (int f : target_factors) {
    if (f == 0) throw RangeError("axis map is not a permutation");
  }
  return SliceEmbedding(source, HammingSpec(target_factors), axis, std::move(values));
}

Vertex SliceEmbedding::map(Vertex v) const {
  const auto coords = source_.decode(v);
  std::vector<int> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) out[axis_[i]] = values_[i][coords[i]];
  return target_.encode(out);
}

Cover embed_cover(const Cover& c, const SliceEmbedding& e) {
  Cover out;
  out.provenance = c.provenance;
  out.note = c.note;
  out.paths.reserve(c.paths.size());
  for (const auto& p : c.paths) {
    Path mapped;
    mapped.vertices.reserve(p.size());
    for (Vertex v : p.vertices) mapped.vertices.push_back(e.map(v));
    out.paths.push_back(std::move(mapped));
  }
  return out;
}

namespace {

void append(Cover& into, const Cover& from) {
  into.paths.insert(into.paths.end(), from.paths.begin(), from.paths.end());
}

/// Axis map sending axis i of `from` to an axis of `to` of the same size.
std::vector<int> match_axes(const std::vector<int>& from, const std::vector<int>& to) {
  std::vector<int> axis(from.size(), -1);
  std::vector<char> used(to.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (!used[j] && to[j] == from[i]) {
        axis[i] = static_cast<int>(j);
        used[j] = 1;
        break;
      }
    }
    if (axis[i] < 0) throw InternalError("factor lists are not permutations of each other");
  }
  return axis;
}

/// Places a cover of the box `from` inside `host`, axes matched by size and
/// shifted by `offsets` (indexed by host axis).
Cover place(const Cover& c, const std::vector<int>& from, const std::vector<int>& host,
            const std::vector<int>& offsets, const std::vector<int>& host_box) {
  const auto axis = match_axes(from, host_box);
  std::vector<std::vector<int>> values(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    values[i].resize(from[i]);
    std::iota(values[i].begin(), values[i].end(), offsets[axis[i]]);
  }
  return embed_cover(c, SliceEmbedding(HammingSpec(from), HammingSpec(host), axis, values));
}

bool all_even(const std::vector<int>& f) {
  return std::all_of(f.begin(), f.end(), [](int x) { return x % 2 == 0; });
}

std::vector<int> ascending(std::vector<int> f) {
  std::sort(f.begin(), f.end());
  return f;
}

// --- base table ------------------------------------------------------------

using CoordPath = std::vector<std::vector<int>>;

CoordPath parse_coord_path(const std::string& text) {
  CoordPath out;
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    auto close = text.find(')', pos);
    out.push_back(parse_int_list(text.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  return out;
}

std::vector<CoordPath> parse_coord_paths(const detail::PathTexts& texts) {
  std::vector<CoordPath> out;
  for (const auto& t : texts) out.push_back(parse_coord_path(t));
  return out;
}

void remove_path(std::vector<CoordPath>& paths, const CoordPath& target, const std::string& where) {
  CoordPath reversed(target.rbegin(), target.rend());
  auto it = std::find_if(paths.begin(), paths.end(),
                         [&](const CoordPath& p) { return p == target || p == reversed; });
  if (it == paths.end()) throw InternalError(where + ": path to remove is not in the parent cover");
  paths.erase(it);
}

Cover encode_paths(const std::vector<CoordPath>& paths, const HammingSpec& spec) {
  Cover c;
  for (const auto& p : paths) {
    Path path;
    for (const auto& coords : p) path.vertices.push_back(spec.encode(coords));
    c.paths.push_back(std::move(path));
  }
  return c;
}

Cover tile_even(const std::vector<int>& f);

struct TableEntry {
  BaseCoverKey key;
  Cover cover;
};

class BaseTable {
 public:
  BaseTable() {
    load_hamming();
    load_multipartite();
    for (const auto& e : entries_) check(e);
  }

  const TableEntry* find(CoverFamily family, const std::vector<int>& sizes) const {
    for (const auto& e : entries_) {
      if (e.key.family == family && e.key.sizes == sizes) return &e;
    }
    return nullptr;
  }

  const std::vector<TableEntry>& entries() const { return entries_; }

 private:
  void load_hamming() {
    std::map<std::vector<int>, std::vector<CoordPath>> raw;
    const auto& delta = detail::starred_233_delta();
    for (const auto& recipe : detail::hamming_recipes()) {
      const std::string where = "base cover " + join_ints(recipe.factors);
      std::vector<CoordPath> paths;
      if (!recipe.parent.empty()) {
        paths = raw.at(recipe.parent);
        if (recipe.starred_parent) {
          for (const auto& p : parse_coord_paths(delta.removed)) remove_path(paths, p, where);
          for (auto& p : parse_coord_paths(delta.added)) paths.push_back(std::move(p));
        }
        for (const auto& p : parse_coord_paths(recipe.removed)) remove_path(paths, p, where);
      }
      for (auto& p : parse_coord_paths(recipe.added)) paths.push_back(std::move(p));
      raw[recipe.factors] = paths;

      Cover cover = encode_paths(paths, HammingSpec(recipe.factors));
      cover.provenance = Provenance::BaseTable;
      cover.note = recipe.note;
      const auto family = recipe.factors.size() == 2 ? CoverFamily::Hamming2 : CoverFamily::Hamming3;
      entries_.push_back({{family, recipe.factors}, std::move(cover)});
    }

    // Entries assembled from two smaller boxes stacked along one coordinate.
    add_composite({2, 5, 6}, 1, {2, 3, 6}, {2, 2, 6});
    add_composite({3, 3, 5}, 2, {3, 3, 2}, {3, 3, 3});
    add_composite({5, 5, 5}, 2, {5, 5, 3}, {5, 5, 2});
  }

  Cover piece(const std::vector<int>& box) const {
    if (all_even(box)) return tile_even(box);
    const auto* e = find(CoverFamily::Hamming3, ascending(box));
    if (!e) throw InternalError("composite piece " + join_ints(box) + " missing from table");
    return place(e->cover, e->key.sizes, box, std::vector<int>(box.size(), 0), box);
  }

  void add_composite(const std::vector<int>& factors, int axis, const std::vector<int>& lower,
                     const std::vector<int>& upper) {
    Cover cover;
    cover.provenance = Provenance::BaseTable;
    cover.note = join_ints(lower) + " in coordinate " + std::to_string(axis + 1) + " values 0-" +
                 std::to_string(lower[axis] - 1) + ", " + join_ints(upper) + " in values " +
                 std::to_string(lower[axis]) + "-" + std::to_string(factors[axis] - 1);
    std::vector<int> offsets(3, 0);
    append(cover, place(piece(lower), lower, factors, offsets, lower));
    offsets[axis] = lower[axis];
    append(cover, place(piece(upper), upper, factors, offsets, upper));
    entries_.push_back({{CoverFamily::Hamming3, factors}, std::move(cover)});
  }

  void load_multipartite() {
    for (const auto& fixture : detail::multipartite_fixtures()) {
      Cover cover = cover_from_string(fixture.cover);
      cover.provenance = Provenance::BaseTable;
      entries_.push_back({{CoverFamily::Multipartite, fixture.sizes}, std::move(cover)});
    }
  }

  static void check(const TableEntry& e) {
    const Graph g = base_cover_graph(e.key);
    const int expected = e.key.family == CoverFamily::Multipartite
                             ? ip_multipartite(PartiteSpec(e.key.sizes)).value
                             : ip_hamming(HammingSpec(e.key.sizes)).value;
    const auto report = verify_cover(g, e.cover);
    if (!report.valid || static_cast<int>(report.size) != expected) {
      throw InternalError("base cover " + fixture_name(e.key) + " failed verification (size " +
                          std::to_string(report.size) + ", expected " + std::to_string(expected) +
                          ")");
    }
  }

  std::vector<TableEntry> entries_;
};

const BaseTable& table() {
  static const BaseTable instance;
  return instance;
}

/// Table cover for `box` (any factor order), or nullopt.
std::optional<Cover> from_table(CoverFamily family, const std::vector<int>& box) {
  const auto* e = table().find(family, ascending(box));
  if (!e) return std::nullopt;
  return place(e->cover, e->key.sizes, box, std::vector<int>(box.size(), 0), box);
}

// --- Hamming recursion ------------------------------------------------------

Cover tile_even(const std::vector<int>& f) {
  // Raw recipe lookup; tile_even also runs while the table is being built.
  static const Cover block = [] {
    for (const auto& r : detail::hamming_recipes()) {
      if (r.factors == std::vector<int>{2, 2, 2}) {
        return encode_paths(parse_coord_paths(r.added), HammingSpec({2, 2, 2}));
      }
    }
    throw InternalError("missing (2,2,2) base cover");
  }();
  const HammingSpec source({2, 2, 2});
  const HammingSpec host(f);
  Cover out;
  for (int a = 0; a < f[0]; a += 2) {
    for (int b = 0; b < f[1]; b += 2) {
      for (int c = 0; c < f[2]; c += 2) {
        append(out, embed_cover(block, SliceEmbedding::offset(source, host, {a, b, c})));
      }
    }
  }
  return out;
}

bool exceptional(const std::vector<int>& f) {
  const auto s = ascending(f);
  return s[0] == 2 && s[1] == 2 && s[2] % 2 == 1;
}

/// (m+1)/2 cube blocks on layer pairs (0,1),(2,3),...,(m-3,m-2),(m-2,m-1) of
/// the odd coordinate; the last two blocks share layer m-2.
Cover cover_exceptional(const std::vector<int>& f) {
  const int odd_axis = static_cast<int>(
      std::find_if(f.begin(), f.end(), [](int x) { return x % 2 == 1; }) - f.begin());
  const int m = f[odd_axis];
  const auto block = *from_table(CoverFamily::Hamming3, {2, 2, 2});
  const HammingSpec source({2, 2, 2});
  const HammingSpec host(f);
  Cover out;
  std::vector<int> starts;
  for (int layer = 0; layer + 1 < m - 1; layer += 2) starts.push_back(layer);
  starts.push_back(m - 2);
  for (int start : starts) {
    std::vector<int> offsets(3, 0);
    offsets[odd_axis] = start;
    append(out, embed_cover(block, SliceEmbedding::offset(source, host, offsets)));
  }
  return out;
}

template <typename Build>
Cover split(const std::vector<int>& f, int axis, int first, Build&& build) {
  auto lower = f;
  auto upper = f;
  lower[axis] = first;
  upper[axis] = f[axis] - first;
  std::vector<int> offsets(f.size(), 0);
  Cover out = place(build(lower), lower, f, offsets, lower);
  offsets[axis] = first;
  append(out, place(build(upper), upper, f, offsets, upper));
  return out;
}

int argmax(const std::vector<int>& f) {
  return static_cast<int>(std::max_element(f.begin(), f.end()) - f.begin());
}

Cover build_hamming2(const std::vector<int>& f) {
  if (auto c = from_table(CoverFamily::Hamming2, f)) return *c;
  const int k = argmax(f);
  // Two copies of K_2 x K_m when both factors are at most 4, otherwise peel
  // off a K_3 x K_m slab.
  return split(f, k, f[k] <= 4 ? 2 : 3, build_hamming2);
}

Cover build_hamming3(const std::vector<int>& f) {
  if (all_even(f)) return tile_even(f);
  if (exceptional(f)) return cover_exceptional(f);
  if (auto c = from_table(CoverFamily::Hamming3, f)) return *c;

  const bool all_at_least_3 = std::all_of(f.begin(), f.end(), [](int x) { return x >= 3; });
  int best = -1;
  for (int k = 0; k < 3; ++k) {
    if ((f[k] >= 7 || (f[k] == 6 && all_at_least_3)) && (best < 0 || f[k] > f[best])) best = k;
  }
  if (best >= 0) return split(f, best, 4, build_hamming3);
  if (std::find(f.begin(), f.end(), 4) != f.end()) return split(f, argmax(f), 2, build_hamming3);
  throw InternalError("no construction rule for K_" + join_ints(f, 'x'));
}

void finish(Cover& c, int expected, const std::string& what) {
  if (static_cast<int>(c.paths.size()) != expected) {
    throw InternalError(what + ": constructed " + std::to_string(c.paths.size()) +
                        " paths, formula gives " + std::to_string(expected));
  }
  c.provenance = Provenance::FormulaConstruction;
  c.note = what;
}

}  // namespace

std::vector<BaseCoverKey> base_cover_keys() {
  std::vector<BaseCoverKey> keys;
  for (const auto& e : table().entries()) keys.push_back(e.key);
  return keys;
}

Cover base_cover_lookup(CoverFamily family, const std::vector<int>& key) {
  const auto* e = table().find(family, key);
  if (!e) {
    throw UnknownKey("no base cover for " + std::string(to_string(family)) + " " + join_ints(key));
  }
  return e->cover;
}

Cover cover_complete(int n) {
  if (n < 1) throw InvalidSpec("complete graph needs at least one vertex");
  Cover c;
  if (n == 1) {
    c.paths.push_back(Path{0});
  } else {
    for (int v = 0; v + 1 < n; v += 2) c.paths.push_back(Path{v, v + 1});
    if (n % 2 == 1) c.paths.push_back(Path{n - 2, n - 1});
  }
  finish(c, ip_complete(n), "K_" + std::to_string(n));
  return c;
}

Cover cover_hamming2(int n1, int n2) {
  const auto expected = ip_hamming2(n1, n2).value;
  Cover c = build_hamming2({n1, n2});
  finish(c, expected, "K_" + std::to_string(n1) + "xK_" + std::to_string(n2));
  return c;
}

Cover cover_hamming3(int n1, int n2, int n3) {
  const auto expected = ip_hamming3(n1, n2, n3).value;
  Cover c = build_hamming3({n1, n2, n3});
  finish(c, expected, "K_" + join_ints({n1, n2, n3}, 'x'));
  return c;
}

Cover cover_hamming(const HammingSpec& spec) {
  const auto& f = spec.factors();
  switch (spec.dimension()) {
    case 1: return cover_complete(f[0]);
    case 2: return cover_hamming2(f[0], f[1]);
    case 3: return cover_hamming3(f[0], f[1], f[2]);
    default: throw InvalidSpec("constructions cover products of at most 3 complete graphs");
  }
}

// ---------------------------------------------------------------------------
// Complete multipartite graphs

namespace {

/// Remaining vertices per part, largest part first (ties by part index).
struct PartState {
  std::vector<std::vector<Vertex>> parts;

  std::vector<int> order() const {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      if (!parts[i].empty()) idx.push_back(i);
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return parts[a].size() > parts[b].size(); });
    return idx;
  }

  Vertex take(int part) {
    Vertex v = parts[part].front();
    parts[part].erase(parts[part].begin());
    return v;
  }
};

/// Whether the defining inequality of `tag` holds for `spec`. Dominant and
/// many-odd can hold together, so this is weaker than comparing tags.
bool case_condition_holds(FormulaCase tag, const PartiteSpec& spec) {
  const int n = spec.vertex_count();
  const bool dominant = 3 * spec.largest() > 2 * n;
  const bool many_odd = 3 * spec.odd_parts() > n;
  switch (tag) {
    case FormulaCase::DominantPart: return dominant;
    case FormulaCase::ManyOdd: return many_odd;
    case FormulaCase::Balanced: return !dominant && !many_odd;
    default: return false;
  }
}

Path three_path(Vertex a, Vertex center, Vertex b) {
  return a < b ? Path{a, center, b} : Path{b, center, a};
}

}  // namespace

Cover cover_multipartite(const PartiteSpec& spec) {
  const auto expected = ip_multipartite(spec);
  PartState state;
  for (int i = 0, v = 0; i < spec.parts(); ++i) {
    auto& part = state.parts.emplace_back();
    for (int k = 0; k < spec.sizes()[i]; ++k) part.push_back(v++);
  }

  Cover c;
  const FormulaCase initial = expected.case_tag;
  while (true) {
    const auto order = state.order();
    if (order.size() < 2) throw InternalError("multipartite reduction lost a part");
    std::vector<int> sizes;
    for (int i : order) sizes.push_back(static_cast<int>(state.parts[i].size()));
    const PartiteSpec current(sizes);
    const FormulaCase tag = classify_multipartite(current);
    if (!case_condition_holds(initial, current)) {
      throw InternalError("reduction of " + join_ints(spec.sizes()) + " left its case at " +
                          join_ints(sizes));
    }
    const int n = current.vertex_count();
    auto& first = state.parts[order[0]];

    if (tag == FormulaCase::DominantPart && n - current.largest() == 1) {
      const Vertex hub = state.parts[order[1]].front();
      for (std::size_t k = 0; k + 1 < first.size(); k += 2) {
        c.paths.push_back(three_path(first[k], hub, first[k + 1]));
      }
      if (first.size() % 2 == 1) {
        c.paths.push_back(Path{std::min(first.back(), hub), std::max(first.back(), hub)});
      }
      break;
    }
    if (tag == FormulaCase::ManyOdd && n == current.odd_parts()) {
      std::vector<Vertex> rest;
      for (int i : order) rest.push_back(state.parts[i].front());
      std::sort(rest.begin(), rest.end());
      const Cover k = cover_complete(n);
      for (const auto& p : k.paths) {
        Path mapped;
        for (Vertex v : p.vertices) mapped.vertices.push_back(rest[v]);
        c.paths.push_back(std::move(mapped));
      }
      break;
    }
    if (tag == FormulaCase::ManyOdd && sizes == std::vector<int>{2, 1, 1}) {
      Vertex b = state.parts[order[1]].front();
      Vertex d = state.parts[order[2]].front();
      if (d < b) std::swap(b, d);
      c.paths.push_back(three_path(first[0], b, first[1]));
      c.paths.push_back(Path{b, d});
      break;
    }
    if (tag == FormulaCase::Balanced && n <= 8) {
      const auto* e = table().find(CoverFamily::Multipartite, sizes);
      if (!e) throw InternalError("no base cover for balanced " + join_ints(sizes));
      for (const auto& p : e->cover.paths) {
        Path mapped;
        for (Vertex v : p.vertices) {
          const int part = current.part_of(v);
          mapped.vertices.push_back(state.parts[order[part]][v - current.part_offset(part)]);
        }
        c.paths.push_back(mapped.canonical());
      }
      break;
    }

    // Peel off a 3-path: two vertices of the largest part around one vertex
    // of a second part chosen by the case.
    int second = 1;
    if (tag == FormulaCase::ManyOdd || tag == FormulaCase::Balanced) {
      second = -1;
      for (int j = static_cast<int>(order.size()) - 1; j >= 1; --j) {
        if (sizes[j] % 2 == 1) {
          second = j;
          break;
        }
      }
      if (second < 0) {
        if (tag == FormulaCase::ManyOdd) throw InternalError("many-odd step found no odd part");
        second = static_cast<int>(order.size()) - 1;
      }
    }
    const Vertex a = state.take(order[0]);
    const Vertex b = state.take(order[0]);
    const Vertex center = state.take(order[second]);
    c.paths.push_back(three_path(a, center, b));
  }

  finish(c, expected.value, "K_{" + join_ints(spec.sizes()) + "}");
  return c;
}

Cover normalize_multipartite_cover(const Graph& g, Cover c) {
  for (auto& p : c.paths) {
    if (p.size() == 1 && !g.neighbors(p.front()).empty()) {
      const Vertex w = g.neighbors(p.front()).front();
      p = Path{std::min(p.front(), w), std::max(p.front(), w)};
    }
  }
  std::vector<char> endpoint(g.vertex_count(), 0);
  for (auto& p : c.paths) {
    if (p.size() != 3) continue;
    const Vertex a = p.front();
    const Vertex b = p.back();
    if (endpoint[a]) {
      p = Path{std::min(p.vertices[1], b), std::max(p.vertices[1], b)};
    } else if (endpoint[b]) {
      p = Path{std::min(a, p.vertices[1]), std::max(a, p.vertices[1])};
    } else {
      endpoint[a] = endpoint[b] = 1;
    }
  }
  return c;
}

}  // namespace ipcover
