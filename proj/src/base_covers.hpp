#pragma once

// Raw base-cover data. Internal to the library; use base_cover_lookup().

#include <string>
#include <vector>

namespace ipcover::detail {

/// A cover written as one labeled path per string, e.g.
/// "(0,0,0)(0,0,1)(0,1,1)(1,1,1)".
using PathTexts = std::vector<std::string>;

struct HammingRecipe {
  std::vector<int> factors;  // ascending
  /// Empty, or the factors of an earlier recipe this one edits.
  std::vector<int> parent;
  /// Apply starred_233_delta() to the parent before this recipe's edits.
  bool starred_parent = false;
  PathTexts removed;
  PathTexts added;
  std::string note;
};

/// Transcribed covers for products of two and three complete graphs, in
/// dependency order (a parent always precedes the recipes that edit it).
const std::vector<HammingRecipe>& hamming_recipes();

/// Two 3-factor paths of C(2,3,3) replaced by their extensions into layers 3
/// and 4 of the third coordinate; only meaningful inside hosts with a third
/// factor of at least 5.
const HammingRecipe& starred_233_delta();

struct MultipartiteFixture {
  std::vector<int> sizes;  // non-increasing
  /// Cover text (plain vertex indices) on make_complete_multipartite(sizes).
  const char* cover;
};

/// Frozen exact-solver covers for every balanced spec with at most 8
/// vertices, already in normal form.
const std::vector<MultipartiteFixture>& multipartite_fixtures();

}  // namespace ipcover::detail
