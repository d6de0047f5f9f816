#pragma once

#include <string>
#include <vector>

#include "ipcover/graph.hpp"

namespace ipcover {

enum class FormulaCase {
  DominantPart,
  ManyOdd,
  Balanced,
  Complete,
  Hamming2,
  Hamming3Main,
  Hamming3Exceptional,
};

/// Upper-case tag as printed by the CLI, e.g. "DOMINANT_PART".
const char* to_string(FormulaCase c);

struct FormulaResult {
  int value = 0;
  FormulaCase case_tag = FormulaCase::Balanced;
  std::vector<int> inputs;
};

constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

int odd_part_count(const PartiteSpec& spec);

/// Which closed form applies, checked in the order dominant part, many odd
/// parts, balanced. Throws InvalidSpec for a single part.
FormulaCase classify_multipartite(const PartiteSpec& spec);

/// Isometric path number of K_{n_1,...,n_r}, r >= 2. When the dominant-part
/// and many-odd conditions hold together both closed forms are evaluated and
/// must agree (FormulaConflict otherwise).
FormulaResult ip_multipartite(const PartiteSpec& spec);

/// ceil(n/2) for K_n.
int ip_complete(int n);

FormulaResult ip_hamming2(int n1, int n2);

/// Order-insensitive. Two factors equal to 2 with an odd third factor is the
/// exceptional family with one path above ceil(n/4).
FormulaResult ip_hamming3(int n1, int n2, int n3);

/// Dispatches on the spec's dimension (1, 2 or 3).
FormulaResult ip_hamming(const HammingSpec& spec);

/// ceil(n / (r+1)); an isometric path visits at most r+1 vertices.
int ip_lower_bound_hamming(const HammingSpec& spec);

/// ceil(n / 3); diameter 2 caps isometric paths at 3 vertices.
int ip_lower_bound_multipartite(const PartiteSpec& spec);

}  // namespace ipcover
