#include "ipcover/formulas.hpp"

#include <algorithm>

#include "ipcover/error.hpp"

namespace ipcover {

const char* to_string(FormulaCase c) {
  switch (c) {
    case FormulaCase::DominantPart: return "DOMINANT_PART";
    case FormulaCase::ManyOdd: return "MANY_ODD";
    case FormulaCase::Balanced: return "BALANCED";
    case FormulaCase::Complete: return "COMPLETE";
    case FormulaCase::Hamming2: return "HAMMING2";
    case FormulaCase::Hamming3Main: return "HAMMING3_MAIN";
    case FormulaCase::Hamming3Exceptional: return "HAMMING3_EXCEPTIONAL";
  }
  return "UNKNOWN";
}

int odd_part_count(const PartiteSpec& spec) { return spec.odd_parts(); }

namespace {

bool dominant(const PartiteSpec& s) { return 3 * s.largest() > 2 * s.vertex_count(); }
bool many_odd(const PartiteSpec& s) { return 3 * s.odd_parts() > s.vertex_count(); }

void require_two_factors(std::initializer_list<int> factors) {
  for (int f : factors) {
    if (f < 2) throw InvalidSpec("Hamming factors must be >= 2, got " + std::to_string(f));
  }
}

}  // namespace

FormulaCase classify_multipartite(const PartiteSpec& spec) {
  if (spec.parts() < 2) {
    throw InvalidSpec("multipartite formula needs at least two parts");
  }
  if (dominant(spec)) return FormulaCase::DominantPart;
  if (many_odd(spec)) return FormulaCase::ManyOdd;
  return FormulaCase::Balanced;
}

FormulaResult ip_multipartite(const PartiteSpec& spec) {
  const FormulaCase tag = classify_multipartite(spec);
  const int n = spec.vertex_count();
  const int alpha = spec.odd_parts();
  FormulaResult result{0, tag, spec.sizes()};
  switch (tag) {
    case FormulaCase::DominantPart:
      result.value = ceil_div(spec.largest(), 2);
      if (many_odd(spec) && result.value != ceil_div(n + alpha, 4)) {
        throw FormulaConflict("dominant-part and many-odd values disagree for " +
                              join_ints(spec.sizes()));
      }
      break;
    case FormulaCase::ManyOdd:
      result.value = ceil_div(n + alpha, 4);
      break;
    default:
      result.value = ceil_div(n, 3);
      break;
  }
  return result;
}

int ip_complete(int n) {
  if (n < 1) throw InvalidSpec("complete graph needs at least one vertex");
  return ceil_div(n, 2);
}

FormulaResult ip_hamming2(int n1, int n2) {
  require_two_factors({n1, n2});
  return {ceil_div(n1 * n2, 3), FormulaCase::Hamming2, {n1, n2}};
}

FormulaResult ip_hamming3(int n1, int n2, int n3) {
  require_two_factors({n1, n2, n3});
  std::vector<int> sorted{n1, n2, n3};
  std::sort(sorted.begin(), sorted.end());
  const int n = n1 * n2 * n3;
  if (sorted[0] == 2 && sorted[1] == 2 && sorted[2] % 2 == 1) {
    return {n / 4 + 1, FormulaCase::Hamming3Exceptional, {n1, n2, n3}};
  }
  return {ceil_div(n, 4), FormulaCase::Hamming3Main, {n1, n2, n3}};
}

FormulaResult ip_hamming(const HammingSpec& spec) {
  const auto& f = spec.factors();
  switch (spec.dimension()) {
    case 1: return {ip_complete(f[0]), FormulaCase::Complete, f};
    case 2: return ip_hamming2(f[0], f[1]);
    case 3: return ip_hamming3(f[0], f[1], f[2]);
    default:
      throw InvalidSpec("closed forms cover products of at most 3 complete graphs");
  }
}

int ip_lower_bound_hamming(const HammingSpec& spec) {
  return ceil_div(spec.vertex_count(), spec.dimension() + 1);
}

int ip_lower_bound_multipartite(const PartiteSpec& spec) {
  if (spec.parts() < 2) throw InvalidSpec("multipartite bound needs at least two parts");
  return ceil_div(spec.vertex_count(), 3);
}

}  // namespace ipcover
