// Generated by tools/gen_fixtures --table; do not edit by hand.
//
// Minimum covers found by the exact solver for every balanced complete
// multipartite graph on at most 8 vertices, rewritten into normal form.

#include "base_covers.hpp"

namespace ipcover::detail {

const std::vector<MultipartiteFixture>& multipartite_fixtures() {
  static const std::vector<MultipartiteFixture> fixtures = {
      {{2,1}, "0 2 1\n"},
      {{2,2}, "0 2\n0 3 1\n"},
      {{3,2}, "0 3\n1 4 2\n"},
      {{2,2,1}, "0 2 1\n2 4 3\n"},
      {{4,2}, "0 4 1\n2 5 3\n"},
      {{4,1,1}, "0 4 1\n2 5 3\n"},
      {{3,3}, "0 3 1\n4 2 5\n"},
      {{3,2,1}, "0 5 1\n3 2 4\n"},
      {{2,2,2}, "0 2 1\n4 3 5\n"},
      {{2,2,1,1}, "0 4 1\n2 5 3\n"},
      {{4,3}, "0 4\n0 5 1\n2 6 3\n"},
      {{4,2,1}, "0 4\n0 5 1\n2 6 3\n"},
      {{3,2,2}, "0 3\n0 4 1\n5 2 6\n"},
      {{2,2,2,1}, "0 2\n0 3 1\n4 6 5\n"},
      {{5,3}, "0 5\n1 6 2\n3 7 4\n"},
      {{5,2,1}, "0 5\n1 6 2\n3 7 4\n"},
      {{4,4}, "0 4\n1 5 2\n6 3 7\n"},
      {{4,3,1}, "0 4\n1 7 2\n5 3 6\n"},
      {{4,2,2}, "0 4\n1 5 2\n6 3 7\n"},
      {{4,2,1,1}, "0 4 1\n2 5 3\n6 7\n"},
      {{3,3,2}, "0 3\n1 4 2\n6 5 7\n"},
      {{3,2,2,1}, "0 3\n1 4 2\n5 7 6\n"},
      {{2,2,2,2}, "0 2\n4 1 5\n6 3 7\n"},
      {{2,2,2,1,1}, "0 2 1\n2 6 3\n4 7 5\n"},
  };
  return fixtures;
}

}  // namespace ipcover::detail
