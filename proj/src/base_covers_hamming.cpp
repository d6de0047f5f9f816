// Base covers for K_a x K_b and K_a x K_b x K_c, entered path by path in the
// order they are usually listed. Factors are ascending; coordinate i ranges
// over factor i. Covers that extend a smaller one keep it in the low corner
// of the box (identity coordinate map).

#include "base_covers.hpp"

namespace ipcover::detail {

const std::vector<HammingRecipe>& hamming_recipes() {
  static const std::vector<HammingRecipe> recipes = {
      {{2, 2}, {}, false, {}, {"(0,0)(0,1)", "(1,0)(1,1)"}, ""},
      {{2, 3}, {}, false, {}, {"(0,0)(0,1)(1,1)", "(0,2)(1,2)(1,0)"}, ""},
      {{2, 4}, {}, false, {}, {"(0,0)(0,1)(1,1)", "(0,2)(1,2)(1,0)", "(0,3)(1,3)"}, ""},
      {{3, 3}, {}, false, {}, {"(0,0)(2,0)(2,2)", "(0,1)(0,2)(1,2)", "(1,0)(1,1)(2,1)"}, ""},
      {{2, 2, 2},
       {},
       false,
       {},
       {"(0,0,0)(0,0,1)(0,1,1)(1,1,1)", "(1,0,1)(1,0,0)(1,1,0)(0,1,0)"},
       ""},
      {{2, 3, 3},
       {},
       false,
       {},
       {"(0,1,1)(0,1,0)(0,0,0)(1,0,0)", "(0,2,2)(0,2,0)(1,2,0)(1,1,0)", "(0,2,1)(1,2,1)(1,1,1)",
        "(0,0,2)(0,1,2)(1,1,2)", "(0,0,1)(1,0,1)(1,0,2)(1,2,2)"},
       ""},
      {{2, 3, 4},
       {},
       false,
       {},
       {"(0,1,1)(0,1,0)(0,0,0)(1,0,0)", "(0,2,1)(0,2,0)(1,2,0)(1,1,0)",
        "(0,2,3)(0,2,2)(1,2,2)(1,1,2)", "(0,1,3)(0,1,2)(0,0,2)(1,0,2)",
        "(0,0,1)(1,0,1)(1,1,1)(1,1,3)", "(1,2,1)(1,2,3)(1,0,3)(0,0,3)"},
       ""},
      {{2, 3, 5},
       {2, 3, 3},
       true,
       {},
       {"(0,1,4)(0,1,3)(0,2,3)(1,2,3)", "(0,0,3)(0,0,4)(0,2,4)(1,2,4)", "(1,0,3)(1,0,4)"},
       "starred (2,3,3) in layers 0-4 of coordinate 3"},
      {{3, 3, 3},
       {},
       false,
       {},
       {"(0,0,0)(0,2,0)(1,2,0)(1,2,1)", "(1,1,0)(2,1,0)(2,2,0)(2,2,1)",
        "(0,2,1)(0,1,1)(1,1,1)(1,1,2)", "(1,0,1)(2,0,1)(2,1,1)(2,1,2)",
        "(0,1,0)(0,1,2)(0,2,2)(1,2,2)", "(0,0,1)(0,0,2)(2,0,2)(2,2,2)", "(1,0,2)(1,0,0)(2,0,0)"},
       ""},
      {{3, 3, 4},
       {},
       false,
       {},
       {"(0,0,0)(0,2,0)(1,2,0)(1,2,1)", "(1,1,0)(2,1,0)(2,2,0)(2,2,1)",
        "(0,2,1)(0,1,1)(1,1,1)(1,1,2)", "(1,0,1)(2,0,1)(2,1,1)(2,1,2)",
        "(0,1,0)(0,1,2)(0,2,2)(1,2,2)", "(0,0,2)(2,0,2)(2,2,2)(2,2,3)",
        "(0,1,3)(1,1,3)(1,0,3)(1,0,2)", "(1,0,0)(2,0,0)(2,0,3)(2,1,3)",
        "(0,0,1)(0,0,3)(0,2,3)(1,2,3)"},
       ""},
      {{2, 3, 6},
       {2, 3, 3},
       true,
       {},
       {"(0,0,4)(0,0,3)(1,0,3)(1,2,3)", "(0,1,3)(0,1,4)(0,2,4)(1,2,4)",
        "(0,2,3)(0,2,5)(1,2,5)(1,1,5)", "(0,1,5)(0,0,5)(1,0,5)(1,0,4)"},
       "starred (2,3,3) in layers 0-4 of coordinate 3"},
      {{2, 5, 5},
       {2, 3, 5},
       false,
       {"(1,0,3)(1,0,4)"},
       {"(0,4,1)(0,4,0)(0,3,0)(1,3,0)", "(1,4,0)(1,4,1)(1,3,1)(0,3,1)",
        "(0,4,3)(0,4,2)(0,3,2)(1,3,2)", "(1,4,2)(1,4,3)(1,3,3)(0,3,3)", "(1,0,3)(1,0,4)(1,4,4)",
        "(0,4,4)(0,3,4)(1,3,4)"},
       "(2,3,5) embedded by identity: coordinate 2 values 0-2, coordinate 3 values 0-4"},
      {{3, 5, 5},
       {2, 3, 5},
       false,
       {"(1,0,3)(1,0,4)"},
       {"(0,4,0)(2,4,0)(2,0,0)(2,0,1)", "(0,3,0)(2,3,0)(2,1,0)(2,1,1)",
        "(0,4,1)(0,3,1)(1,3,1)(1,3,0)", "(1,4,0)(1,4,1)(2,4,1)(2,2,1)",
        "(1,0,3)(2,0,3)(2,2,3)(2,2,0)", "(1,0,4)(2,0,4)(2,3,4)(2,3,1)",
        "(0,3,2)(2,3,2)(2,1,2)(2,1,3)", "(0,4,4)(0,4,2)(2,4,2)(2,0,2)",
        "(0,4,3)(1,4,3)(1,3,3)(1,3,2)", "(0,3,3)(2,3,3)(2,4,3)(2,4,4)",
        "(0,3,4)(1,3,4)(1,4,4)(1,4,2)", "(2,2,2)(2,2,4)(2,1,4)"},
       "(2,3,5) embedded by identity: coordinate 1 values 0-1, coordinate 2 values 0-2"},
  };
  return recipes;
}

const HammingRecipe& starred_233_delta() {
  static const HammingRecipe delta{
      {2, 3, 3},
      {},
      false,
      {"(0,2,1)(1,2,1)(1,1,1)", "(0,0,2)(0,1,2)(1,1,2)"},
      {"(0,2,1)(1,2,1)(1,1,1)(1,1,3)", "(0,0,2)(0,1,2)(1,1,2)(1,1,4)"},
      ""};
  return delta;
}

}  // namespace ipcover::detail
