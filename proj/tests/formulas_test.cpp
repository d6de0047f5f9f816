#include "ipcover/formulas.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "ipcover/error.hpp"
#include "test_support.hpp"

namespace ipcover {
namespace {

TEST(OddPartCount, Examples) {
  EXPECT_EQ(odd_part_count(PartiteSpec({3, 3, 2})), 2);
  EXPECT_EQ(odd_part_count(PartiteSpec({5, 1})), 2);
  EXPECT_EQ(odd_part_count(PartiteSpec({2, 2})), 0);
}

TEST(IpMultipartite, OneExamplePerCase) {
  auto dominant = ip_multipartite(PartiteSpec({5, 1}));
  EXPECT_EQ(dominant.value, 3);
  EXPECT_EQ(dominant.case_tag, FormulaCase::DominantPart);

  auto k5 = ip_multipartite(PartiteSpec({1, 1, 1, 1, 1}));
  EXPECT_EQ(k5.value, 3);
  EXPECT_EQ(k5.case_tag, FormulaCase::ManyOdd);

  auto balanced = ip_multipartite(PartiteSpec({3, 3, 2}));
  EXPECT_EQ(balanced.value, 3);
  EXPECT_EQ(balanced.case_tag, FormulaCase::Balanced);
  EXPECT_EQ(balanced.inputs, (std::vector<int>{3, 3, 2}));

  EXPECT_EQ(ip_multipartite(PartiteSpec({2, 1})).value, 1);
  EXPECT_EQ(ip_multipartite(PartiteSpec({2, 1})).case_tag, FormulaCase::Balanced);
}

TEST(IpMultipartite, SinglePartRejected) {
  EXPECT_THROW(ip_multipartite(PartiteSpec({4})), InvalidSpec);
  EXPECT_THROW(ip_lower_bound_multipartite(PartiteSpec({4})), InvalidSpec);
}

TEST(IpMultipartite, OverlappingConditionsAgree) {
  // 3 n_1 > 2n and 3 alpha > n together happen (e.g. K_{3,1}); the two
  // closed forms must then agree. Exhaustive over n <= 30.
  int overlaps = 0;
  for (const auto& sizes : testing::partitions_up_to(30)) {
    const PartiteSpec spec(sizes);
    const int n = spec.vertex_count();
    const int alpha = spec.odd_parts();
    if (3 * spec.largest() > 2 * n && 3 * alpha > n) {
      ++overlaps;
      ASSERT_EQ(ceil_div(spec.largest(), 2), ceil_div(n + alpha, 4)) << join_ints(sizes);
      ASSERT_NO_THROW(ip_multipartite(spec));
    }
  }
  EXPECT_GT(overlaps, 0);
  EXPECT_EQ(ip_multipartite(PartiteSpec({3, 1})).value, 2);
}

TEST(IpMultipartite, BoundsAndPermutationInvariance) {
  for (const auto& sizes : testing::partitions_up_to(24, 6)) {
    const PartiteSpec spec(sizes);
    const auto r = ip_multipartite(spec);
    const int bound = ip_lower_bound_multipartite(spec);
    EXPECT_GE(r.value, bound);
    if (r.case_tag == FormulaCase::Balanced) EXPECT_EQ(r.value, bound);
    if (r.case_tag == FormulaCase::DominantPart) {
      EXPECT_GE(ceil_div(spec.largest(), 2), ceil_div(spec.vertex_count(), 3));
    }
    auto reversed = sizes;
    std::reverse(reversed.begin(), reversed.end());
    EXPECT_EQ(ip_multipartite(PartiteSpec(reversed)).value, r.value);
  }
}

TEST(IpComplete, Values) {
  EXPECT_EQ(ip_complete(1), 1);
  EXPECT_EQ(ip_complete(2), 1);
  EXPECT_EQ(ip_complete(5), 3);
  EXPECT_THROW(ip_complete(0), InvalidSpec);
}

TEST(IpHamming2, Values) {
  EXPECT_EQ(ip_hamming2(3, 3).value, 3);
  EXPECT_EQ(ip_hamming2(2, 4).value, 3);
  EXPECT_EQ(ip_hamming2(5, 5).value, 9);
  EXPECT_EQ(ip_hamming2(5, 5).case_tag, FormulaCase::Hamming2);
  EXPECT_THROW(ip_hamming2(1, 4), InvalidSpec);
}

TEST(IpHamming3, Values) {
  EXPECT_EQ(ip_hamming3(2, 2, 3).value, 4);
  EXPECT_EQ(ip_hamming3(2, 2, 3).case_tag, FormulaCase::Hamming3Exceptional);
  EXPECT_EQ(ip_hamming3(2, 3, 2).value, 4);
  EXPECT_EQ(ip_hamming3(2, 3, 2).case_tag, FormulaCase::Hamming3Exceptional);
  EXPECT_EQ(ip_hamming3(4, 4, 4).value, 16);
  EXPECT_EQ(ip_hamming3(4, 4, 4).case_tag, FormulaCase::Hamming3Main);
  EXPECT_EQ(ip_hamming3(3, 3, 3).value, 7);
  EXPECT_EQ(ip_hamming3(2, 2, 5).value, 6);
  EXPECT_THROW(ip_hamming3(2, 2, 1), InvalidSpec);
}

TEST(IpHamming3, PermutationInvariantAndExactForEven) {
  for (int a = 2; a <= 9; ++a) {
    for (int b = 2; b <= 9; ++b) {
      for (int c = 2; c <= 9; ++c) {
        std::vector<int> f{a, b, c};
        const int value = ip_hamming3(a, b, c).value;
        std::sort(f.begin(), f.end());
        do {
          ASSERT_EQ(ip_hamming3(f[0], f[1], f[2]).value, value);
        } while (std::next_permutation(f.begin(), f.end()));
        if (a % 2 == 0 && b % 2 == 0 && c % 2 == 0) EXPECT_EQ(value, a * b * c / 4);
        EXPECT_GE(value, ip_lower_bound_hamming(HammingSpec({a, b, c})));
      }
    }
  }
}

TEST(LowerBounds, Examples) {
  EXPECT_EQ(ip_lower_bound_hamming(HammingSpec({2, 2, 2})), 2);
  EXPECT_EQ(ip_lower_bound_hamming(HammingSpec({2, 2, 3})), 3);
  EXPECT_LT(ip_lower_bound_hamming(HammingSpec({2, 2, 3})), ip_hamming3(2, 2, 3).value);
  EXPECT_EQ(ip_lower_bound_hamming(HammingSpec({3, 3})), 3);
  EXPECT_EQ(ip_lower_bound_multipartite(PartiteSpec({2, 2})), 2);
  EXPECT_EQ(ip_lower_bound_multipartite(PartiteSpec({3, 3, 2})), 3);
  EXPECT_EQ(ip_lower_bound_multipartite(PartiteSpec({5, 1})), 2);
}

TEST(IpHamming, DispatchesOnDimension) {
  EXPECT_EQ(ip_hamming(HammingSpec({5})).value, 3);
  EXPECT_EQ(ip_hamming(HammingSpec({5})).case_tag, FormulaCase::Complete);
  EXPECT_EQ(ip_hamming(HammingSpec({4, 5})).value, 7);
  EXPECT_EQ(ip_hamming(HammingSpec({2, 5, 2})).case_tag, FormulaCase::Hamming3Exceptional);
  EXPECT_THROW(ip_hamming(HammingSpec({2, 2, 2, 2})), InvalidSpec);
}

TEST(FormulaCase, Tags) {
  EXPECT_STREQ(to_string(FormulaCase::DominantPart), "DOMINANT_PART");
  EXPECT_STREQ(to_string(FormulaCase::Hamming3Exceptional), "HAMMING3_EXCEPTIONAL");
}

}  // namespace
}  // namespace ipcover
