#include <gtest/gtest.h>

#include "sopq/error.hpp"
#include "sopq/growth.hpp"
#include "sopq/rootdata.hpp"

using namespace sopq;

namespace {
HalfIntVec V(const char* s) { return parse_vec(s); }
}  // namespace

TEST(Growth, GrowthBoundExamples) {
  EXPECT_EQ(theoremA_bound(1, 2, 1), (ExponentBound{V("0"), true}));
  EXPECT_EQ(theoremA_bound(2, 2, 2), (ExponentBound{V("0,1"), true}));
  EXPECT_EQ(theoremA_bound(2, 3, 2), (ExponentBound{V("-1,0"), true}));
  EXPECT_THROW(theoremA_bound(3, 2, 2), InputError);
}

TEST(Growth, GrowthBoundShape) {
  for (int p = 1; p <= 6; ++p)
    for (int q = p; q <= 6; ++q)
      for (int m = 0; m <= 10; ++m) {
        const auto b = theoremA_bound(p, q, m);
        for (int i = 0; i + 1 < p; ++i) EXPECT_EQ(b.vector[i + 1] - b.vector[i], HalfInt(1));
        EXPECT_EQ(b.vector.back(), HalfInt(m + 1 - q));
        EXPECT_EQ(b, growth_bound_from_s(p, q, 2 * m + 1 - p - q));
      }
}

TEST(Growth, DecayExamples) {
  EXPECT_EQ(decay_exponent(V(""), Signature(1, 1)), V("0"));
  EXPECT_EQ(decay_exponent(V("1"), Signature(2, 3)), V("-1/2,-1/2"));
  EXPECT_EQ(decay_exponent(V("0"), Signature(1, 2)), V("-1/2"));
  EXPECT_THROW(decay_exponent(V("1,1"), Signature(1, 2)), InputError);
}

TEST(Growth, SatisfiesExamples) {
  EXPECT_TRUE(satisfies_bound(V("-1/2,-1/2"), {V("0,1"), true}));
  EXPECT_FALSE(satisfies_bound(V("0"), {V("0"), true}));
  EXPECT_TRUE(satisfies_bound(V("0"), {V("0"), false}));
}

TEST(Growth, TensorGrowthExamples) {
  EXPECT_FALSE(theorem5_condition(V("1,1,0"), V("0"), 1, 1, 1));
  EXPECT_TRUE(theorem5_condition(V("1,1,0"), V("-2"), 1, 1, 1));
  EXPECT_TRUE(theorem5_condition(V("5,4,3,2,1,0"), V("-100,-100"), 2, 2, 2));
}

TEST(Growth, TemperedExamples) {
  for (int p = 1; p <= 4; ++p)
    for (int q = p; q <= 5; ++q) EXPECT_TRUE(tempered_leading_ok(-rho(Signature(p, q)), Signature(p, q)));
  EXPECT_FALSE(tempered_leading_ok(V("1/2"), Signature(1, 2)));
  EXPECT_TRUE(tempered_leading_ok(V("-2"), Signature(1, 2)));
}
