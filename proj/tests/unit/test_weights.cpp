#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sopq/error.hpp"
#include "sopq/weights.hpp"

using namespace sopq;

namespace {
HalfIntVec V(const char* s) { return parse_vec(s); }
}  // namespace

TEST(Weights, RearrangeExamples) {
  EXPECT_EQ(rearrange_desc(V("0,2,1")), V("2,1,0"));
  EXPECT_EQ(rearrange_desc(V("")), V(""));
  EXPECT_EQ(rearrange_desc(V("-1/2,3/2")), V("3/2,-1/2"));
}

TEST(Weights, AbsExamples) {
  EXPECT_EQ(abs_vec(V("2,-1")), V("2,1"));
  EXPECT_EQ(abs_vec(V("0")), V("0"));
  EXPECT_EQ(abs_vec(V("-1/2,-3/2")), V("1/2,3/2"));
}

TEST(Weights, DominanceExamples) {
  EXPECT_TRUE(strictly_dominated(V("1,0"), V("2,0")));
  EXPECT_FALSE(strictly_dominated(V("1,1"), V("1,1")));
  EXPECT_FALSE(strictly_dominated(V("-1,1,0"), V("0,0,0")));
  EXPECT_TRUE(weakly_dominated(V("1,1"), V("1,1")));
  EXPECT_TRUE(weakly_dominated(V("1,0"), V("2,0")));
  EXPECT_TRUE(weakly_dominated(V("-1,1,0"), V("0,0,0")));
  EXPECT_THROW(weakly_dominated(V("1"), V("1,0")), InputError);
}

TEST(Weights, EmptyVectorsAreWeaklyButNotStrictlyDominated) {
  EXPECT_TRUE(weakly_dominated(V(""), V("")));
  // Strictness over zero prefixes is vacuous; the implementation treats it
  // as true, which is what the certificate checks rely on for p = 0.
  EXPECT_TRUE(strictly_dominated(V(""), V("")));
}

TEST(Weights, CanonicalExamples) {
  EXPECT_EQ(weyl_canonical(V("-1/2,3/2"), WeylType::B), (CanonicalWeight{V("3/2,1/2"), SignClass::Merged}));
  EXPECT_EQ(weyl_canonical(V("0,-1"), WeylType::D), (CanonicalWeight{V("1,0"), SignClass::Merged}));
  EXPECT_EQ(weyl_canonical(V("1/2,-1/2"), WeylType::D), (CanonicalWeight{V("1/2,1/2"), SignClass::Minus}));
  EXPECT_EQ(weyl_canonical(V("1/2,1/2"), WeylType::D).sign_class, SignClass::Plus);
}

TEST(Weights, CanonicalIsIdempotent) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4), len(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    HalfIntVec v(len(rng));
    for (auto& x : v) x = HalfInt::from_doubled(entry(rng));
    for (auto t : {WeylType::B, WeylType::D}) {
      const auto c = weyl_canonical(v, t);
      EXPECT_EQ(weyl_canonical(representative(c), t), c);
      EXPECT_TRUE(std::is_sorted(c.magnitudes.rbegin(), c.magnitudes.rend()));
    }
  }
}

TEST(Weights, DominanceAxiomsOnRandomTriples) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  auto draw = [&] {
    HalfIntVec v(3);
    for (auto& x : v) x = HalfInt(entry(rng));
    return v;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = draw(), b = draw(), c = draw();
    EXPECT_TRUE(weakly_dominated(a, a));
    EXPECT_FALSE(strictly_dominated(a, a));
    if (strictly_dominated(a, b)) EXPECT_TRUE(weakly_dominated(a, b));
    if (weakly_dominated(a, b) && weakly_dominated(b, c)) EXPECT_TRUE(weakly_dominated(a, c));
    if (strictly_dominated(a, b) && strictly_dominated(b, c)) EXPECT_TRUE(strictly_dominated(a, c));
    if (weakly_dominated(a, b) && weakly_dominated(b, a)) EXPECT_EQ(a, b);
  }
}
