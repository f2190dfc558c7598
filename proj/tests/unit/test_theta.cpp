#include <gtest/gtest.h>

#include <algorithm>

#include "sopq/error.hpp"
#include "sopq/theta.hpp"

using namespace sopq;

namespace {
HalfIntVec V(const char* s) { return parse_vec(s); }
SOWeight W(int p, const char* s) { return validate_so_weight(p, V(s)); }

// All valid (xi, +)-style weights of SO(n) with entries in [0, bound].
std::vector<SOWeight> small_weights(int n, int bound) {
  std::vector<SOWeight> out;
  const int r = n / 2;
  std::vector<int> xi(r, 0);
  while (true) {
    HalfIntVec v;
    for (int x : xi) v.push_back(HalfInt(x));
    try {
      out.push_back(validate_so_weight(n, v));
    } catch (const InputError&) {
    }
    int i = 0;
    while (i < r && xi[i] == bound) xi[i++] = 0;
    if (i == r) break;
    ++xi[i];
  }
  return out;
}
}  // namespace

TEST(Theta, NonvanishingExamples) {
  EXPECT_TRUE(nonvanishing_stable(2, 3, 2));
  EXPECT_FALSE(nonvanishing_stable(2, 3, 1));
  EXPECT_TRUE(nonvanishing_stable(0, 1, 0));
}

TEST(Theta, DegreeExamples) {
  EXPECT_EQ(degree(V("1,0"), V("2,1")), 4);
  EXPECT_EQ(degree(V(""), V("")), 0);
  EXPECT_EQ(degree(V("3"), V("0")), 3);
  EXPECT_THROW(degree(V("-1"), V("")), InputError);
}

TEST(Theta, ForwardExamples) {
  EXPECT_EQ(theta0_forward(3, 1, 2, W(3, "1"), W(1, "")).weight, V("2,1"));
  EXPECT_EQ(theta0_forward(2, 2, 2, W(2, "0"), W(2, "0")).weight, V("0,0"));
  EXPECT_EQ(theta0_forward(3, 3, 3, W(3, "1"), W(3, "1")).weight, V("1,0,-1"));
  EXPECT_THROW(theta0_forward(3, 2, 1, W(3, "0"), W(2, "0")), InputError);
}

TEST(Theta, BackExamples) {
  const auto t = theta0_back(2, 3, 1, 1, W(3, "1"), W(1, ""));
  EXPECT_EQ(t.p(), 4);
  EXPECT_EQ(t.q(), 2);
  EXPECT_EQ(t.xi.xi(), V("1,0"));
  EXPECT_EQ(t.eta.xi(), V("0"));
  EXPECT_TRUE(t.is_plus_extended());

  const auto z = theta0_back(3, 3, 3, 2, W(3, "0"), W(3, "0"));
  EXPECT_TRUE(z.xi.is_zero() && z.eta.is_zero());
  EXPECT_EQ(z.sign, Sign::Plus);
}

TEST(Theta, ForwardShapeAndDegreeStability) {
  for (int p = 0; p <= 4; ++p) {
    for (int q = p; q <= 5; ++q) {
      const int m0 = (p + q) / 2;  // smallest m with 2m + 1 >= p + q
      for (const auto& x2 : small_weights(q, 2)) {
        for (const auto& x1 : small_weights(p, 2)) {
          const auto a = theta0_forward(q, p, m0, x2, x1);
          const auto b = theta0_forward(q, p, m0 + 3, x2, x1);
          EXPECT_TRUE(std::is_sorted(a.weight.rbegin(), a.weight.rend()));
          for (auto h : a.weight) EXPECT_EQ((h - HalfInt::half(q - p)).is_integer(), true);
          const auto deg = degree(x1.xi(), x2.xi());
          EXPECT_EQ(sp_degree(a, q, p), deg);
          EXPECT_EQ(sp_degree(b, q, p), deg);
        }
      }
    }
  }
}

TEST(Theta, BackAgreesWithPaddedPlusType) {
  for (int p = 0; p <= 3; ++p) {
    for (int q = p; q <= 4; ++q) {
      const int m = (p + q) / 2 + 1;
      for (int d = 0; d <= 2; ++d) {
        for (const auto& x2 : small_weights(q, 2)) {
          for (const auto& x1 : small_weights(p, 2)) {
            const auto types = sopq_type(x2, x1);
            const auto& plus = *std::find_if(types.begin(), types.end(), [](const SOpqKType& t) { return t.sign == Sign::Plus; });
            EXPECT_EQ(theta0_back(m, q, p, d, x2, x1), pad_ktype(plus, d));
          }
        }
      }
    }
  }
}
