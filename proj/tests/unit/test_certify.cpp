#include <gtest/gtest.h>

#include "sopq/certify.hpp"
#include <set>

#include "sopq/error.hpp"

using namespace sopq;

namespace {
HalfIntVec V(const char* s) { return parse_vec(s); }

SOpqKType trivial(int p, int q) {
  return make_sopq_ktype(SOpqKType::Shape::Extended, SOWeight::zero(p), SOWeight::zero(q), Sign::Plus);
}

ArthurInput input(int p, int q, int k, std::vector<int> parts, Flavor f) {
  return make_arthur_input(p, q, k, validate_diagram(std::move(parts), f), trivial(p - k, q - k), true);
}
}  // namespace

TEST(Certify, TemperedBaseOnly) {
  const auto c = certify(input(3, 3, 0, {}, Flavor::Orthogonal));
  ASSERT_EQ(c.steps.size(), 1u);
  EXPECT_EQ(c.steps[0].kind, StepKind::Base);
  EXPECT_TRUE(c.verdict.certified());
  EXPECT_TRUE(verify(c));
}

TEST(Certify, PairDeletionExample) {
  const auto c = certify(input(3, 3, 2, {2, 2}, Flavor::Orthogonal));
  ASSERT_EQ(c.steps.size(), 2u);
  EXPECT_EQ(c.steps[1].kind, StepKind::PairDeletion);
  EXPECT_EQ(c.steps[1].d, 2);
  EXPECT_TRUE(c.verdict.certified());
  EXPECT_TRUE(verify(c));
}

TEST(Certify, QuantumInductionOddPair) {
  const auto c = certify(input(3, 3, 2, {1, 3}, Flavor::Orthogonal));
  ASSERT_EQ(c.steps.size(), 2u);
  const auto& s = c.steps[1];
  EXPECT_EQ(s.kind, StepKind::QuantumInduction);
  EXPECT_EQ(s.d_low, 1);
  EXPECT_EQ(s.d_high, 3);
  EXPECT_EQ(s.m, 1);
  EXPECT_EQ(s.d_step, 2);
  EXPECT_EQ(s.s, 1);
  EXPECT_EQ(s.t, 3);
  EXPECT_EQ(s.find_check(checks::kStabilityLower)->operands, (std::vector<HalfIntVec>{V("2"), V("3")}));
  EXPECT_EQ(s.find_check(checks::kStabilityUpper)->operands, (std::vector<HalfIntVec>{V("3"), V("4")}));
  EXPECT_TRUE(c.verdict.certified());
  EXPECT_EQ(c.steps.back().min_ktype_after, pad_ktype(c.input.sigma_min_ktype, 2));
  EXPECT_TRUE(verify(c));
}

TEST(Certify, QuantumInductionSingleEvenPart) {
  const auto c = certify(input(2, 3, 1, {2}, Flavor::Symplectic));
  ASSERT_EQ(c.steps.size(), 2u);
  const auto& s = c.steps[1];
  EXPECT_EQ(s.kind, StepKind::QuantumInduction);
  EXPECT_EQ(s.d_low, 0);
  EXPECT_EQ(s.d_high, 2);
  EXPECT_EQ(s.m, 1);
  EXPECT_EQ(s.d_step, 1);
  EXPECT_EQ(s.find_check(checks::kStabilityLower)->operands, (std::vector<HalfIntVec>{V("3"), V("3")}));
  EXPECT_EQ(s.find_check(checks::kStabilityUpper)->operands, (std::vector<HalfIntVec>{V("3"), V("4")}));
  EXPECT_TRUE(c.verdict.certified());
  EXPECT_TRUE(verify(c));
}

TEST(Certify, CompletenessOnDeskScale) {
  for (int p = 1; p <= 5; ++p)
    for (int q = p; q <= 5; ++q)
      for (int k = 0; k < p; ++k) {
        const Flavor f = (p + q) % 2 == 0 ? Flavor::Orthogonal : Flavor::Symplectic;
        for (const auto& d : enumerate_diagrams(2 * k, f)) {
          const auto c = certify(make_arthur_input(p, q, k, d, trivial(p - k, q - k), true));
          EXPECT_TRUE(c.verdict.certified()) << p << "," << q << " k=" << k << " " << c.verdict.reason;
          EXPECT_EQ(c.steps.back().min_ktype_after, pad_ktype(c.input.sigma_min_ktype, k));
          EXPECT_TRUE(verify(c)) << verify(c).mismatch;
          // Parts consumed by the steps reproduce the diagram.
          std::multiset<int> used;
          for (const auto& s : c.steps) {
            if (s.kind == StepKind::PairDeletion) used.insert({s.d, s.d});
            if (s.kind == StepKind::QuantumInduction) {
              if (s.d_low > 0) used.insert(s.d_low);
              used.insert(s.d_high);
            }
          }
          EXPECT_EQ(used, std::multiset<int>(d.parts().begin(), d.parts().end()));
        }
      }
}

TEST(Certify, NonTemperedIsNotCovered) {
  auto in = input(3, 3, 2, {1, 3}, Flavor::Orthogonal);
  in.sigma_tempered = false;
  const auto c = certify(in);
  EXPECT_FALSE(c.verdict.certified());
  EXPECT_EQ(c.verdict.reason, "step 0: tempered");
  EXPECT_TRUE(verify(c));
}

TEST(Certify, MinusSignIsNotCovered) {
  const auto t = make_sopq_ktype(SOpqKType::Shape::Extended, validate_so_weight(1, {}), validate_so_weight(1, {}),
                                 Sign::Minus);
  const auto c = certify(make_arthur_input(3, 3, 2, validate_diagram({1, 3}, Flavor::Orthogonal), t, true));
  EXPECT_FALSE(c.verdict.certified());
  EXPECT_TRUE(verify(c));
}

TEST(Certify, InputValidation) {
  EXPECT_THROW(input(3, 3, 2, {1, 1}, Flavor::Orthogonal), InputError);  // size 2 != 2k
  EXPECT_THROW(input(2, 3, 1, {1, 1}, Flavor::Orthogonal), InputError);  // flavor parity
  EXPECT_THROW(input(3, 3, 4, {1, 1, 1, 1, 1, 1, 1, 1}, Flavor::Orthogonal), InputError);
  EXPECT_THROW(make_arthur_input(3, 3, 1, validate_diagram({1, 1}, Flavor::Orthogonal), trivial(1, 1), true),
               InputError);  // K-type on the wrong group
}

TEST(Certify, SwappedSignatureIsNormalized) {
  const auto c = certify(make_arthur_input(5, 3, 1, validate_diagram({1, 1}, Flavor::Orthogonal), trivial(4, 2), true));
  EXPECT_EQ(c.input.sig, Signature(3, 5));
  EXPECT_TRUE(c.verdict.certified());
  EXPECT_TRUE(verify(c));
}

TEST(Certify, TamperingIsDetected) {
  auto c = certify(input(3, 3, 2, {1, 3}, Flavor::Orthogonal));
  auto t = c;
  t.steps[1].decay_before[0] = HalfInt(5);
  auto r = verify(t);
  EXPECT_FALSE(r);
  EXPECT_NE(r.mismatch.find("step 1"), std::string::npos);

  auto nc = certify([] {
    auto in = input(3, 3, 2, {1, 3}, Flavor::Orthogonal);
    in.sigma_tempered = false;
    return in;
  }());
  nc.verdict = {Verdict::Kind::CertifiedUnitary, ""};
  EXPECT_FALSE(verify(nc));

  t = c;
  t.steps[1].m = 2;
  EXPECT_FALSE(verify(t));
  t = c;
  t.steps.pop_back();
  EXPECT_FALSE(verify(t));
}

TEST(Certify, ExplainMentionsEachStep) {
  const auto text = explain(certify(input(3, 3, 2, {2, 2}, Flavor::Orthogonal)));
  EXPECT_NE(text.find("tempered ⇒ unitary"), std::string::npos);
  EXPECT_NE(text.find("π₀ ⊗ triv is unitary"), std::string::npos);
  const auto qi = explain(certify(input(3, 3, 2, {1, 3}, Flavor::Orthogonal)));
  EXPECT_NE(qi.find("stabilityLower"), std::string::npos);
  EXPECT_NE(qi.find("growthChainSecond"), std::string::npos);
}
