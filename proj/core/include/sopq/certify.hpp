#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sopq/growth.hpp"
#include "sopq/halfint.hpp"
#include "sopq/ktypes.hpp"
#include "sopq/rootdata.hpp"
#include "sopq/young.hpp"

namespace sopq {

/// Langlands-Vogan parameter (SO(p-k, q-k) GL(1)^k N, sigma (x) triv, v_D).
struct ArthurInput {
  Signature sig;  // normalized p <= q
  int k = 0;
  YoungDiagram diagram;     // size 2k; orthogonal iff p + q even
  SOpqKType sigma_min_ktype;  // on S(O(p-k) O(q-k))
  bool sigma_tempered = true;

  Signature base_signature() const { return Signature(sig.p() - k, sig.q() - k); }

  friend bool operator==(const ArthurInput&, const ArthurInput&) = default;
};

/// Validates the structural invariants and normalizes to p <= q (swapping
/// the K-type factors with the signature). Throws InputError on a
/// flavor/parity mismatch, k outside [0, p], a diagram of the wrong size or
/// a K-type on the wrong group.
ArthurInput make_arthur_input(int p, int q, int k, YoungDiagram diagram, SOpqKType sigma_min_ktype,
                              bool sigma_tempered);

enum class StepKind { Base, PairDeletion, QuantumInduction };

struct Check {
  std::string name;
  bool pass = false;
  std::vector<HalfIntVec> operands;

  friend bool operator==(const Check&, const Check&) = default;
};

struct CertStep {
  StepKind kind = StepKind::Base;
  int d = 0;  // PairDeletion: the removed pair (d, d)
  // QuantumInduction: pair (d_low, d_high), m = (p'+q'+d_low-1)/2,
  // d_step = (d_low+d_high)/2, s = 2m+1-p'-q', t = p'+q'+2 d_step-2m-1.
  int d_low = 0;
  int d_high = 0;
  int m = 0;
  int d_step = 0;
  int s = 0;
  int t = 0;
  Signature before;
  Signature after;
  HalfIntVec decay_before;
  std::optional<ExponentBound> bound;
  std::vector<Check> checks;
  SOpqKType min_ktype_after;

  bool passed() const;
  const Check* find_check(const std::string& name) const;

  friend bool operator==(const CertStep&, const CertStep&) = default;
};

struct Verdict {
  enum class Kind { CertifiedUnitary, NotCovered };
  Kind kind = Kind::NotCovered;
  std::string reason;  // empty when certified

  bool certified() const { return kind == Kind::CertifiedUnitary; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Certificate {
  ArthurInput input;
  VDResult vd;
  std::vector<CertStep> steps;  // base first, outermost induction last
  Verdict verdict;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Runs the induction on the number of parts and records every fact used.
Certificate certify(const ArthurInput& input);

struct VerifyReport {
  bool ok = false;
  std::string mismatch;  // first mismatch, empty when ok

  explicit operator bool() const { return ok; }
};

/// Replays a certificate from its input alone.
VerifyReport verify(const Certificate& cert);

/// Human-readable derivation, one block per step.
std::string explain(const Certificate& cert);

const char* to_string(StepKind k);

// Check names shared by the engine, the verifier and explain().
namespace checks {
inline constexpr const char* kTempered = "tempered";
inline constexpr const char* kMinKTypeForm = "minKTypeForm";
inline constexpr const char* kBaseGroup = "baseGroup";
inline constexpr const char* kTemperedExponent = "temperedExponent";
inline constexpr const char* kGlCharacter = "glCharacter";
inline constexpr const char* kMinKTypePadding = "minKTypePadding";
inline constexpr const char* kParameters = "parameters";
inline constexpr const char* kStabilityLower = "stabilityLower";
inline constexpr const char* kStabilityUpper = "stabilityUpper";
inline constexpr const char* kNonvanishing = "nonvanishing";
inline constexpr const char* kBoundForms = "boundForms";
inline constexpr const char* kGrowthChainFirst = "growthChainFirst";
inline constexpr const char* kGrowthChainSecond = "growthChainSecond";
inline constexpr const char* kGrowthDirect = "growthDirect";
inline constexpr const char* kGrowthScalar = "growthScalar";
inline constexpr const char* kGrowthAgreement = "growthAgreement";
inline constexpr const char* kMinKTypeTheta = "minKTypeTheta";
}  // namespace checks

}  // namespace sopq
