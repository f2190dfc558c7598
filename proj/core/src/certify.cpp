#include "sopq/certify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "sopq/error.hpp"
#include "sopq/theta.hpp"
#include "sopq/weights.hpp"

namespace sopq {

bool CertStep::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* CertStep::find_check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Base: return "base";
    case StepKind::PairDeletion: return "pairDeletion";
    case StepKind::QuantumInduction: return "quantumInduction";
  }
  return "base";
}

ArthurInput make_arthur_input(int p, int q, int k, YoungDiagram diagram, SOpqKType sigma_min_ktype,
                              bool sigma_tempered) {
  const Signature sig(p, q);
  if (k < 0 || k > sig.p())
    throw InputError("k = " + std::to_string(k) + " must lie in [0, " + std::to_string(sig.p()) + "]");
  if (diagram.size() != 2 * k)
    throw InputError("diagram size " + std::to_string(diagram.size()) + " must equal 2k = " + std::to_string(2 * k));
  const Flavor expected = (sig.p() + sig.q()) % 2 == 0 ? Flavor::Orthogonal : Flavor::Symplectic;
  if (diagram.flavor() != expected)
    throw InputError(std::string("p + q ") + ((sig.p() + sig.q()) % 2 == 0 ? "even" : "odd") + " needs a " +
                     to_string(expected) + " diagram");
  if (sig.swapped()) std::swap(sigma_min_ktype.xi, sigma_min_ktype.eta);
  if (sigma_min_ktype.p() != sig.p() - k || sigma_min_ktype.q() != sig.q() - k)
    throw InputError("sigma's K-type must live on S(O(" + std::to_string(sig.p() - k) + ")O(" +
                     std::to_string(sig.q() - k) + "))");
  return ArthurInput{sig, k, std::move(diagram), std::move(sigma_min_ktype), sigma_tempered};
}

namespace {

HalfIntVec scalar(std::int64_t v) { return {HalfInt(v)}; }

struct Selection {
  StepKind kind;
  int low;   // PairDeletion: d
  int high;  // PairDeletion: d
  int next;  // QuantumInduction: largest remaining part after removal, or 0
};

// Outermost selection first.
std::vector<Selection> plan(const YoungDiagram& diagram) {
  std::multiset<int> remaining(diagram.parts().begin(), diagram.parts().end());
  std::vector<Selection> out;
  while (!remaining.empty()) {
    std::optional<int> pair;
    for (int value : remaining) {
      if (remaining.count(value) >= 2) {
        pair = value;
        break;
      }
    }
    if (pair) {
      remaining.erase(remaining.find(*pair));
      remaining.erase(remaining.find(*pair));
      out.push_back({StepKind::PairDeletion, *pair, *pair, 0});
      continue;
    }
    const int high = *remaining.rbegin();
    remaining.erase(std::prev(remaining.end()));
    int low = 0;  // d_0 = 0 when a single part is left
    if (!remaining.empty()) {
      low = *remaining.rbegin();
      remaining.erase(std::prev(remaining.end()));
    }
    const int next = remaining.empty() ? 0 : *remaining.rbegin();
    out.push_back({StepKind::QuantumInduction, low, high, next});
  }
  return out;
}

HalfIntVec consumed_magnitudes(std::vector<int> consumed, Flavor flavor) {
  if (consumed.empty()) return {};
  std::sort(consumed.begin(), consumed.end());
  return v_D(validate_diagram(std::move(consumed), flavor)).canonical.magnitudes;
}

HalfIntVec ktype_operand(const SOWeight& w) { return w.xi(); }

CertStep base_step(const ArthurInput& input) {
  const Signature base = input.base_signature();
  CertStep step;
  step.kind = StepKind::Base;
  step.before = base;
  step.after = base;
  step.decay_before = decay_exponent({}, base);
  step.min_ktype_after = input.sigma_min_ktype;

  step.checks.push_back({checks::kTempered, input.sigma_tempered, {}});
  step.checks.push_back({checks::kMinKTypeForm, input.sigma_min_ktype.is_plus_extended(), {}});
  // SO(0, n) bases only carry the trivial representation.
  const bool degenerate = base.p() == 0;
  const bool trivial = input.sigma_min_ktype.xi.is_zero() && input.sigma_min_ktype.eta.is_zero();
  step.checks.push_back({checks::kBaseGroup, !degenerate || trivial, {}});
  step.checks.push_back(
      {checks::kTemperedExponent, tempered_leading_ok(step.decay_before, base), {step.decay_before, rho(base)}});
  return step;
}

CertStep pair_deletion_step(const Signature& before, int d, const std::vector<int>& consumed, Flavor flavor,
                            const SOpqKType& ktype) {
  CertStep step;
  step.kind = StepKind::PairDeletion;
  step.d = d;
  step.before = before;
  step.after = Signature(before.p() + d, before.q() + d);
  step.decay_before = decay_exponent(consumed_magnitudes(consumed, flavor), before);

  // The trivial GL(d) character contributes exactly v_(d,d).
  const HalfIntVec block = identical_pair_string(d);
  const HalfIntVec shift = gl_rho_shift(HalfInt::half(before.p() + before.q() + d - 1), before.p(), before.q(), d);
  step.checks.push_back({checks::kGlCharacter, block == shift, {block, shift}});

  step.min_ktype_after = pad_ktype(ktype, d);
  step.checks.push_back({checks::kMinKTypePadding,
                         step.min_ktype_after.is_plus_extended(),
                         {ktype_operand(step.min_ktype_after.xi), ktype_operand(step.min_ktype_after.eta)}});
  return step;
}

CertStep quantum_induction_step(const Signature& before, const Selection& sel, const std::vector<int>& consumed,
                                Flavor flavor, const SOpqKType& ktype) {
  CertStep step;
  step.kind = StepKind::QuantumInduction;
  step.d_low = sel.low;
  step.d_high = sel.high;
  step.d_step = (sel.low + sel.high) / 2;
  step.before = before;
  step.after = Signature(before.p() + step.d_step, before.q() + step.d_step);

  const int pq = before.p() + before.q();
  step.m = (pq + sel.low - 1) / 2;
  step.s = 2 * step.m + 1 - pq;
  step.t = pq + 2 * step.d_step - 2 * step.m - 1;

  const HalfIntVec e = decay_exponent(consumed_magnitudes(consumed, flavor), before);
  step.decay_before = e;
  const ExponentBound bound = theoremA_bound(before.p(), before.q(), step.m);
  const ExponentBound bound_s = growth_bound_from_s(before.p(), before.q(), step.s);
  step.bound = bound;
  const HalfIntVec middle = constant_vec(before.rank(), HalfInt::half(sel.next)) - rho(before);

  auto& c = step.checks;
  c.push_back({checks::kParameters, step.s == sel.low && step.t == sel.high, {scalar(step.s), scalar(step.t)}});
  c.push_back({checks::kStabilityLower, pq <= 2 * step.m + 1, {scalar(pq), scalar(2 * step.m + 1)}});
  c.push_back({checks::kStabilityUpper,
               2 * step.m + 1 <= pq + step.d_step,
               {scalar(2 * step.m + 1), scalar(pq + step.d_step)}});
  c.push_back({checks::kNonvanishing, nonvanishing_stable(before.p(), before.q(), step.m), {}});
  c.push_back({checks::kBoundForms, bound == bound_s, {bound.vector, bound_s.vector}});
  c.push_back({checks::kGrowthChainFirst, weakly_dominated(e, middle), {e, middle}});
  c.push_back({checks::kGrowthChainSecond, strictly_dominated(middle, bound.vector), {middle, bound.vector}});
  const bool direct = satisfies_bound(e, bound);
  const bool shortcut = sel.next <= sel.low;
  c.push_back({checks::kGrowthDirect, direct, {e, bound.vector}});
  c.push_back({checks::kGrowthScalar, shortcut, {scalar(sel.next), scalar(sel.low)}});
  c.push_back({checks::kGrowthAgreement, direct == shortcut, {}});

  const SOpqKType padded = pad_ktype(ktype, step.d_step);
  bool theta_ok = false;
  try {
    // theta_0 pairs the O(p') factor with Sp(2m) first, then lifts to O(p'+d).
    const SOpqKType lifted = theta0_back(step.m, before.p(), before.q(), step.d_step, ktype.xi, ktype.eta);
    theta_ok = lifted == padded && ktype.is_plus_extended();
  } catch (const InputError&) {
    theta_ok = false;
  }
  step.min_ktype_after = padded;
  c.push_back({checks::kMinKTypeTheta, theta_ok, {ktype_operand(padded.xi), ktype_operand(padded.eta)}});
  return step;
}

}  // namespace

Certificate certify(const ArthurInput& input) {
  Certificate cert;
  cert.input = input;
  cert.vd = v_D(input.diagram);

  CertStep base = base_step(input);
  const bool base_ok = base.passed();
  cert.steps.push_back(std::move(base));
  if (!base_ok) {
    const auto& failing = *std::find_if(cert.steps[0].checks.begin(), cert.steps[0].checks.end(),
                                        [](const Check& c) { return !c.pass; });
    cert.verdict = {Verdict::Kind::NotCovered, "step 0: " + failing.name};
    return cert;
  }

  auto selections = plan(input.diagram);
  std::reverse(selections.begin(), selections.end());

  Signature sig = input.base_signature();
  SOpqKType ktype = input.sigma_min_ktype;
  std::vector<int> consumed;
  const Flavor flavor = input.diagram.flavor();
  for (const auto& sel : selections) {
    CertStep step = sel.kind == StepKind::PairDeletion
                        ? pair_deletion_step(sig, sel.low, consumed, flavor, ktype)
                        : quantum_induction_step(sig, sel, consumed, flavor, ktype);
    sig = step.after;
    ktype = step.min_ktype_after;
    consumed.push_back(sel.high);
    if (sel.low > 0) consumed.push_back(sel.low);
    cert.steps.push_back(std::move(step));
  }

  cert.verdict = {Verdict::Kind::CertifiedUnitary, ""};
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    for (const auto& c : cert.steps[i].checks) {
      if (!c.pass) {
        cert.verdict = {Verdict::Kind::NotCovered, "step " + std::to_string(i) + ": " + c.name};
        return cert;
      }
    }
  }
  return cert;
}

namespace {

std::string sig_string(const Signature& s) {
  return "SO(" + std::to_string(s.p()) + "," + std::to_string(s.q()) + ")";
}

std::string ktype_string(const SOpqKType& t) {
  if (t.shape == SOpqKType::Shape::Fused) return "(|" + to_string(t.xi.xi()) + "|, |" + to_string(t.eta.xi()) + "|, +)";
  return "(" + to_string(t.xi.xi()) + ", " + to_string(t.eta.xi()) + ", " + to_string(t.sign) + ")";
}

void explain_checks(std::ostringstream& out, const CertStep& step) {
  for (const auto& c : step.checks) {
    out << "    [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    for (std::size_t i = 0; i < c.operands.size(); ++i) out << (i ? " vs " : ": ") << to_string(c.operands[i]);
    out << "\n";
  }
}

}  // namespace

std::string explain(const Certificate& cert) {
  std::ostringstream out;
  const auto& in = cert.input;
  out << "parameter: " << sig_string(in.sig) << ", k = " << in.k << ", " << to_string(in.diagram.flavor())
      << " diagram (";
  for (std::size_t i = 0; i < in.diagram.parts().size(); ++i) out << (i ? "," : "") << in.diagram.parts()[i];
  out << "), sigma minimal K-type " << ktype_string(in.sigma_min_ktype) << "\n";
  out << "v_D = " << to_string(cert.vd.raw) << ", canonical " << to_string(cert.vd.canonical.magnitudes) << " ["
      << to_string(cert.vd.canonical.sign_class) << "]\n";

  const bool orthogonal = in.diagram.flavor() == Flavor::Orthogonal;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    out << "step " << i << ": ";
    switch (step.kind) {
      case StepKind::Base:
        out << "base on " << sig_string(step.before) << ": tempered ⇒ unitary; decay " << to_string(step.decay_before)
            << "\n";
        break;
      case StepKind::PairDeletion:
        out << "pair deletion (" << step.d << "," << step.d << "): " << sig_string(step.before) << " -> "
            << sig_string(step.after) << "; Ind from GL(" << step.d
            << ") of π₀ ⊗ triv is unitary and contains the parameter\n";
        break;
      case StepKind::QuantumInduction:
        out << "quantum induction (" << step.d_low << "," << step.d_high << "): " << sig_string(step.before) << " -> "
            << sig_string(step.after) << " with m = " << step.m << ", d = " << step.d_step << ", s = " << step.s
            << ", t = " << step.t << "; " << (orthogonal ? "odd pair v_(s,t)" : "even singles v_(s) + v_(t)")
            << "; stability p'+q' <= 2m+1 <= p'+q'+d, growth E < bound\n";
        break;
    }
    explain_checks(out, step);
    out << "    minimal K-type " << ktype_string(step.min_ktype_after) << "\n";
  }
  out << "verdict: " << (cert.verdict.certified() ? "certified unitary" : "not covered (" + cert.verdict.reason + ")")
      << "\n";
  return out.str();
}

}  // namespace sopq
