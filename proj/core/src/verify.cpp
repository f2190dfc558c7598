#include <algorithm>
#include <functional>
#include <map>

#include "sopq/certify.hpp"
#include "sopq/error.hpp"
#include "sopq/theta.hpp"
#include "sopq/weights.hpp"

// Independent replay of a certificate. Nothing here calls certify(); the
// step plan is re-derived from the diagram and every recorded number is
// recomputed from the input through the primitive modules.

namespace sopq {

namespace {

struct Mismatch {
  std::string where;
};

void expect(bool condition, const std::string& where) {
  if (!condition) throw Mismatch{where};
}

// |v_D| sorted descending, read off the sl2 H-spectrum: the spectrum is
// {+e, -e : e in v_D}, so every magnitude occurs twice.
HalfIntVec magnitudes_from_spectrum(std::vector<int> parts, Flavor flavor) {
  if (parts.empty()) return {};
  std::sort(parts.begin(), parts.end());
  HalfIntVec spectrum = abs_vec(h_spectrum_oracle(validate_diagram(std::move(parts), flavor)));
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  HalfIntVec out;
  for (std::size_t i = 0; i < spectrum.size(); i += 2) out.push_back(spectrum[i]);
  return out;
}

HalfIntVec single(int v) { return HalfIntVec{HalfInt(v)}; }

void compare_checks(const std::vector<Check>& got, const std::vector<Check>& want, const std::string& where) {
  expect(got.size() == want.size(), where + ": number of checks");
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::string at = where + ": check " + want[i].name;
    expect(got[i].name == want[i].name, where + ": check " + std::to_string(i) + " name");
    expect(got[i].operands == want[i].operands, at + " operands");
    expect(got[i].pass == want[i].pass, at + " result");
  }
}

struct Planned {
  StepKind kind;
  int low;
  int high;
  int next;
};

// Legality of the recorded steps, walked from the full diagram inward.
std::vector<Planned> replay_plan(const std::vector<CertStep>& steps, const YoungDiagram& diagram) {
  std::map<int, int> remaining;
  for (int d : diagram.parts()) ++remaining[d];
  auto take = [&](int d, const std::string& where) {
    auto it = remaining.find(d);
    expect(it != remaining.end() && it->second > 0, where + ": part " + std::to_string(d) + " not available");
    if (--it->second == 0) remaining.erase(it);
  };

  std::vector<Planned> out(steps.size());
  for (std::size_t i = steps.size(); i-- > 1;) {
    const auto& step = steps[i];
    const std::string where = "step " + std::to_string(i);
    std::optional<int> smallest_pair;
    for (auto [value, mult] : remaining) {
      if (mult >= 2) {
        smallest_pair = value;
        break;
      }
    }
    if (step.kind == StepKind::PairDeletion) {
      expect(smallest_pair.has_value() && *smallest_pair == step.d, where + ": pair deletion must take the smallest pair");
      take(step.d, where);
      take(step.d, where);
      out[i] = {StepKind::PairDeletion, step.d, step.d, 0};
    } else if (step.kind == StepKind::QuantumInduction) {
      expect(!smallest_pair.has_value(), where + ": quantum induction while an identical pair remains");
      expect(!remaining.empty(), where + ": no parts left");
      const int high = remaining.rbegin()->first;
      take(high, where);
      int low = 0;
      if (!remaining.empty()) {
        low = remaining.rbegin()->first;
        take(low, where);
      } else {
        expect(diagram.flavor() == Flavor::Symplectic, where + ": unpaired part in an orthogonal diagram");
      }
      expect(step.d_high == high, where + ": dHigh");
      expect(step.d_low == low, where + ": dLow");
      const int next = remaining.empty() ? 0 : remaining.rbegin()->first;
      out[i] = {StepKind::QuantumInduction, low, high, next};
    } else {
      throw Mismatch{where + ": base step out of place"};
    }
  }
  expect(remaining.empty(), "steps do not consume the whole diagram");
  return out;
}

void replay(const Certificate& cert) {
  const ArthurInput& in = cert.input;
  try {
    ArthurInput rebuilt = make_arthur_input(in.sig.p(), in.sig.q(), in.k, in.diagram, in.sigma_min_ktype,
                                            in.sigma_tempered);
    expect(rebuilt == in, "input: not in normal form");
    rebuilt.diagram = validate_diagram(in.diagram.parts(), in.diagram.flavor());
    expect(rebuilt.diagram == in.diagram, "input: diagram");
  } catch (const InputError& e) {
    throw Mismatch{std::string("input: ") + e.what()};
  }
  expect(cert.vd == v_D(in.diagram), "vD");

  expect(!cert.steps.empty(), "no steps");
  const Flavor flavor = in.diagram.flavor();

  // Base.
  const Signature base_sig(in.sig.p() - in.k, in.sig.q() - in.k);
  const CertStep& base = cert.steps[0];
  expect(base.kind == StepKind::Base, "step 0: kind");
  expect(base.d == 0 && base.d_low == 0 && base.d_high == 0 && base.m == 0 && base.d_step == 0 && base.s == 0 &&
             base.t == 0,
         "step 0: parameters");
  expect(base.before == base_sig && base.after == base_sig, "step 0: signature");
  const HalfIntVec base_decay = -rho(base_sig);
  expect(base.decay_before == base_decay, "step 0: decayBefore");
  expect(!base.bound.has_value(), "step 0: bound");
  expect(base.min_ktype_after == in.sigma_min_ktype, "step 0: minKTypeAfter");
  const bool trivial_sigma = in.sigma_min_ktype.xi.is_zero() && in.sigma_min_ktype.eta.is_zero();
  std::vector<Check> base_checks = {
      {checks::kTempered, in.sigma_tempered, {}},
      {checks::kMinKTypeForm,
       in.sigma_min_ktype.shape == SOpqKType::Shape::Extended && in.sigma_min_ktype.sign == Sign::Plus,
       {}},
      {checks::kBaseGroup, base_sig.p() > 0 || trivial_sigma, {}},
      {checks::kTemperedExponent, tempered_leading_ok(base_decay, base_sig), {base_decay, rho(base_sig)}},
  };
  compare_checks(base.checks, base_checks, "step 0");

  std::string first_failure;
  auto note_failures = [&](const std::vector<Check>& cs, std::size_t index) {
    for (const auto& c : cs)
      if (!c.pass && first_failure.empty()) first_failure = "step " + std::to_string(index) + ": " + c.name;
  };
  note_failures(base_checks, 0);

  if (!first_failure.empty()) {
    expect(cert.steps.size() == 1, "steps recorded past a failing base");
  } else {
    const auto planned = replay_plan(cert.steps, in.diagram);
    Signature sig = base_sig;
    SOpqKType ktype = in.sigma_min_ktype;
    std::vector<int> consumed;

    for (std::size_t i = 1; i < cert.steps.size(); ++i) {
      const CertStep& step = cert.steps[i];
      const Planned& plan = planned[i];
      const std::string where = "step " + std::to_string(i);
      expect(step.before == sig, where + ": before");
      const HalfIntVec e = pad_zeros(magnitudes_from_spectrum(consumed, flavor), sig.rank()) - rho(sig);
      expect(step.decay_before == e, where + ": decayBefore");

      std::vector<Check> want;
      SOpqKType next_ktype;
      if (plan.kind == StepKind::PairDeletion) {
        const int d = plan.low;
        expect(step.d_low == 0 && step.d_high == 0 && step.m == 0 && step.d_step == 0 && step.s == 0 && step.t == 0,
               where + ": parameters");
        expect(!step.bound.has_value(), where + ": bound");
        expect(step.after == Signature(sig.p() + d, sig.q() + d), where + ": after");
        HalfIntVec block;
        for (int j = 0; j < d; ++j) block.push_back(HalfInt::half(d - 1 - 2 * j));
        const HalfIntVec shift = gl_rho_shift(HalfInt::half(sig.p() + sig.q() + d - 1), sig.p(), sig.q(), d);
        next_ktype = pad_ktype(ktype, d);
        want = {
            {checks::kGlCharacter, block == shift, {block, shift}},
            {checks::kMinKTypePadding, next_ktype.is_plus_extended(), {next_ktype.xi.xi(), next_ktype.eta.xi()}},
        };
      } else {
        const int low = plan.low;
        const int high = plan.high;
        const int dstep = (low + high) / 2;
        const int pq = sig.p() + sig.q();
        const int two_m_plus_1 = pq + low;
        expect(two_m_plus_1 % 2 == 1, where + ": m is not an integer");
        const int m = (two_m_plus_1 - 1) / 2;
        const int s = two_m_plus_1 - pq;
        const int t = pq + 2 * dstep - two_m_plus_1;
        expect(step.d_step == dstep && step.m == m && step.s == s && step.t == t && step.d == 0,
               where + ": parameters");
        expect(step.after == Signature(sig.p() + dstep, sig.q() + dstep), where + ": after");
        const ExponentBound bound = theoremA_bound(sig.p(), sig.q(), m);
        const ExponentBound bound_s = growth_bound_from_s(sig.p(), sig.q(), s);
        expect(step.bound.has_value() && *step.bound == bound, where + ": bound");
        HalfIntVec middle(sig.rank());
        const HalfIntVec r = rho(sig);
        for (std::size_t j = 0; j < middle.size(); ++j) middle[j] = HalfInt::half(plan.next) - r[j];
        const bool direct = strictly_dominated(e, bound.vector);
        const bool shortcut = plan.next <= low;
        next_ktype = pad_ktype(ktype, dstep);
        bool theta_ok = false;
        try {
          theta_ok = ktype.is_plus_extended() &&
                     theta0_back(m, sig.p(), sig.q(), dstep, ktype.xi, ktype.eta) == next_ktype;
        } catch (const InputError&) {
        }
        want = {
            {checks::kParameters, s == low && t == high, {single(s), single(t)}},
            {checks::kStabilityLower, pq <= two_m_plus_1, {single(pq), single(two_m_plus_1)}},
            {checks::kStabilityUpper, two_m_plus_1 <= pq + dstep, {single(two_m_plus_1), single(pq + dstep)}},
            {checks::kNonvanishing, nonvanishing_stable(sig.p(), sig.q(), m), {}},
            {checks::kBoundForms, bound == bound_s, {bound.vector, bound_s.vector}},
            {checks::kGrowthChainFirst, weakly_dominated(e, middle), {e, middle}},
            {checks::kGrowthChainSecond, strictly_dominated(middle, bound.vector), {middle, bound.vector}},
            {checks::kGrowthDirect, direct, {e, bound.vector}},
            {checks::kGrowthScalar, shortcut, {single(plan.next), single(low)}},
            {checks::kGrowthAgreement, direct == shortcut, {}},
            {checks::kMinKTypeTheta, theta_ok, {next_ktype.xi.xi(), next_ktype.eta.xi()}},
        };
      }
      compare_checks(step.checks, want, where);
      expect(step.min_ktype_after == next_ktype, where + ": minKTypeAfter");
      note_failures(want, i);

      sig = step.after;
      ktype = next_ktype;
      consumed.push_back(plan.high);
      if (plan.low > 0) consumed.push_back(plan.low);
    }
    expect(sig == in.sig, "final signature differs from the input group");
    expect(ktype == pad_ktype(in.sigma_min_ktype, in.k), "final minimal K-type");
  }

  const Verdict want = first_failure.empty() ? Verdict{Verdict::Kind::CertifiedUnitary, ""}
                                             : Verdict{Verdict::Kind::NotCovered, first_failure};
  expect(cert.verdict == want, "verdict");
}

}  // namespace

VerifyReport verify(const Certificate& cert) {
  try {
    replay(cert);
  } catch (const Mismatch& m) {
    return {false, m.where};
  } catch (const InputError& e) {
    return {false, std::string("replay error: ") + e.what()};
  }
  return {true, ""};
}

}  // namespace sopq
