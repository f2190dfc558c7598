#include "sopq/json_io.hpp"

#include <algorithm>

#include "sopq/error.hpp"

namespace sopq::json {

namespace {

// Objects must carry exactly the listed keys.
void expect_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  for (const char* k : keys)
    if (!j.contains(k)) throw InputError(std::string(what) + ": missing key \"" + k + "\"");
  if (j.size() != keys.size()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
        throw InputError(std::string(what) + ": unexpected key \"" + it.key() + "\"");
    }
  }
}

int int_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_boolean()) throw InputError(std::string("\"") + key + "\" must be a boolean");
  return v.get<bool>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (!v.is_string()) throw InputError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

SignClass sign_class_from_string(const std::string& s) {
  if (s == "plus") return SignClass::Plus;
  if (s == "minus") return SignClass::Minus;
  if (s == "merged") return SignClass::Merged;
  throw InputError("unknown sign class \"" + s + "\"");
}

StepKind step_kind_from_string(const std::string& s) {
  if (s == "base") return StepKind::Base;
  if (s == "pairDeletion") return StepKind::PairDeletion;
  if (s == "quantumInduction") return StepKind::QuantumInduction;
  throw InputError("unknown step kind \"" + s + "\"");
}

Json ktype_body(const SOpqKType& t) {
  Json j;
  j["shape"] = t.shape == SOpqKType::Shape::Extended ? "extended" : "fused";
  j["p"] = t.p();
  j["q"] = t.q();
  j["xi"] = encode(t.xi.xi());
  j["eta"] = encode(t.eta.xi());
  j["sign"] = to_string(t.sign);
  return j;
}

}  // namespace

Json encode(HalfInt h) { return h.to_string(); }

Json encode(const HalfIntVec& v) {
  Json j = Json::array();
  for (auto h : v) j.push_back(encode(h));
  return j;
}

Json encode(const CanonicalWeight& c) {
  Json j;
  j["magnitudes"] = encode(c.magnitudes);
  j["class"] = to_string(c.sign_class);
  return j;
}

Json encode(const Signature& s) {
  Json j;
  j["p"] = s.p();
  j["q"] = s.q();
  return j;
}

Json encode(const RestrictedRoot& r) {
  Json j;
  j["vector"] = encode(r.vector);
  j["multiplicity"] = r.multiplicity;
  return j;
}

Json encode(const SOWeight& w) {
  Json j;
  j["p"] = w.p();
  j["xi"] = encode(w.xi());
  return j;
}

Json encode(const OType& t) {
  Json j;
  j["shape"] = t.shape == OType::Shape::Signed ? "signed" : "induced";
  j["p"] = t.weight.p();
  j["xi"] = encode(t.weight.xi());
  j["sign"] = to_string(t.sign);
  return j;
}

Json encode(const SOpqKType& t) { return ktype_body(t); }

Json encode(const ConstituentId& c) {
  Json j;
  if (c.kind == ConstituentId::Kind::Large)
    j["large"] = to_string(c.large);
  else
    j["index"] = c.index;
  return j;
}

Json encode(const YoungDiagram& d) {
  Json j;
  j["parts"] = d.parts();
  j["flavor"] = to_string(d.flavor());
  return j;
}

Json encode(const VDResult& v) {
  Json j;
  j["raw"] = encode(v.raw);
  j["canonical"] = encode(v.canonical);
  if (v.very_even) {
    j["veryEven"] = true;
    Json classes = Json::array();
    for (const auto& c : v.classes) classes.push_back(encode(c));
    j["classes"] = std::move(classes);
  }
  return j;
}

Json encode(const SpKType& t) {
  Json j;
  j["m"] = t.m;
  j["weight"] = encode(t.weight);
  return j;
}

Json encode(const ExponentBound& b) {
  Json j;
  j["vector"] = encode(b.vector);
  j["strict"] = b.strict;
  return j;
}

Json encode(const ArthurInput& in) {
  Json j;
  j["p"] = in.sig.p();
  j["q"] = in.sig.q();
  j["k"] = in.k;
  j["diagram"] = encode(in.diagram);
  j["sigmaMinKType"] = encode(in.sigma_min_ktype);
  j["sigmaTempered"] = in.sigma_tempered;
  return j;
}

Json encode(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  Json ops = Json::array();
  for (const auto& v : c.operands) ops.push_back(encode(v));
  j["operands"] = std::move(ops);
  return j;
}

Json encode(const CertStep& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == StepKind::PairDeletion) j["d"] = s.d;
  if (s.kind == StepKind::QuantumInduction) {
    j["dLow"] = s.d_low;
    j["dHigh"] = s.d_high;
    j["m"] = s.m;
    j["dStep"] = s.d_step;
    j["s"] = s.s;
    j["t"] = s.t;
  }
  j["before"] = encode(s.before);
  j["after"] = encode(s.after);
  j["decayBefore"] = encode(s.decay_before);
  if (s.bound) j["bound"] = encode(*s.bound);
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(encode(c));
  j["checks"] = std::move(checks);
  j["minKTypeAfter"] = encode(s.min_ktype_after);
  return j;
}

Json encode(const Certificate& c) {
  Json j;
  j["input"] = encode(c.input);
  j["vD"] = encode(c.vd);
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(encode(s));
  j["steps"] = std::move(steps);
  j["verdict"] = c.verdict.certified() ? "certifiedUnitary" : "notCovered";
  if (!c.verdict.certified()) j["reason"] = c.verdict.reason;
  return j;
}

HalfInt halfint_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("half-integers are encoded as strings such as \"3/2\"");
  return HalfInt::parse(j.get<std::string>());
}

HalfIntVec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vectors are encoded as JSON arrays");
  HalfIntVec out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(halfint_from_json(e));
  return out;
}

CanonicalWeight canonical_from_json(const Json& j) {
  expect_keys(j, {"magnitudes", "class"}, "canonical weight");
  return {vec_from_json(j.at("magnitudes")), sign_class_from_string(string_field(j, "class"))};
}

Signature signature_from_json(const Json& j) {
  expect_keys(j, {"p", "q"}, "signature");
  const int p = int_field(j, "p");
  const int q = int_field(j, "q");
  if (p > q) throw InputError("recorded signatures are normalized with p <= q");
  return Signature(p, q);
}

SOWeight so_weight_from_json(const Json& j) {
  expect_keys(j, {"p", "xi"}, "SO(p) weight");
  return validate_so_weight(int_field(j, "p"), vec_from_json(j.at("xi")));
}

Flavor flavor_from_string(const std::string& s) {
  if (s == "orthogonal") return Flavor::Orthogonal;
  if (s == "symplectic") return Flavor::Symplectic;
  throw InputError("unknown flavor \"" + s + "\" (expected orthogonal or symplectic)");
}

Sign sign_from_string(const std::string& s) {
  if (s == "+") return Sign::Plus;
  if (s == "-") return Sign::Minus;
  throw InputError("unknown sign \"" + s + "\" (expected + or -)");
}

SOpqKType sopq_ktype_from_json(const Json& j) {
  expect_keys(j, {"shape", "p", "q", "xi", "eta", "sign"}, "K-type");
  const std::string shape = string_field(j, "shape");
  SOpqKType::Shape s;
  if (shape == "extended")
    s = SOpqKType::Shape::Extended;
  else if (shape == "fused")
    s = SOpqKType::Shape::Fused;
  else
    throw InputError("unknown K-type shape \"" + shape + "\"");
  return make_sopq_ktype(s, validate_so_weight(int_field(j, "p"), vec_from_json(j.at("xi"))),
                         validate_so_weight(int_field(j, "q"), vec_from_json(j.at("eta"))),
                         sign_from_string(string_field(j, "sign")));
}

ConstituentId constituent_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw InputError("constituent: expected {\"index\":i} or {\"large\":\"+\"}");
  if (j.contains("large")) {
    return sign_from_string(string_field(j, "large")) == Sign::Plus ? ConstituentId::large_plus()
                                                                    : ConstituentId::large_minus();
  }
  if (j.contains("index")) return ConstituentId::small(int_field(j, "index"));
  throw InputError("constituent: expected {\"index\":i} or {\"large\":\"+\"}");
}

YoungDiagram diagram_from_json(const Json& j) {
  expect_keys(j, {"parts", "flavor"}, "diagram");
  const Json& parts = j.at("parts");
  if (!parts.is_array()) throw InputError("diagram parts must be an array of integers");
  std::vector<int> values;
  for (const auto& e : parts) {
    if (!e.is_number_integer()) throw InputError("diagram parts must be integers");
    values.push_back(e.get<int>());
  }
  if (!std::is_sorted(values.begin(), values.end())) throw InputError("diagram parts must be ascending");
  return validate_diagram(std::move(values), flavor_from_string(string_field(j, "flavor")));
}

VDResult vd_from_json(const Json& j) {
  VDResult out;
  if (j.is_object() && j.contains("veryEven")) {
    expect_keys(j, {"raw", "canonical", "veryEven", "classes"}, "vD");
    out.very_even = bool_field(j, "veryEven");
    const Json& classes = j.at("classes");
    if (!classes.is_array()) throw InputError("vD classes must be an array");
    for (const auto& c : classes) out.classes.push_back(canonical_from_json(c));
  } else {
    expect_keys(j, {"raw", "canonical"}, "vD");
  }
  out.raw = vec_from_json(j.at("raw"));
  out.canonical = canonical_from_json(j.at("canonical"));
  if (!out.very_even && !j.contains("veryEven")) out.classes = {out.canonical};
  return out;
}

ExponentBound bound_from_json(const Json& j) {
  expect_keys(j, {"vector", "strict"}, "bound");
  return {vec_from_json(j.at("vector")), bool_field(j, "strict")};
}

ArthurInput arthur_input_from_json(const Json& j) {
  expect_keys(j, {"p", "q", "k", "diagram", "sigmaMinKType", "sigmaTempered"}, "input");
  return make_arthur_input(int_field(j, "p"), int_field(j, "q"), int_field(j, "k"), diagram_from_json(j.at("diagram")),
                           sopq_ktype_from_json(j.at("sigmaMinKType")), bool_field(j, "sigmaTempered"));
}

Check check_from_json(const Json& j) {
  expect_keys(j, {"name", "pass", "operands"}, "check");
  Check c{string_field(j, "name"), bool_field(j, "pass"), {}};
  const Json& ops = j.at("operands");
  if (!ops.is_array()) throw InputError("check operands must be an array");
  for (const auto& v : ops) c.operands.push_back(vec_from_json(v));
  return c;
}

CertStep step_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("step: expected a JSON object");
  CertStep s;
  s.kind = step_kind_from_string(string_field(j, "kind"));
  switch (s.kind) {
    case StepKind::Base:
      expect_keys(j, {"kind", "before", "after", "decayBefore", "checks", "minKTypeAfter"}, "base step");
      break;
    case StepKind::PairDeletion:
      expect_keys(j, {"kind", "d", "before", "after", "decayBefore", "checks", "minKTypeAfter"}, "pair deletion step");
      s.d = int_field(j, "d");
      break;
    case StepKind::QuantumInduction:
      expect_keys(j,
                  {"kind", "dLow", "dHigh", "m", "dStep", "s", "t", "before", "after", "decayBefore", "bound", "checks",
                   "minKTypeAfter"},
                  "quantum induction step");
      s.d_low = int_field(j, "dLow");
      s.d_high = int_field(j, "dHigh");
      s.m = int_field(j, "m");
      s.d_step = int_field(j, "dStep");
      s.s = int_field(j, "s");
      s.t = int_field(j, "t");
      s.bound = bound_from_json(j.at("bound"));
      break;
  }
  s.before = signature_from_json(j.at("before"));
  s.after = signature_from_json(j.at("after"));
  s.decay_before = vec_from_json(j.at("decayBefore"));
  const Json& checks = j.at("checks");
  if (!checks.is_array()) throw InputError("step checks must be an array");
  for (const auto& c : checks) s.checks.push_back(check_from_json(c));
  s.min_ktype_after = sopq_ktype_from_json(j.at("minKTypeAfter"));
  return s;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("certificate: expected a JSON object");
  const std::string verdict = j.contains("verdict") ? string_field(j, "verdict") : "";
  Certificate c;
  if (verdict == "certifiedUnitary") {
    expect_keys(j, {"input", "vD", "steps", "verdict"}, "certificate");
    c.verdict = {Verdict::Kind::CertifiedUnitary, ""};
  } else if (verdict == "notCovered") {
    expect_keys(j, {"input", "vD", "steps", "verdict", "reason"}, "certificate");
    c.verdict = {Verdict::Kind::NotCovered, string_field(j, "reason")};
  } else {
    throw InputError("certificate verdict must be certifiedUnitary or notCovered");
  }
  c.input = arthur_input_from_json(j.at("input"));
  c.vd = vd_from_json(j.at("vD"));
  const Json& steps = j.at("steps");
  if (!steps.is_array()) throw InputError("certificate steps must be an array");
  for (const auto& s : steps) c.steps.push_back(step_from_json(s));
  return c;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace sopq::json
