#pragma once

#include <initializer_list>
#include <nlohmann/json.hpp>
#include <string>

#include "sopq/certify.hpp"
#include "sopq/dps.hpp"
#include "sopq/growth.hpp"
#include "sopq/ktypes.hpp"
#include "sopq/rootdata.hpp"
#include "sopq/theta.hpp"
#include "sopq/weights.hpp"
#include "sopq/young.hpp"

// JSON encodings. Half-integers are strings "a" or "a/2" in lowest terms;
// vectors are arrays of such strings. Key order is stable, so dumps are
// byte-for-byte reproducible. Every *_from_json throws InputError.

namespace sopq::json {

using Json = nlohmann::ordered_json;

Json encode(HalfInt h);
Json encode(const HalfIntVec& v);
Json encode(const CanonicalWeight& c);
Json encode(const Signature& s);
Json encode(const RestrictedRoot& r);
Json encode(const SOWeight& w);
Json encode(const OType& t);
Json encode(const SOpqKType& t);
Json encode(const ConstituentId& c);
Json encode(const YoungDiagram& d);
Json encode(const VDResult& v);
Json encode(const SpKType& t);
Json encode(const ExponentBound& b);
Json encode(const ArthurInput& in);
Json encode(const Check& c);
Json encode(const CertStep& s);
Json encode(const Certificate& c);

HalfInt halfint_from_json(const Json& j);
HalfIntVec vec_from_json(const Json& j);
CanonicalWeight canonical_from_json(const Json& j);
Signature signature_from_json(const Json& j);
SOWeight so_weight_from_json(const Json& j);
SOpqKType sopq_ktype_from_json(const Json& j);
ConstituentId constituent_from_json(const Json& j);
YoungDiagram diagram_from_json(const Json& j);
VDResult vd_from_json(const Json& j);
ExponentBound bound_from_json(const Json& j);
ArthurInput arthur_input_from_json(const Json& j);
Check check_from_json(const Json& j);
CertStep step_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

Flavor flavor_from_string(const std::string& s);
Sign sign_from_string(const std::string& s);

/// Parses text; malformed JSON becomes InputError.
Json parse(const std::string& text);

}  // namespace sopq::json
