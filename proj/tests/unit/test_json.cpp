#include <gtest/gtest.h>

#include "sopq/error.hpp"
#include "sopq/json_io.hpp"

using namespace sopq;
using sopq::json::Json;

namespace {
SOpqKType trivial(int p, int q) {
  return make_sopq_ktype(SOpqKType::Shape::Extended, SOWeight::zero(p), SOWeight::zero(q), Sign::Plus);
}
}  // namespace

TEST(Json, VDResultEncodingIsCompactAndOrdered) {
  EXPECT_EQ(json::encode(v_D(validate_diagram({1, 1}, Flavor::Orthogonal))).dump(),
            R"({"raw":["0"],"canonical":{"magnitudes":["0"],"class":"merged"}})");
  const auto ve = json::encode(v_D(validate_diagram({2, 2}, Flavor::Orthogonal)));
  EXPECT_TRUE(ve.at("veryEven").get<bool>());
  EXPECT_EQ(ve.at("classes").size(), 2u);
}

TEST(Json, CertificateRoundTrip) {
  for (int p = 1; p <= 4; ++p)
    for (int q = p; q <= 5; ++q)
      for (int k = 0; k < p; ++k) {
        const Flavor f = (p + q) % 2 == 0 ? Flavor::Orthogonal : Flavor::Symplectic;
        for (const auto& d : enumerate_diagrams(2 * k, f)) {
          const auto c = certify(make_arthur_input(p, q, k, d, trivial(p - k, q - k), true));
          const auto text = json::encode(c).dump();
          const auto back = json::certificate_from_json(json::parse(text));
          EXPECT_EQ(back, c);
          EXPECT_EQ(json::encode(back).dump(), text);
        }
      }
}

TEST(Json, StrictDecoding) {
  EXPECT_THROW(json::parse("{"), InputError);
  EXPECT_THROW(json::halfint_from_json(Json(1)), InputError);
  EXPECT_THROW(json::halfint_from_json(Json("1.5")), InputError);
  EXPECT_THROW(json::diagram_from_json(Json::parse(R"({"parts":[3,1],"flavor":"orthogonal"})")), InputError);
  EXPECT_THROW(json::diagram_from_json(Json::parse(R"({"parts":[1,3],"flavor":"orthogonal","x":1})")), InputError);
  EXPECT_THROW(json::diagram_from_json(Json::parse(R"({"parts":[1,3]})")), InputError);
  EXPECT_THROW(json::sopq_ktype_from_json(Json::parse(
                   R"({"shape":"extended","p":3,"q":3,"xi":["1/2"],"eta":["0"],"sign":"+"})")),
               InputError);
  EXPECT_NO_THROW(json::sopq_ktype_from_json(
      Json::parse(R"({"shape":"extended","p":3,"q":3,"xi":["1"],"eta":["0"],"sign":"-"})")));
}

TEST(Json, ArthurInputParsing) {
  const auto in = json::arthur_input_from_json(Json::parse(
      R"({"p":3,"q":3,"k":2,"diagram":{"parts":[1,3],"flavor":"orthogonal"},)"
      R"("sigmaMinKType":{"shape":"extended","p":1,"q":1,"xi":[],"eta":[],"sign":"+"},"sigmaTempered":true})"));
  EXPECT_EQ(in.k, 2);
  EXPECT_EQ(in.diagram.parts(), (std::vector<int>{1, 3}));
  EXPECT_EQ(json::encode(in).dump(),
            R"({"p":3,"q":3,"k":2,"diagram":{"parts":[1,3],"flavor":"orthogonal"},)"
            R"("sigmaMinKType":{"shape":"extended","p":1,"q":1,"xi":[],"eta":[],"sign":"+"},"sigmaTempered":true})");
}
