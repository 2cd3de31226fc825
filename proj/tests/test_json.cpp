#include <gtest/gtest.h>

#include "unimodal/acceptance.hpp"
#include "unimodal/json.hpp"

using nlohmann::json;
using unimodal::poly::IntPoly;
namespace enc = unimodal::json;

TEST(Json, PolynomialsAreDecimalStrings) {
  const IntPoly f = IntPoly::one_plus_x_pow(100);
  const json j = enc::encode(f);
  EXPECT_EQ(j[50], unimodal::binomial(100, 50).get_str());
  EXPECT_EQ(enc::decode_poly(j), f);
  EXPECT_EQ(enc::decode_poly(std::string(R"(["1","1","2","1","1"])")), IntPoly({1, 1, 2, 1, 1}));
  EXPECT_EQ(enc::decode_poly(std::string("[1, -2, 3]")), IntPoly({1, -2, 3}));
}

TEST(Json, DecodeRejectsBadInput) {
  EXPECT_THROW(enc::decode_poly(std::string("[1,")), unimodal::InvalidArgument);
  EXPECT_THROW(enc::decode_poly(std::string("{}")), unimodal::InvalidArgument);
  EXPECT_THROW(enc::decode_poly(std::string(R"(["1x"])")), unimodal::InvalidArgument);
  EXPECT_THROW(enc::decode_poly(std::string("[1.5]")), unimodal::InvalidArgument);
}

TEST(Json, FamilyRoundTrip) {
  const json j = json::parse("[[1,2],[3],[]]");
  const auto family = enc::decode_family(j, 3);
  EXPECT_EQ(enc::encode_family(family), j);
  EXPECT_THROW(enc::decode_family(json::parse("[[4]]"), 3), unimodal::InvalidArgument);
}

TEST(Json, AuditReportShape) {
  const json j = enc::encode(unimodal::inject::audit(unimodal::inject::Rule::MaxWt, 2, 2));
  EXPECT_EQ(j["outcome"], "Undefined");
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["witnesses"], json::parse("[[1,0]]"));
  EXPECT_TRUE(j["image"].is_null());
}

TEST(Json, PathsAndLines) {
  const unimodal::path::LatticePath p({{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(enc::encode(p), json::parse("[[0,0],[1,0],[1,1]]"));
  EXPECT_EQ(enc::encode(unimodal::path::GridLine{unimodal::path::Orientation::DiagonalUp, -3}),
            json::parse(R"({"orientation":"diagonal-up","offset":-3})"));
}

TEST(Json, AcceptanceEncodingIsDeterministicWithoutTiming) {
  const auto a = unimodal::acceptance::encode(unimodal::acceptance::stirling_rows(), false).dump();
  const auto b = unimodal::acceptance::encode(unimodal::acceptance::stirling_rows(), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("elapsed"), std::string::npos);
}
