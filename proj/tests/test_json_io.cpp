#include "vecpic/json_io.hpp"

#include <gtest/gtest.h>

using namespace vecpic;

TEST(JsonIo, BigIntegers) {
  EXPECT_TRUE(bigToJson(BigInt(42)).is_number_integer());
  EXPECT_TRUE(bigToJson(-(BigInt(1) << 52)).is_number_integer());
  const auto big = bigToJson(BigInt(1) << 70);
  ASSERT_TRUE(big.is_string());
  EXPECT_EQ(BigInt(big.get<std::string>()), BigInt(1) << 70);
  EXPECT_EQ(rationalToJson(Rational(3, 2)), Json("3/2"));
  EXPECT_EQ(rationalToJson(Rational(4, 2)), Json(2));
}

TEST(JsonIo, GraphRoundTrip) {
  DualGraph G({{"E", 1}, {"F", 2}, {"R", 0}}, {{"E", "R"}, {"R", "F"}, {"R", "R"}});
  const auto doc = graphToJson(G);
  EXPECT_EQ(doc["schema"], kDualGraphSchema);
  auto withDeg = doc;
  withDeg["multidegree"] = multidegreeToJson(Multidegree(2, {{"E", -1}, {"F", 1}, {"R", 0}}));
  const auto parsed = parseGraphDocument(withDeg);
  EXPECT_EQ(graphToJson(parsed.graph), doc);
  ASSERT_TRUE(parsed.multidegree.has_value());
  EXPECT_EQ(parsed.multidegree->rank(), 2);
  EXPECT_EQ(parsed.multidegree->totalDegree(), 0);
  EXPECT_FALSE(parseGraphDocument(doc).multidegree.has_value());
}

TEST(JsonIo, Rejections) {
  EXPECT_THROW(parseGraphDocument(Json::array()), ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(R"({"vertices":[]})")), ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(R"({"schema":"other","vertices":[],"edges":[]})")), ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(R"({"vertices":[{"id":"a"}],"edges":[]})")), ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(R"({"vertices":[{"id":"a","genus":2}],"edges":[["a"]]})")), ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(R"({"vertices":[{"id":"a","genus":2}],"edges":[["a","b"]]})")), ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(
                   R"({"vertices":[{"id":"a","genus":2},{"id":"b","genus":1}],"edges":[["a","b"]],"multidegree":{"rank":2,"degrees":{"a":1}}})")),
               ValidationError);
  EXPECT_THROW(parseGraphDocument(Json::parse(
                   R"({"vertices":[{"id":"a","genus":2}],"edges":[],"multidegree":{"rank":2,"degrees":{"a":"x"}}})")),
               ValidationError);
}
