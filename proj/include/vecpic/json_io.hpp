#pragma once

#include "vecpic/balance.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace vecpic {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDualGraphSchema = "dualgraph-v1";

/// Integers that fit in 53 bits stay JSON numbers; anything larger becomes a decimal string.
inline Json bigToJson(const BigInt& x) {
  static const BigInt limit = BigInt(1) << 53;
  if (x < limit && x > -limit) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

inline Json rationalToJson(const Rational& x) {
  if (isIntegral(x)) return bigToJson(numerator(x));
  return Json(toString(x));
}

inline Json graphToJson(const DualGraph& G) {
  Json doc;
  doc["schema"] = kDualGraphSchema;
  doc["vertices"] = Json::array();
  for (const auto& v : G.vertices()) doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
  doc["edges"] = Json::array();
  for (const auto& [a, b] : G.edges()) doc["edges"].push_back({G.vertex(a).id, G.vertex(b).id});
  return doc;
}

inline Json multidegreeToJson(const Multidegree& M) {
  Json out{{"rank", M.rank()}, {"degrees", Json::object()}};
  for (const auto& [id, deg] : M.degrees()) out["degrees"][id] = deg;
  return out;
}

struct GraphDocument {
  DualGraph graph;
  std::optional<Multidegree> multidegree;
};

inline GraphDocument parseGraphDocument(const Json& doc) {
  auto fail = [](const std::string& msg) -> ValidationError { return ValidationError("dualgraph-v1: " + msg); };
  if (!doc.is_object()) throw fail("document must be an object");
  if (doc.contains("schema") && doc["schema"] != kDualGraphSchema) throw fail("unsupported schema tag");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw fail("missing vertices array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw fail("missing edges array");

  std::vector<Vertex> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) throw fail("vertex needs a string id");
    if (!v.contains("genus") || !v["genus"].is_number_integer()) throw fail("vertex needs an integer genus");
    vertices.push_back({v["id"].get<std::string>(), v["genus"].get<int>()});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) throw fail("edge must be a pair of ids");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  GraphDocument out{DualGraph(std::move(vertices), edges), std::nullopt};

  if (doc.contains("multidegree")) {
    const auto& m = doc["multidegree"];
    if (!m.is_object() || !m.contains("rank") || !m["rank"].is_number_integer()) throw fail("multidegree needs an integer rank");
    if (!m.contains("degrees") || !m["degrees"].is_object()) throw fail("multidegree needs a degrees object");
    std::map<std::string, std::int64_t> degs;
    for (const auto& [id, val] : m["degrees"].items()) {
      if (!val.is_number_integer()) throw fail("degree of " + id + " is not an integer");
      degs[id] = val.get<std::int64_t>();
    }
    Multidegree M(m["rank"].get<int>(), std::move(degs));
    M.aligned(out.graph);  // every vertex must carry a degree
    out.multidegree = std::move(M);
  }
  return out;
}

}  // namespace vecpic
