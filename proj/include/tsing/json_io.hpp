#pragma once

// JSON schemas for bodies, arrangements, verification reports and polygons.
//   body:        {"a0": number, "harmonics": [[a_k, b_k], ...], "center": [x, y], "rotation": number}
//   arrangement: {"body": <body without center>, "translations": [[x, y], ...]}

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tsing/body.hpp"
#include "tsing/error.hpp"
#include "tsing/intersection.hpp"
#include "tsing/oracle.hpp"

namespace tsing {

using nlohmann::json;

inline json to_json(Vec2 v) { return json::array({v.x, v.y}); }

inline Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw GeometryError(ErrorCode::BadInput, "expected [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json shape_to_json(const SupportFunction& sf, Angle rotation) {
  json harmonics = json::array();
  for (const auto& hk : sf.harmonics) harmonics.push_back(json::array({hk.a, hk.b}));
  return {{"a0", sf.a0}, {"harmonics", harmonics}, {"rotation", rotation.radians()}};
}

inline json to_json(const SupportBody& b) {
  json j = shape_to_json(b.shape(), b.rotation());
  j["center"] = to_json(b.center());
  return j;
}

inline double number_field(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw GeometryError(ErrorCode::BadInput, std::string(key) + " must be a number");
  return j[key].get<double>();
}

inline SupportFunction shape_from_json(const json& j) {
  if (!j.is_object()) throw GeometryError(ErrorCode::BadInput, "body must be an object");
  if (!j.contains("a0")) throw GeometryError(ErrorCode::BadInput, "body needs a0");
  SupportFunction sf;
  sf.a0 = number_field(j, "a0", 1.0);
  if (j.contains("harmonics")) {
    const json& hs = j["harmonics"];
    if (!hs.is_array()) throw GeometryError(ErrorCode::BadInput, "harmonics must be an array");
    for (const auto& h : hs) {
      const Vec2 ab = vec2_from_json(h);
      sf.harmonics.push_back({ab.x, ab.y});
    }
  }
  return sf;
}

inline SupportBody body_from_json(const json& j) {
  const SupportFunction sf = shape_from_json(j);
  const Vec2 center = j.contains("center") ? vec2_from_json(j["center"]) : Vec2{};
  return SupportBody(sf, center, Angle(number_field(j, "rotation", 0.0)));
}

inline json to_json(const Arrangement& arr) {
  json t = json::array();
  for (Vec2 v : arr.translations()) t.push_back(to_json(v));
  return {{"body", shape_to_json(arr.shape(), arr.rotation())}, {"translations", t}};
}

inline Arrangement arrangement_from_json(const json& j) {
  if (!j.is_object() || !j.contains("body") || !j.contains("translations")) {
    throw GeometryError(ErrorCode::BadInput, "arrangement needs body and translations");
  }
  const json& b = j["body"];
  if (b.contains("center")) {
    throw GeometryError(ErrorCode::BadInput, "arrangement body must not carry a center");
  }
  std::vector<Vec2> translations;
  if (!j["translations"].is_array()) throw GeometryError(ErrorCode::BadInput, "translations must be an array");
  for (const auto& t : j["translations"]) translations.push_back(vec2_from_json(t));
  return Arrangement(shape_from_json(b), Angle(number_field(b, "rotation", 0.0)), std::move(translations));
}

// Margins may be +inf when a check has no instances; JSON has no infinity.
inline json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json to_json(const VerificationReport& r) {
  json vertices = json::array();
  for (const auto& v : r.vertices) {
    vertices.push_back({{"point", to_json(v.point)},
                        {"pair", json::array({v.j, v.k})},
                        {"normal_margin", v.normal_margin},
                        {"pass", v.pass}});
  }
  json edges = json::array();
  for (const auto& e : r.edges) {
    edges.push_back({{"owner", e.owner}, {"measure", e.measure}, {"margin", e.margin}, {"pass", e.pass}});
  }
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"pair", json::array({p.j, p.k})},
                     {"outside_measure", p.outside_measure},
                     {"margin", p.margin},
                     {"pass", p.pass}});
  }
  return {{"schema", 1},
          {"n", r.n},
          {"vertex_count", r.vertex_count},
          {"status", to_string(r.status)},
          {"count_pass", r.count_pass},
          {"redundant", r.redundant},
          {"vertices", vertices},
          {"edges", edges},
          {"pairs", pairs},
          {"partition_residual", finite_or_null(r.partition_residual)},
          {"partition_pass", r.partition_pass},
          {"flags", r.flags},
          {"pass", r.pass}};
}

inline json to_json(const TaggedPolygon& p) {
  json verts = json::array();
  for (Vec2 v : p.vertices) verts.push_back(to_json(v));
  json tags = json::array();
  for (int t : p.tags) tags.push_back(t == kUntagged ? json(nullptr) : json(t));
  return {{"vertices", verts}, {"edge_tags", tags}};
}

// FNV-1a 64 of the compact JSON text, as 16 hex digits.
inline std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tsing
