#pragma once

#include <json.hpp>

#include <string>
#include <utility>

#include "tilt3/constraints.hpp"
#include "tilt3/heart.hpp"
#include "tilt3/stability.hpp"

namespace tilt3 {

using Json = nlohmann::ordered_json;

// Rationals serialize as plain JSON integers when integral and as "p/q"
// strings otherwise; both forms parse back.
inline Json rational_to_json(const Rational& q) {
  if (is_integer(q) && mpz_fits_slong_p(q.get_num().get_mpz_t()))
    return Json(q.get_num().get_si());
  return Json(to_string(q));
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected rational, got " + j.dump());
}

inline Json chern_to_json(const ChernVector& v) {
  return Json::array({rational_to_json(v.a0), rational_to_json(v.a1),
                      rational_to_json(v.a2), rational_to_json(v.a3)});
}

inline ChernVector chern_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("ch")) throw ParseError("object needs a 'ch' entry");
    arr = &j.at("ch");
  }
  if (!arr->is_array() || arr->size() != 4)
    throw ParseError("character must be a 4-element array");
  return ChernVector(rational_from_json((*arr)[0]), rational_from_json((*arr)[1]),
                     rational_from_json((*arr)[2]), rational_from_json((*arr)[3]));
}

inline Json slope_report_to_json(const ChernVector& v, const SlopeReport& r,
                                 bool with_float = false) {
  Json j;
  j["ch"] = chern_to_json(v);
  j["mu"] = to_string(r.mu);
  j["mu_twisted"] = to_string(r.mu_twisted);
  j["nu"] = to_string(r.nu);
  j["Z"] = Json{{"re", to_string(r.Z.re)}, {"im", to_string(r.Z.im)}};
  j["disc"] = to_string(r.disc);
  if (with_float) {
    Json approx;
    if (!r.mu.is_infinite()) approx["mu"] = r.mu.finite().to_double();
    if (!r.mu_twisted.is_infinite())
      approx["mu_twisted"] = r.mu_twisted.finite().to_double();
    if (!r.nu.is_infinite()) approx["nu"] = r.nu.finite().to_double();
    approx["Z"] = Json{{"re", r.Z.re.to_double()}, {"im", r.Z.im.to_double()}};
    j["approx"] = approx;
  }
  return j;
}

inline Json table_to_json(const DecompositionTable& t) {
  Json j;
  j["source"] = chern_to_json(t.source);
  Json parts = Json::object();
  for (const auto& [d, v] : t.parts) parts[std::to_string(d)] = chern_to_json(v);
  j["parts"] = parts;
  if (!t.annotations.empty()) {
    Json ann = Json::object();
    for (const auto& [d, w] : t.annotations) ann[std::to_string(d)] = to_string(w);
    j["annotations"] = ann;
  }
  j["mass"] = rational_to_json(t.mass());
  return j;
}

inline DecompositionTable table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("parts"))
    throw ParseError("table needs 'source' and 'parts'");
  DecompositionTable t;
  t.source = chern_from_json(j.at("source"));
  for (const auto& [key, value] : j.at("parts").items())
    t.parts[std::stoi(key)] = chern_from_json(value);
  if (j.contains("annotations"))
    for (const auto& [key, value] : j.at("annotations").items())
      t.annotations.emplace(std::stoi(key),
                            parse_interval(value.get<std::string>()));
  return t;
}

inline Json violations_to_json(const std::vector<Violation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs)
    arr.push_back(Json{{"rule", v.rule}, {"degree", v.degree}, {"detail", v.detail}});
  return arr;
}

}  // namespace tilt3
