#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lg/braid.hpp"
#include "lg/ring.hpp"

namespace lg {

using Json = nlohmann::json;

/// Renders a Laurent polynomial as a JSON term array, one object per term
/// in canonical (eq, ep) order.  Coefficients that fit a 64-bit integer are
/// emitted as numbers, larger ones as decimal strings.
inline Json poly_to_json(const LaurentPoly& poly) {
  Json terms = Json::array();
  poly.for_each_term([&](int eq, int ep, const Int& c) {
    Json term = {{"eq", eq}, {"ep", ep}};
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (c >= lo && c <= hi)
      term["coeff"] = c.convert_to<std::int64_t>();
    else
      term["coeff"] = c.str();
    terms.push_back(std::move(term));
  });
  return terms;
}

inline LaurentPoly poly_from_json(const Json& terms) {
  if (!terms.is_array()) throw ParseError("polynomial: expected a JSON array");
  LaurentPoly out;
  for (const Json& term : terms) {
    if (!term.contains("eq") || !term.contains("ep") || !term.contains("coeff"))
      throw ParseError("polynomial term must have eq, ep and coeff fields");
    Int c;
    if (term["coeff"].is_string())
      c = Int(term["coeff"].get<std::string>());
    else
      c = Int(term["coeff"].get<std::int64_t>());
    out += LaurentPoly::term(std::move(c), term["eq"].get<int>(),
                             term["ep"].get<int>());
  }
  return out;
}

/// Ring element as JSON: {"polynomial": [...]} with an extra "y" term array
/// when the odd part is nonzero.
inline Json ring_to_json(const RingElem& value) {
  Json out = {{"polynomial", poly_to_json(value.even())}};
  if (!value.odd().is_zero()) out["y"] = poly_to_json(value.odd());
  return out;
}

/// Accepts any JSON object carrying a "polynomial" field (extra fields are
/// ignored, so CLI output objects parse back directly).
inline RingElem ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("polynomial"))
    throw ParseError("expected a JSON object with a 'polynomial' field");
  LaurentPoly even = poly_from_json(j["polynomial"]);
  LaurentPoly odd;
  if (j.contains("y")) odd = poly_from_json(j["y"]);
  return {std::move(even), std::move(odd)};
}

/// Catalog fixture entry: {"name": ..., "braid": "n=2; 1 1 1" | null,
/// "expected": [terms]}.
struct FixtureRecord {
  std::string name;
  std::string braid;  // empty when the link has no braid presentation
  RingElem expected;
};

inline std::vector<FixtureRecord> fixtures_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("fixture file: expected a JSON array");
  std::vector<FixtureRecord> out;
  for (const Json& entry : j) {
    FixtureRecord rec;
    rec.name = entry.at("name").get<std::string>();
    if (entry.contains("braid") && !entry["braid"].is_null())
      rec.braid = entry["braid"].get<std::string>();
    rec.expected = RingElem(poly_from_json(entry.at("expected")));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace lg
