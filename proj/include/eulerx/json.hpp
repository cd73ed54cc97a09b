#pragma once

// JSON forms: Rat as "p/q" strings, Series/Poly as arrays of Rat strings
// (index = degree), identity reports as
//   {"identity", "anchor", "cases": [{"params", "status", "witness"}], "summary"}.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "eulerx/identities.hpp"
#include "eulerx/rat.hpp"
#include "eulerx/series.hpp"

namespace eulerx {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return r.to_string(); }

inline Json to_json(std::span<const Rat> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

inline Json to_json(const Series& s) { return to_json(s.coeffs()); }
inline Json to_json(const Poly& p) { return to_json(p.coeffs()); }

/// Parses a JSON array of Rat strings. Throws ParseError naming the first
/// offending index.
inline std::vector<Rat> rats_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of rational strings");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& item = j[i];
    try {
      if (item.is_string()) {
        out.push_back(Rat::parse(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        out.push_back(Rat(item.get<long>()));
      } else {
        throw ParseError("not a rational string");
      }
    } catch (const ParseError& e) {
      throw ParseError("index " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

inline Json to_json(const Witness& w) {
  return Json{{"kind", w.kind}, {"index", w.index}, {"lhs", w.lhs.to_string()}, {"rhs", w.rhs.to_string()}};
}

inline Json to_json(const IdentityCase& c) {
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = param_text(v);
  Json out;
  out["params"] = params;
  out["status"] = to_string(c.status);
  out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  return out;
}

inline Json to_json(const IdentityReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  IdentitySummary s = r.summary();
  Json out;
  out["identity"] = r.identity;
  out["anchor"] = r.anchor;
  out["cases"] = cases;
  out["summary"] = Json{{"verified", s.verified}, {"failed", s.failed}, {"skipped", s.skipped}};
  return out;
}

inline Json to_json(const std::vector<IdentityReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace eulerx
