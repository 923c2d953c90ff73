#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "operads/algebra.hpp"
#include "operads/collection.hpp"
#include "operads/finite_operad.hpp"

namespace operads {

using nlohmann::json;

// Element names crossing the file boundary must be non-empty and
// comma-free: composition and action tables key pairs and tuples as
// comma-joined strings.
inline void check_element_name(const std::string& e, const std::string& where) {
  if (e.empty()) throw ParseError("empty element name in " + where);
  if (e.find(',') != std::string::npos)
    throw ParseError("element name '" + e + "' in " + where + " contains a comma");
}

inline json profile_to_json(const Profile& p) {
  json j;
  j["inputs"] = json::array();
  for (const Colour& c : p.inputs) j["inputs"].push_back(c.name);
  j["output"] = p.output.name;
  return j;
}

inline Profile profile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("inputs") || !j.contains("output"))
    throw ParseError("profile must be an object with 'inputs' and 'output'");
  Profile p;
  for (const json& c : j.at("inputs")) p.inputs.emplace_back(c.get<std::string>());
  p.output = Colour(j.at("output").get<std::string>());
  return p;
}

inline std::vector<std::string> split_key(const std::string& key, std::size_t expect) {
  std::vector<std::string> parts;
  if (!key.empty() || expect == 1) {
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = key.find(',', start);
      if (comma == std::string::npos) {
        parts.push_back(key.substr(start));
        break;
      }
      parts.push_back(key.substr(start, comma - start));
      start = comma + 1;
    }
  }
  if (parts.size() != expect)
    throw ParseError("table key '" + key + "' has " + std::to_string(parts.size()) +
                     " entries, expected " + std::to_string(expect));
  return parts;
}

inline std::string join_key(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Collections

inline json collection_to_json(const Collection& K) {
  json j;
  j["colours"] = json::array();
  for (const Colour& c : K.colours) j["colours"].push_back(c.name);
  j["components"] = json::array();
  for (const auto& [p, elems] : K.components) {
    for (const std::string& e : elems) check_element_name(e, format_profile(p));
    json comp;
    comp["profile"] = profile_to_json(p);
    comp["elements"] = elems;
    j["components"].push_back(std::move(comp));
  }
  j["actions"] = json::array();
  for (const auto& [key, table] : K.actions) {
    json act;
    act["profile"] = profile_to_json(key.first);
    act["perm"] = key.second.images();
    act["map"] = json::object();
    for (const auto& [e, img] : table) act["map"][e] = img;
    j["actions"].push_back(std::move(act));
  }
  return j;
}

inline Collection collection_from_json(const json& j) {
  Collection K;
  if (!j.contains("colours")) throw ParseError("collection needs a 'colours' array");
  for (const json& c : j.at("colours")) {
    std::string name = c.get<std::string>();
    if (!is_colour_token(name)) throw ParseError("bad colour token '" + name + "'");
    K.colours.insert(Colour(name));
  }
  if (j.contains("components"))
    for (const json& comp : j.at("components")) {
      Profile p = profile_from_json(comp.at("profile"));
      std::vector<std::string> elems;
      for (const json& e : comp.at("elements")) {
        elems.push_back(e.get<std::string>());
        check_element_name(elems.back(), format_profile(p));
      }
      K.add_component(p, std::move(elems));
    }
  if (j.contains("actions"))
    for (const json& act : j.at("actions")) {
      Profile p = profile_from_json(act.at("profile"));
      std::vector<int> images;
      for (const json& v : act.at("perm")) images.push_back(v.get<int>());
      Permutation alpha(std::move(images));
      std::map<std::string, std::string> table;
      for (const auto& [e, img] : act.at("map").items()) table[e] = img.get<std::string>();
      K.actions[{p, alpha}] = std::move(table);
    }
  return K;
}

// ---------------------------------------------------------------------------
// Operads

inline json operad_to_json(const FiniteOperad& P) {
  json j = collection_to_json(P.base);
  j["units"] = json::object();
  for (const auto& [c, u] : P.units) j["units"][c.name] = u;
  j["circ"] = json::array();
  for (const auto& [key, table] : P.circ) {
    json t;
    t["outer"] = profile_to_json(key.outer);
    t["i"] = key.slot;
    t["inner"] = profile_to_json(key.inner);
    t["map"] = json::object();
    for (const auto& [xy, z] : table) t["map"][join_key({xy.first, xy.second})] = z;
    j["circ"].push_back(std::move(t));
  }
  return j;
}

inline FiniteOperad operad_from_json(const json& j) {
  FiniteOperad P;
  P.base = collection_from_json(j);
  if (j.contains("units"))
    for (const auto& [c, u] : j.at("units").items()) P.units[Colour(c)] = u.get<std::string>();
  if (j.contains("circ"))
    for (const json& t : j.at("circ")) {
      CircKey key{profile_from_json(t.at("outer")), t.at("i").get<int>(),
                  profile_from_json(t.at("inner"))};
      std::map<std::pair<std::string, std::string>, std::string> table;
      for (const auto& [k, z] : t.at("map").items()) {
        std::vector<std::string> xy = split_key(k, 2);
        table[{xy[0], xy[1]}] = z.get<std::string>();
      }
      P.circ[key] = std::move(table);
    }
  return P;
}

// ---------------------------------------------------------------------------
// Monoids

inline json monoid_to_json(const Monoid& R) {
  json j;
  j["carrier"] = R.carrier;
  j["unit"] = R.unit;
  j["mult"] = json::object();
  for (const auto& [xy, z] : R.mult) j["mult"][join_key({xy.first, xy.second})] = z;
  return j;
}

inline Monoid monoid_from_json(const json& j) {
  Monoid R;
  if (!j.contains("carrier") || !j.contains("unit") || !j.contains("mult"))
    throw ParseError("monoid needs 'carrier', 'unit' and 'mult'");
  for (const json& e : j.at("carrier")) {
    R.carrier.push_back(e.get<std::string>());
    check_element_name(R.carrier.back(), "carrier");
  }
  std::sort(R.carrier.begin(), R.carrier.end());
  R.unit = j.at("unit").get<std::string>();
  for (const auto& [k, z] : j.at("mult").items()) {
    std::vector<std::string> xy = split_key(k, 2);
    R.mult[{xy[0], xy[1]}] = z.get<std::string>();
  }
  return R;
}

// ---------------------------------------------------------------------------
// Algebras

inline json algebra_to_json(const AlgebraStructure& A) {
  json j;
  j["operad"] = operad_to_json(A.operad);
  j["family"] = json::object();
  for (const auto& [c, elems] : A.family.sets) {
    for (const std::string& e : elems) check_element_name(e, "family at " + c.name);
    j["family"][c.name] = elems;
  }
  j["action"] = json::array();
  for (const auto& [key, table] : A.action) {
    json t;
    t["profile"] = profile_to_json(key.first);
    t["element"] = key.second;
    t["table"] = json::object();
    for (const auto& [args, y] : table) t["table"][join_key(args)] = y;
    j["action"].push_back(std::move(t));
  }
  return j;
}

// The operad reference may be inline or a string; strings are resolved
// through the supplied loader (the CLI maps them to file paths).
inline AlgebraStructure algebra_from_json(
    const json& j, const std::function<json(const std::string&)>& resolve = {}) {
  AlgebraStructure A;
  if (!j.contains("operad")) throw ParseError("algebra needs an 'operad' reference");
  if (j.at("operad").is_string()) {
    if (!resolve) throw ParseError("operad reference is a path but no resolver is available");
    A.operad = operad_from_json(resolve(j.at("operad").get<std::string>()));
  } else {
    A.operad = operad_from_json(j.at("operad"));
  }
  if (!j.contains("family")) throw ParseError("algebra needs a 'family' object");
  for (const auto& [c, elems] : j.at("family").items()) {
    std::vector<std::string> xs;
    for (const json& e : elems) {
      xs.push_back(e.get<std::string>());
      check_element_name(xs.back(), "family at " + c);
    }
    A.family.add(Colour(c), std::move(xs));
  }
  if (j.contains("action"))
    for (const json& t : j.at("action")) {
      Profile p = profile_from_json(t.at("profile"));
      std::string e = t.at("element").get<std::string>();
      std::map<std::vector<std::string>, std::string> table;
      for (const auto& [k, y] : t.at("table").items())
        table[split_key(k, static_cast<std::size_t>(p.arity()))] = y.get<std::string>();
      A.action[{p, e}] = std::move(table);
    }
  return A;
}

// Per-colour maps, the payload of an algebra-map check:
// { "maps": { "c": { "x": "y" } } }
inline std::map<Colour, std::map<std::string, std::string>> colour_maps_from_json(const json& j) {
  std::map<Colour, std::map<std::string, std::string>> out;
  if (!j.contains("maps")) throw ParseError("map file needs a 'maps' object");
  for (const auto& [c, table] : j.at("maps").items())
    for (const auto& [x, y] : table.items()) out[Colour(c)][x] = y.get<std::string>();
  return out;
}

}  // namespace operads
