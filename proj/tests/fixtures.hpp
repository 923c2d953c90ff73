#pragma once

// Shared fixtures: small monoids and a finite restriction of the tree
// operad packaged as a table-level operad, used to cross-check the
// generic verifier against the genuine tree constructions.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "operads/finite_operad.hpp"
#include "operads/sc.hpp"

namespace fixtures {

using operads::CircKey;
using operads::Colour;
using operads::FiniteOperad;
using operads::Monoid;
using operads::Permutation;
using operads::Profile;
using operads::SCElement;

inline Monoid xor_monoid() {
  Monoid R;
  R.carrier = {"0", "1"};
  R.unit = "0";
  R.mult[{"0", "0"}] = "0";
  R.mult[{"0", "1"}] = "1";
  R.mult[{"1", "0"}] = "1";
  R.mult[{"1", "1"}] = "0";
  return R;
}

inline Monoid cyclic_monoid(int k) {
  Monoid R;
  for (int i = 0; i < k; ++i) R.carrier.push_back(std::to_string(i));
  R.unit = "0";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      R.mult[{std::to_string(i), std::to_string(j)}] = std::to_string((i + j) % k);
  return R;
}

// {e,a,b} with x*y = y for y != e: associative, noncommutative, unital.
inline Monoid right_zero_unital() {
  Monoid R;
  R.carrier = {"a", "b", "e"};
  R.unit = "e";
  for (const std::string& x : R.carrier)
    for (const std::string& y : R.carrier) R.mult[{x, y}] = (y == "e") ? x : y;
  return R;
}

// Encodes a profile over single-letter colours as a colour token:
// (a,b;c) -> "ab_c", (;c) -> "_c".
inline Colour encode_profile(const Profile& p) {
  std::string name;
  for (const Colour& c : p.inputs) name += c.name;
  name += '_';
  name += p.output.name;
  return Colour(name);
}

// The restriction of the tree operad over `colours` to components whose
// vertex profiles and boundary all lie in `base_profiles`, with at most
// `max_vertices` vertices. Elements are named by their canonical tree
// strings; the units, actions and composition tables are produced by
// the tree machinery itself.
inline FiniteOperad sc_restriction(const std::set<Colour>& colours,
                                   const std::vector<Profile>& base_profiles, int max_vertices) {
  FiniteOperad P;
  for (const Profile& p : base_profiles) P.base.colours.insert(encode_profile(p));

  // All D-profiles: tuples of base profiles (the vertex profiles) and a
  // base-profile output (the boundary).
  struct DProfile {
    std::vector<Profile> tuple;
    Profile boundary;
  };
  std::vector<DProfile> dprofiles;
  std::vector<std::vector<Profile>> tuples{{}};
  for (int n = 0; n <= max_vertices; ++n) {
    for (const std::vector<Profile>& t : tuples)
      for (const Profile& b : base_profiles) dprofiles.push_back({t, b});
    std::vector<std::vector<Profile>> next;
    for (const std::vector<Profile>& t : tuples)
      for (const Profile& p : base_profiles) {
        std::vector<Profile> u = t;
        u.push_back(p);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }

  auto encode_dprofile = [](const DProfile& d) {
    Profile out;
    for (const Profile& p : d.tuple) out.inputs.push_back(encode_profile(p));
    out.output = encode_profile(d.boundary);
    return out;
  };

  std::map<Profile, std::vector<SCElement>> elements;  // keyed by encoded D-profile
  for (const DProfile& d : dprofiles) {
    std::vector<SCElement> comp = operads::sc_component(colours, d.tuple, d.boundary);
    Profile key = encode_dprofile(d);
    std::vector<std::string> names;
    for (const SCElement& x : comp) names.push_back(x.str());
    P.base.add_component(key, names);
    elements[key] = std::move(comp);

    // symmetric action by vertex renumbering
    int n = static_cast<int>(d.tuple.size());
    for (const Permutation& alpha : operads::all_permutations(n)) {
      if (alpha.is_identity()) continue;
      std::map<std::string, std::string> table;
      for (const SCElement& x : elements[key])
        table[x.str()] = operads::sigma_action(x, alpha).str();
      P.base.actions[{key, alpha}] = std::move(table);
    }
  }

  // units: corollas
  for (const Profile& p : base_profiles) {
    P.units[encode_profile(p)] = operads::sc_unit(p, colours).str();
  }

  // composition tables by vertex substitution, where the result
  // component is stored
  for (const DProfile& outer : dprofiles) {
    int n = static_cast<int>(outer.tuple.size());
    for (int i = 1; i <= n; ++i) {
      for (const DProfile& inner : dprofiles) {
        if (inner.boundary != outer.tuple[static_cast<std::size_t>(i) - 1]) continue;
        if (n + static_cast<int>(inner.tuple.size()) - 1 > max_vertices) continue;
        Profile okey = encode_dprofile(outer);
        Profile ikey = encode_dprofile(inner);
        std::map<std::pair<std::string, std::string>, std::string> table;
        for (const SCElement& x : elements[okey])
          for (const SCElement& y : elements[ikey])
            table[{x.str(), y.str()}] = operads::sc_circ(x, i, y).str();
        P.circ[CircKey{okey, i, ikey}] = std::move(table);
      }
    }
  }
  return P;
}

}  // namespace fixtures
