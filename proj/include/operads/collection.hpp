#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "operads/permutation.hpp"
#include "operads/types.hpp"

namespace operads {

// A finite-set coloured collection: a finite family of element sets
// indexed by profiles, with a right symmetric action. Components are
// sorted lists without duplicates. A profile absent from the map is an
// empty component; the set of *stored* profiles is the support that
// verifiers quantify over.
//
// The identity permutation always acts as the identity and need not be
// stored; every other action map on a stored profile must be stored.
struct Collection {
  std::set<Colour> colours;
  std::map<Profile, std::vector<std::string>> components;
  std::map<std::pair<Profile, Permutation>, std::map<std::string, std::string>> actions;

  void add_component(const Profile& p, std::vector<std::string> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    components[p] = std::move(elems);
  }

  const std::vector<std::string>& elements(const Profile& p) const {
    static const std::vector<std::string> empty;
    auto it = components.find(p);
    return it == components.end() ? empty : it->second;
  }

  bool stored(const Profile& p) const { return components.count(p) > 0; }

  bool contains(const Profile& p, const std::string& e) const {
    const std::vector<std::string>& es = elements(p);
    return std::binary_search(es.begin(), es.end(), e);
  }

  // The right action: alpha* e, landing in the component at
  // permute_profile(p, alpha).
  std::string act(const Profile& p, const Permutation& alpha, const std::string& e) const {
    if (alpha.size() != p.arity()) throw DomainError("act: permutation arity mismatch");
    if (alpha.is_identity()) return e;
    auto it = actions.find({p, alpha});
    if (it == actions.end())
      throw DomainError("act: no action stored for " + format_profile(p) + " under " +
                        alpha.str());
    auto jt = it->second.find(e);
    if (jt == it->second.end())
      throw DomainError("act: no image for element '" + e + "' at " + format_profile(p));
    return jt->second;
  }

  friend bool operator==(const Collection&, const Collection&) = default;
};

// Exhaustive check of the collection laws on the stored support. The
// report lists one line per violation; empty means valid.
inline std::vector<std::string> validate_collection(const Collection& K) {
  std::vector<std::string> report;
  for (const Colour& c : K.colours)
    if (!is_colour_token(c.name)) report.push_back("malformed colour token '" + c.name + "'");

  auto colour_known = [&](const Colour& c) { return K.colours.count(c) > 0; };

  for (const auto& [p, elems] : K.components) {
    if (!colour_known(p.output))
      report.push_back("profile " + format_profile(p) + " uses undeclared output colour");
    for (const Colour& c : p.inputs)
      if (!colour_known(c)) {
        report.push_back("profile " + format_profile(p) + " uses undeclared input colour");
        break;
      }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].empty())
        report.push_back("empty element name at " + format_profile(p));
      if (i > 0 && elems[i] <= elems[i - 1])
        report.push_back("elements not sorted/unique at " + format_profile(p));
    }
  }

  // Stored action maps must sit on stored profiles and land where the
  // permuted profile says.
  for (const auto& [key, table] : K.actions) {
    const auto& [p, alpha] = key;
    if (alpha.size() != p.arity()) {
      report.push_back("action arity mismatch at " + format_profile(p));
      continue;
    }
    if (!K.stored(p)) {
      report.push_back("action stored for unknown profile " + format_profile(p));
      continue;
    }
    Profile target = permute_profile(p, alpha);
    if (!K.stored(target)) {
      report.push_back("action at " + format_profile(p) + " lands outside the support (" +
                       format_profile(target) + " not stored)");
      continue;
    }
    if (alpha.is_identity()) {
      for (const auto& [e, img] : table)
        if (e != img)
          report.push_back("identity permutation must act trivially at " + format_profile(p));
      continue;
    }
    for (const std::string& e : K.elements(p)) {
      auto it = table.find(e);
      if (it == table.end())
        report.push_back("action at " + format_profile(p) + " under " + alpha.str() +
                         " missing element '" + e + "'");
      else if (!K.contains(target, it->second))
        report.push_back("action image '" + it->second + "' not in " + format_profile(target));
    }
    for (const auto& [e, img] : table)
      if (!K.contains(p, e))
        report.push_back("action at " + format_profile(p) + " defined on stray element '" + e +
                         "'");
  }

  if (!report.empty()) return report;  // structural problems make law checks unreliable

  // Every non-identity action on a stored profile must be present.
  for (const auto& [p, elems] : K.components) {
    int n = p.arity();
    if (n < 2 || elems.empty()) continue;
    for (const Permutation& alpha : all_permutations(n)) {
      if (alpha.is_identity()) continue;
      if (!K.actions.count({p, alpha}))
        report.push_back("missing action at " + format_profile(p) + " under " + alpha.str());
    }
  }
  if (!report.empty()) return report;

  // The right-action law (alpha beta)* = beta* after alpha*, exhaustively.
  for (const auto& [p, elems] : K.components) {
    int n = p.arity();
    if (n < 2 || elems.empty()) continue;
    std::vector<Permutation> perms = all_permutations(n);
    for (const Permutation& alpha : perms) {
      Profile q = permute_profile(p, alpha);
      for (const Permutation& beta : perms) {
        for (const std::string& e : elems) {
          std::string two_step = K.act(q, beta, K.act(p, alpha, e));
          std::string one_step = K.act(p, alpha * beta, e);
          if (two_step != one_step) {
            report.push_back("action law fails at " + format_profile(p) + ": (" + alpha.str() +
                             " then " + beta.str() + ") on '" + e + "' gives '" + two_step +
                             "' but " + (alpha * beta).str() + " gives '" + one_step + "'");
          }
        }
      }
    }
  }
  return report;
}

// A per-profile family of maps between two collections over the same
// colours, required to commute with the symmetric actions.
struct CollectionMorphism {
  std::map<Profile, std::map<std::string, std::string>> maps;

  const std::string& operator()(const Profile& p, const std::string& e) const {
    auto it = maps.find(p);
    if (it == maps.end())
      throw DomainError("morphism undefined at " + format_profile(p));
    auto jt = it->second.find(e);
    if (jt == it->second.end())
      throw DomainError("morphism undefined on '" + e + "' at " + format_profile(p));
    return jt->second;
  }
};

inline std::vector<std::string> validate_collection_morphism(const Collection& K,
                                                             const Collection& L,
                                                             const CollectionMorphism& phi) {
  std::vector<std::string> report;
  for (const auto& [p, elems] : K.components) {
    if (elems.empty()) continue;
    if (!L.stored(p)) {
      report.push_back("target has no component at " + format_profile(p));
      continue;
    }
    for (const std::string& e : elems) {
      auto it = phi.maps.find(p);
      if (it == phi.maps.end() || !it->second.count(e)) {
        report.push_back("morphism missing '" + e + "' at " + format_profile(p));
        continue;
      }
      if (!L.contains(p, it->second.at(e)))
        report.push_back("morphism image '" + it->second.at(e) + "' not in target at " +
                         format_profile(p));
    }
  }
  if (!report.empty()) return report;
  for (const auto& [p, elems] : K.components) {
    for (const Permutation& alpha : all_permutations(p.arity())) {
      if (alpha.is_identity()) continue;
      Profile q = permute_profile(p, alpha);
      for (const std::string& e : elems) {
        try {
          std::string lhs = phi(q, K.act(p, alpha, e));
          std::string rhs = L.act(p, alpha, phi(p, e));
          if (lhs != rhs)
            report.push_back("morphism not equivariant at " + format_profile(p) + " under " +
                             alpha.str() + " on '" + e + "'");
        } catch (const DomainError& err) {
          report.push_back(std::string("equivariance check failed: ") + err.what());
        }
      }
    }
  }
  return report;
}

}  // namespace operads
