#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "operads/endomorphism.hpp"
#include "operads/finite_operad.hpp"

namespace operads {

// An operad acting on a family: for every element of every stored
// component, a tabulated function from the input sets to the output
// set. The tables are required to assemble into an operad morphism into
// the endomorphism operad; verify_algebra checks exactly that, without
// materialising endomorphism components.
struct AlgebraStructure {
  FiniteOperad operad;
  FiniteFamily family;
  std::map<std::pair<Profile, std::string>, std::map<std::vector<std::string>, std::string>>
      action;

  const std::string& act(const Profile& p, const std::string& e,
                         const std::vector<std::string>& args) const {
    auto it = action.find({p, e});
    if (it == action.end())
      throw DomainError("no action table for '" + e + "' at " + format_profile(p));
    auto jt = it->second.find(args);
    if (jt == it->second.end())
      throw DomainError("action table for '" + e + "' at " + format_profile(p) +
                        " has no entry for the given arguments");
    return jt->second;
  }

  friend bool operator==(const AlgebraStructure&, const AlgebraStructure&) = default;
};

// Exhaustive check that the action tables define an algebra: the operad
// itself verifies, every table is total and lands in the right set,
// units act as identities, composition maps to substitution of
// functions, and the actions permute arguments.
inline VerifyReport verify_algebra(const AlgebraStructure& A) {
  VerifyReport rep;
  {
    VerifyReport op = verify_operad(A.operad);
    rep.checks += op.checks;
    for (std::string& v : op.violations) rep.violations.push_back("operad: " + std::move(v));
  }
  for (const Colour& c : A.operad.base.colours)
    if (!A.family.declares(c))
      rep.violations.push_back("family missing colour '" + c.name + "'");
  if (!rep.violations.empty()) return rep;

  const FiniteOperad& P = A.operad;

  // totality and typing
  for (const auto& [p, elems] : P.base.components) {
    std::vector<std::vector<std::string>> tuples = argument_tuples(A.family, p);
    const std::vector<std::string>& out = A.family.at(p.output);
    for (const std::string& e : elems) {
      auto it = A.action.find({p, e});
      if (it == A.action.end()) {
        rep.violations.push_back("no action table for '" + e + "' at " + format_profile(p));
        continue;
      }
      for (const auto& tuple : tuples) {
        ++rep.checks;
        auto jt = it->second.find(tuple);
        if (jt == it->second.end())
          rep.violations.push_back("action table for '" + e + "' at " + format_profile(p) +
                                   " is missing an entry");
        else if (!std::binary_search(out.begin(), out.end(), jt->second))
          rep.violations.push_back("action of '" + e + "' at " + format_profile(p) +
                                   " takes value '" + jt->second + "' outside the family");
      }
      if (it->second.size() != tuples.size())
        rep.violations.push_back("action table for '" + e + "' at " + format_profile(p) +
                                 " has stray entries");
    }
  }
  for (const auto& [key, table] : A.action)
    if (!P.base.contains(key.first, key.second))
      rep.violations.push_back("action table for unknown element '" + key.second + "' at " +
                               format_profile(key.first));
  if (!rep.violations.empty()) return rep;

  // units act as identities
  for (const Colour& c : P.base.colours) {
    Profile pc({c}, c);
    if (!P.base.stored(pc)) continue;
    const std::string& one = P.unit(c);
    for (const std::string& x : A.family.at(c)) {
      ++rep.checks;
      if (A.act(pc, one, {x}) != x)
        rep.violations.push_back("unit of colour '" + c.name + "' does not act as identity on '" +
                                 x + "'");
    }
  }

  // composition becomes substitution of functions
  for (const auto& [key, table] : P.circ) {
    const Profile& p = key.outer;
    const Profile& q = key.inner;
    int i = key.slot;
    Profile r = circ_profile(p, i, q);
    std::vector<std::vector<std::string>> r_tuples = argument_tuples(A.family, r);
    for (const auto& [xy, z] : table)
      for (const auto& tuple : r_tuples) {
        ++rep.checks;
        std::vector<std::string> inner_args(tuple.begin() + (i - 1),
                                            tuple.begin() + (i - 1 + q.arity()));
        std::vector<std::string> outer_args(tuple.begin(), tuple.begin() + (i - 1));
        outer_args.push_back(A.act(q, xy.second, inner_args));
        outer_args.insert(outer_args.end(), tuple.begin() + (i - 1 + q.arity()), tuple.end());
        if (A.act(r, z, tuple) != A.act(p, xy.first, outer_args))
          rep.violations.push_back("action does not respect composition at " + format_profile(p) +
                                   " o_" + std::to_string(i) + " on ('" + xy.first + "','" +
                                   xy.second + "')");
      }
  }

  // the symmetric action permutes arguments
  for (const auto& [p, elems] : P.base.components) {
    for (const Permutation& alpha : all_permutations(p.arity())) {
      if (alpha.is_identity()) continue;
      Profile q = permute_profile(p, alpha);
      std::vector<std::vector<std::string>> q_tuples = argument_tuples(A.family, q);
      for (const std::string& e : elems) {
        std::string ae = P.base.act(p, alpha, e);
        for (const auto& tuple : q_tuples) {
          ++rep.checks;
          if (A.act(q, ae, tuple) != A.act(p, e, permute_arguments(tuple, alpha)))
            rep.violations.push_back("action not equivariant at " + format_profile(p) +
                                     " under " + alpha.str() + " on '" + e + "'");
        }
      }
    }
  }
  return rep;
}

// A family of maps X(c) -> Y(c) between the carriers of two algebras
// over the same operad; valid when it commutes with every action table,
// i.e. the pair of structure maps lands in the endomorphism operad of
// the map.
inline VerifyReport verify_algebra_map(const AlgebraStructure& A, const AlgebraStructure& B,
                                       const std::map<Colour, std::map<std::string, std::string>>& f) {
  VerifyReport rep;
  if (A.operad != B.operad) {
    rep.violations.push_back("the two algebras live over different operads");
    return rep;
  }
  const FiniteOperad& P = A.operad;
  auto apply = [&](const Colour& c, const std::string& x) -> const std::string& {
    auto it = f.find(c);
    if (it == f.end()) throw DomainError("map missing colour '" + c.name + "'");
    auto jt = it->second.find(x);
    if (jt == it->second.end())
      throw DomainError("map at colour '" + c.name + "' undefined on '" + x + "'");
    return jt->second;
  };

  // totality and typing of the map itself
  for (const auto& [c, xs] : A.family.sets) {
    const std::vector<std::string>& ys = B.family.at(c);
    for (const std::string& x : xs) {
      ++rep.checks;
      try {
        if (!std::binary_search(ys.begin(), ys.end(), apply(c, x)))
          rep.violations.push_back("map image of '" + x + "' at colour '" + c.name +
                                   "' is outside the target family");
      } catch (const DomainError& err) {
        rep.violations.push_back(err.what());
      }
    }
  }
  if (!rep.violations.empty()) return rep;

  for (const auto& [p, elems] : P.base.components) {
    std::vector<std::vector<std::string>> tuples = argument_tuples(A.family, p);
    for (const std::string& e : elems)
      for (const auto& tuple : tuples) {
        ++rep.checks;
        std::vector<std::string> mapped;
        mapped.reserve(tuple.size());
        for (std::size_t j = 0; j < tuple.size(); ++j)
          mapped.push_back(apply(p.inputs[j], tuple[j]));
        if (apply(p.output, A.act(p, e, tuple)) != B.act(p, e, mapped))
          rep.violations.push_back("map does not commute with '" + e + "' at " +
                                   format_profile(p));
      }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Free algebras

// A canonical orbit representative: profile, operad element, argument
// tuple, minimised lexicographically over the symmetric action.
using OrbitRep = std::tuple<Profile, std::string, std::vector<std::string>>;

struct FreeAlgebra {
  AlgebraStructure algebra;
  // reps[c] lists, in order, the canonical representative of each
  // carrier element of colour c; carrier names are "t<k>" by index.
  std::map<Colour, std::vector<OrbitRep>> reps;

  std::string carrier_name(const Colour& c, const OrbitRep& canonical) const {
    const std::vector<OrbitRep>& list = reps.at(c);
    auto it = std::lower_bound(list.begin(), list.end(), canonical);
    if (it == list.end() || *it != canonical)
      throw DomainError("free_algebra: unknown orbit representative");
    return "t" + std::to_string(it - list.begin());
  }
};

namespace detail {

inline OrbitRep canonical_orbit_rep(const FiniteOperad& P, const Profile& p,
                                    const std::string& e, const std::vector<std::string>& args) {
  OrbitRep best{p, e, args};
  for (const Permutation& alpha : all_permutations(p.arity())) {
    if (alpha.is_identity()) continue;
    std::vector<std::string> permuted;
    permuted.reserve(args.size());
    for (int i = 1; i <= alpha.size(); ++i)
      permuted.push_back(args[static_cast<std::size_t>(alpha(i)) - 1]);
    OrbitRep cand{permute_profile(p, alpha), P.base.act(p, alpha, e), std::move(permuted)};
    if (cand < best) best = std::move(cand);
  }
  return best;
}

}  // namespace detail

// The free algebra on a family: the carrier at colour c is the set of
// orbits of (element, argument tuple) pairs over all stored profiles
// with output c, the action composes on the element coordinate. For a
// truncated operad the composite can fall outside the stored support;
// such action entries are omitted, so the result is itself truncated.
inline FreeAlgebra free_algebra(const FiniteOperad& P, const FiniteFamily& X) {
  for (const Colour& c : P.base.colours)
    if (!X.declares(c)) throw DomainError("free_algebra: family missing colour '" + c.name + "'");

  FreeAlgebra F;
  F.algebra.operad = P;
  for (const Colour& c : P.base.colours) F.reps[c];

  // collect canonical orbit representatives
  for (const auto& [p, elems] : P.base.components) {
    std::vector<std::vector<std::string>> tuples = argument_tuples(X, p);
    std::vector<OrbitRep>& list = F.reps[p.output];
    for (const std::string& e : elems)
      for (const auto& tuple : tuples) list.push_back(detail::canonical_orbit_rep(P, p, e, tuple));
  }
  for (auto& [c, list] : F.reps) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::vector<std::string> names;
    for (std::size_t k = 0; k < list.size(); ++k) names.push_back("t" + std::to_string(k));
    F.algebra.family.add(c, std::move(names));
  }

  // action by composition on the first coordinate
  for (const auto& [q, elems] : P.base.components) {
    std::vector<std::vector<std::string>> carrier_tuples =
        argument_tuples(F.algebra.family, q);
    for (const std::string& e : elems) {
      std::map<std::vector<std::string>, std::string> table;
      for (const auto& tuple : carrier_tuples) {
        OperadElement acc{q, e};
        std::vector<std::string> args;
        bool in_support = true;
        // plug each orbit's element right to left, concatenating tuples
        std::vector<OrbitRep> parts;
        for (std::size_t j = 0; j < tuple.size(); ++j) {
          std::size_t idx = static_cast<std::size_t>(
              std::stoll(tuple[j].substr(1)));
          parts.push_back(F.reps.at(q.inputs[j])[idx]);
        }
        for (std::size_t j = tuple.size(); j-- > 0;) {
          const auto& [pp, ee, xs] = parts[j];
          if (!P.circ_stored(acc.profile, static_cast<int>(j) + 1, pp)) {
            in_support = false;
            break;
          }
          std::string name = P.circ_value(acc.profile, static_cast<int>(j) + 1, pp, acc.name, ee);
          acc = OperadElement{circ_profile(acc.profile, static_cast<int>(j) + 1, pp), name};
        }
        if (!in_support) continue;
        for (const OrbitRep& part : parts)
          for (const std::string& x : std::get<2>(part)) args.push_back(x);
        OrbitRep canonical = detail::canonical_orbit_rep(P, acc.profile, acc.name, args);
        table[tuple] = F.carrier_name(q.output, canonical);
      }
      F.algebra.action[{q, e}] = std::move(table);
    }
  }
  return F;
}

// The inclusion of generators: x in X(c) becomes the orbit of the unit
// paired with (x).
inline std::string free_algebra_generator(const FreeAlgebra& F, const Colour& c,
                                          const std::string& x) {
  const FiniteOperad& P = F.algebra.operad;
  Profile pc({c}, c);
  OrbitRep rep{pc, P.unit(c), {x}};
  return F.carrier_name(c, rep);
}

}  // namespace operads
