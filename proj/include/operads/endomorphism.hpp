#pragma once

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "operads/finite_operad.hpp"

namespace operads {

// A colour-indexed family of finite sets, the object an operad acts on.
// Every declared colour is present, possibly with an empty set.
struct FiniteFamily {
  std::map<Colour, std::vector<std::string>> sets;

  void add(const Colour& c, std::vector<std::string> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    sets[c] = std::move(elems);
  }

  const std::vector<std::string>& at(const Colour& c) const {
    auto it = sets.find(c);
    if (it == sets.end()) throw DomainError("family has no colour '" + c.name + "'");
    return it->second;
  }

  bool declares(const Colour& c) const { return sets.count(c) > 0; }

  std::set<Colour> colours() const {
    std::set<Colour> out;
    for (const auto& [c, _] : sets) out.insert(c);
    return out;
  }

  friend bool operator==(const FiniteFamily&, const FiniteFamily&) = default;
};

// All argument tuples of a profile, ordered lexicographically by the
// family's stored element order.
inline std::vector<std::vector<std::string>> argument_tuples(const FiniteFamily& X,
                                                             const Profile& p) {
  std::vector<std::vector<std::string>> out{{}};
  for (const Colour& c : p.inputs) {
    const std::vector<std::string>& xs = X.at(c);
    std::vector<std::vector<std::string>> next;
    next.reserve(out.size() * xs.size());
    for (const std::vector<std::string>& t : out)
      for (const std::string& x : xs) {
        std::vector<std::string> u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

// The default cap on materialised endomorphism components; the
// OPERAD_FORGE_LIMIT environment variable overrides it.
inline std::size_t end_limit() {
  static const std::size_t limit = [] {
    if (const char* s = std::getenv("OPERAD_FORGE_LIMIT")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1000000};
  }();
  return limit;
}

// One multivariable function between the family's sets, tabulated on
// the full argument grid.
struct EndFunction {
  std::string name;
  std::map<std::vector<std::string>, std::string> table;

  friend bool operator==(const EndFunction&, const EndFunction&) = default;
};

// Every function X(c_1) x ... x X(c_n) -> X(c), canonically ordered and
// named f<k> with k zero-padded. The empty product has exactly one
// point, so arity-0 components are the points of X(c); component sizes
// are |X(c)|^(prod |X(c_i)|) and the limit guards the blow-up.
inline std::vector<EndFunction> end_component(const FiniteFamily& X, const Profile& p,
                                              std::size_t limit = end_limit()) {
  std::vector<std::vector<std::string>> domain = argument_tuples(X, p);
  const std::vector<std::string>& codomain = X.at(p.output);

  std::size_t count = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (codomain.empty()) {
      count = 0;
      break;
    }
    if (count > limit / codomain.size()) throw DomainError("end_component: bound exceeded");
    count *= codomain.size();
  }

  std::size_t width = std::to_string(count == 0 ? 0 : count - 1).size();
  auto pad = [&](std::size_t k) {
    std::string digits = std::to_string(k);
    return "f" + std::string(width - digits.size(), '0') + digits;
  };

  std::vector<EndFunction> out;
  if (count == 0) return out;  // nonempty domain, empty codomain
  std::vector<std::size_t> odometer(domain.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    EndFunction f;
    f.name = pad(k);
    for (std::size_t d = 0; d < domain.size(); ++d) f.table[domain[d]] = codomain[odometer[d]];
    out.push_back(std::move(f));
    for (std::size_t d = domain.size(); d-- > 0;) {
      if (++odometer[d] < codomain.size()) break;
      odometer[d] = 0;
    }
  }
  return out;
}

// The endomorphism operad of a family, materialised as tables up to an
// arity bound: composition is ordinary composition of functions and the
// action permutes arguments.
inline FiniteOperad end_operad(const FiniteFamily& X, int max_arity,
                               std::size_t limit = end_limit()) {
  if (max_arity < 1) throw DomainError("end_operad: max_arity must be >= 1");
  std::set<Colour> colours = X.colours();
  if (colours.empty()) throw DomainError("end_operad: empty family");

  FiniteOperad E;
  E.base.colours = colours;

  std::vector<Profile> profiles;
  std::vector<std::vector<Colour>> tuples{{}};
  for (int n = 0; n <= max_arity; ++n) {
    for (const std::vector<Colour>& t : tuples)
      for (const Colour& out : colours) profiles.push_back(Profile(t, out));
    std::vector<std::vector<Colour>> next;
    for (const std::vector<Colour>& t : tuples)
      for (const Colour& c : colours) {
        std::vector<Colour> u = t;
        u.push_back(c);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }

  // materialise components and a table->name index per profile
  std::map<Profile, std::vector<EndFunction>> funcs;
  std::map<Profile, std::map<std::map<std::vector<std::string>, std::string>, std::string>> index;
  for (const Profile& p : profiles) {
    funcs[p] = end_component(X, p, limit);
    std::vector<std::string> names;
    for (const EndFunction& f : funcs[p]) {
      names.push_back(f.name);
      index[p][f.table] = f.name;
    }
    E.base.add_component(p, names);
  }

  for (const Profile& p : profiles) {
    // actions: (alpha* f)(y_1..y_n) = f(y_{alpha^{-1}(1)},...)
    for (const Permutation& alpha : all_permutations(p.arity())) {
      if (alpha.is_identity()) continue;
      Profile q = permute_profile(p, alpha);
      std::map<std::string, std::string> table;
      for (const EndFunction& f : funcs[p]) {
        std::map<std::vector<std::string>, std::string> permuted;
        for (const auto& tuple : argument_tuples(X, q))
          permuted[tuple] = f.table.at(permute_arguments(tuple, alpha));
        table[f.name] = index[q].at(permuted);
      }
      E.base.actions[{p, alpha}] = std::move(table);
    }
  }

  // units: identity functions
  for (const Colour& c : colours) {
    Profile pc({c}, c);
    std::map<std::vector<std::string>, std::string> id_table;
    for (const std::string& x : X.at(c)) id_table[{x}] = x;
    auto it = index[pc].find(id_table);
    if (it == index[pc].end()) throw DomainError("end_operad: identity function missing");
    E.units[c] = it->second;
  }

  // composition: substitute g's value into slot i of f's arguments
  for (const Profile& p : profiles) {
    for (int i = 1; i <= p.arity(); ++i)
      for (const Profile& q : profiles) {
        if (q.output != p.inputs[static_cast<std::size_t>(i) - 1]) continue;
        if (p.arity() + q.arity() - 1 > max_arity) continue;
        Profile r = circ_profile(p, i, q);
        std::map<std::pair<std::string, std::string>, std::string> table;
        std::vector<std::vector<std::string>> r_tuples = argument_tuples(X, r);
        for (const EndFunction& f : funcs[p])
          for (const EndFunction& g : funcs[q]) {
            std::map<std::vector<std::string>, std::string> composed;
            for (const auto& tuple : r_tuples) {
              std::vector<std::string> gargs(tuple.begin() + (i - 1),
                                             tuple.begin() + (i - 1 + q.arity()));
              std::vector<std::string> fargs(tuple.begin(), tuple.begin() + (i - 1));
              fargs.push_back(g.table.at(gargs));
              fargs.insert(fargs.end(), tuple.begin() + (i - 1 + q.arity()), tuple.end());
              composed[tuple] = f.table.at(fargs);
            }
            table[{f.name, g.name}] = index[r].at(composed);
          }
        E.circ[CircKey{p, i, q}] = std::move(table);
      }
  }
  return E;
}

}  // namespace operads
