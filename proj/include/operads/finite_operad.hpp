#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "operads/collection.hpp"
#include "operads/permutation.hpp"
#include "operads/types.hpp"

namespace operads {

// Identifies one partial-composition table: plugging an inner-profile
// element into slot `slot` of an outer-profile element.
struct CircKey {
  Profile outer;
  int slot = 0;
  Profile inner;

  auto operator<=>(const CircKey&) const = default;
};

// The profile of x o_i y.
inline Profile circ_profile(const Profile& outer, int i, const Profile& inner) {
  if (i < 1 || i > outer.arity()) throw DomainError("circ_profile: slot out of range");
  if (inner.output != outer.inputs[static_cast<std::size_t>(i) - 1])
    throw DomainError("circ_profile: inner output " + inner.output.name +
                      " does not match slot colour");
  Profile r;
  r.output = outer.output;
  r.inputs.reserve(outer.inputs.size() + inner.inputs.size() - 1);
  for (int s = 1; s < i; ++s) r.inputs.push_back(outer.inputs[static_cast<std::size_t>(s) - 1]);
  for (const Colour& c : inner.inputs) r.inputs.push_back(c);
  for (int s = i + 1; s <= outer.arity(); ++s)
    r.inputs.push_back(outer.inputs[static_cast<std::size_t>(s) - 1]);
  return r;
}

// A coloured operad in finite sets, given by explicit tables: a
// collection, a unit element per colour, and partial-composition maps.
// Only profiles in the stored support carry data; a composition table
// is stored when its outer, inner and result profiles all are.
struct FiniteOperad {
  Collection base;
  std::map<Colour, std::string> units;
  std::map<CircKey, std::map<std::pair<std::string, std::string>, std::string>> circ;

  bool circ_stored(const Profile& p, int i, const Profile& q) const {
    return circ.count(CircKey{p, i, q}) > 0;
  }

  std::string circ_value(const Profile& p, int i, const Profile& q, const std::string& x,
                         const std::string& y) const {
    auto it = circ.find(CircKey{p, i, q});
    if (it == circ.end())
      throw DomainError("no composition table for " + format_profile(p) + " o_" +
                        std::to_string(i) + " " + format_profile(q));
    auto jt = it->second.find({x, y});
    if (jt == it->second.end())
      throw DomainError("composition table has no entry for ('" + x + "','" + y + "') at " +
                        format_profile(p) + " o_" + std::to_string(i) + " " + format_profile(q));
    return jt->second;
  }

  const std::string& unit(const Colour& c) const {
    auto it = units.find(c);
    if (it == units.end()) throw DomainError("no unit for colour '" + c.name + "'");
    return it->second;
  }

  friend bool operator==(const FiniteOperad&, const FiniteOperad&) = default;
};

// An element together with the component it lives in; table-level
// elements are bare names, so composite operations pass these around.
struct OperadElement {
  Profile profile;
  std::string name;

  friend bool operator==(const OperadElement&, const OperadElement&) = default;
  auto operator<=>(const OperadElement&) const = default;
};

// The full composition product, computed by plugging arguments right to
// left (so earlier slot indices stay put). Associativity of the operad
// makes the order irrelevant; a property test checks this concretely.
inline OperadElement gamma(const FiniteOperad& P, const OperadElement& x,
                           const std::vector<OperadElement>& args) {
  if (static_cast<int>(args.size()) != x.profile.arity())
    throw DomainError("gamma: expected " + std::to_string(x.profile.arity()) +
                      " arguments, got " + std::to_string(args.size()));
  OperadElement acc = x;
  for (int i = static_cast<int>(args.size()); i >= 1; --i) {
    const OperadElement& y = args[static_cast<std::size_t>(i) - 1];
    std::string name = P.circ_value(acc.profile, i, y.profile, acc.name, y.name);
    acc = OperadElement{circ_profile(acc.profile, i, y.profile), name};
  }
  return acc;
}

struct VerifyReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::size_t checks = 0;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// Rewrites a composite from planar-input order to numbered-input order:
// `planar` lists the input numbers left to right, and the permutation
// sending each number to its planar position acts on the element.
inline OperadElement tau_twist(const FiniteOperad& P, const std::vector<std::int64_t>& planar,
                               const OperadElement& composite) {
  std::vector<int> images(planar.size());
  for (std::size_t pos = 0; pos < planar.size(); ++pos)
    images[static_cast<std::size_t>(planar[pos]) - 1] = static_cast<int>(pos) + 1;
  Permutation pi(std::move(images));
  if (pi.is_identity()) return composite;
  return OperadElement{permute_profile(composite.profile, pi),
                       P.base.act(composite.profile, pi, composite.name)};
}

}  // namespace detail

namespace detail {

inline void verify_units(const FiniteOperad& P, VerifyReport& rep) {
  for (const Colour& c : P.base.colours) {
    Profile pc({c}, c);
    auto it = P.units.find(c);
    if (it == P.units.end()) {
      rep.violations.push_back("no unit for colour '" + c.name + "'");
      continue;
    }
    if (!P.base.contains(pc, it->second))
      rep.violations.push_back("unit '" + it->second + "' not in component " +
                               format_profile(pc));
    ++rep.checks;
  }
  for (const auto& [c, u] : P.units)
    if (!P.base.colours.count(c))
      rep.violations.push_back("unit stored for undeclared colour '" + c.name + "'");
}

inline void verify_circ_tables(const FiniteOperad& P, VerifyReport& rep) {
  // Stored tables must be well-typed and total.
  for (const auto& [key, table] : P.circ) {
    const Profile& p = key.outer;
    const Profile& q = key.inner;
    std::string where = format_profile(p) + " o_" + std::to_string(key.slot) + " " +
                        format_profile(q);
    if (key.slot < 1 || key.slot > p.arity()) {
      rep.violations.push_back("composition slot out of range: " + where);
      continue;
    }
    if (q.output != p.inputs[static_cast<std::size_t>(key.slot) - 1]) {
      rep.violations.push_back("composition table colour mismatch: " + where);
      continue;
    }
    if (!P.base.stored(p) || !P.base.stored(q)) {
      rep.violations.push_back("composition table on unstored profile: " + where);
      continue;
    }
    Profile r = circ_profile(p, key.slot, q);
    if (!P.base.stored(r)) {
      rep.violations.push_back("composition table lands outside the support: " + where);
      continue;
    }
    for (const std::string& x : P.base.elements(p))
      for (const std::string& y : P.base.elements(q)) {
        auto jt = table.find({x, y});
        if (jt == table.end())
          rep.violations.push_back("composition table missing entry ('" + x + "','" + y +
                                   "') at " + where);
        else if (!P.base.contains(r, jt->second))
          rep.violations.push_back("composition value '" + jt->second + "' not in " +
                                   format_profile(r) + " at " + where);
        ++rep.checks;
      }
    for (const auto& [xy, z] : table)
      if (!P.base.contains(p, xy.first) || !P.base.contains(q, xy.second))
        rep.violations.push_back("composition table has stray entry ('" + xy.first + "','" +
                                 xy.second + "') at " + where);
  }
  // Every admissible triple within the support must have a table.
  for (const auto& [p, pes] : P.base.components) {
    if (pes.empty()) continue;
    for (const auto& [q, qes] : P.base.components) {
      if (qes.empty()) continue;
      for (int i = 1; i <= p.arity(); ++i) {
        if (p.inputs[static_cast<std::size_t>(i) - 1] != q.output) continue;
        if (!P.base.stored(circ_profile(p, i, q))) continue;
        if (!P.circ_stored(p, i, q))
          rep.violations.push_back("missing composition table " + format_profile(p) + " o_" +
                                   std::to_string(i) + " " + format_profile(q));
        ++rep.checks;
      }
    }
  }
}

inline void verify_unit_laws(const FiniteOperad& P, VerifyReport& rep) {
  for (const auto& [p, elems] : P.base.components) {
    if (elems.empty()) continue;
    // 1 o_1 x = x
    Profile up({p.output}, p.output);
    if (P.base.stored(up) && P.units.count(p.output) && P.circ_stored(up, 1, p)) {
      const std::string& one = P.units.at(p.output);
      for (const std::string& x : elems) {
        ++rep.checks;
        if (P.circ_value(up, 1, p, one, x) != x)
          rep.violations.push_back("left unit law fails on '" + x + "' at " +
                                   format_profile(p));
      }
    }
    // x o_i 1 = x
    for (int i = 1; i <= p.arity(); ++i) {
      const Colour& ci = p.inputs[static_cast<std::size_t>(i) - 1];
      Profile ui({ci}, ci);
      if (!P.base.stored(ui) || !P.units.count(ci) || !P.circ_stored(p, i, ui)) continue;
      const std::string& one = P.units.at(ci);
      for (const std::string& x : elems) {
        ++rep.checks;
        if (P.circ_value(p, i, ui, x, one) != x)
          rep.violations.push_back("right unit law fails on '" + x + "' in slot " +
                                   std::to_string(i) + " at " + format_profile(p));
      }
    }
  }
}

inline void verify_associativity(const FiniteOperad& P, VerifyReport& rep) {
  // nested: (x o_i y) o_{i-1+j} z = x o_i (y o_j z)
  for (const auto& [k1, t1] : P.circ) {
    const Profile& p = k1.outer;
    const Profile& q = k1.inner;
    int i = k1.slot;
    Profile r1 = circ_profile(p, i, q);
    for (const auto& [k2, t2] : P.circ) {
      if (k2.outer != q) continue;
      const Profile& s = k2.inner;
      int j = k2.slot;
      Profile r2 = circ_profile(q, j, s);
      if (!P.circ_stored(r1, i - 1 + j, s) || !P.circ_stored(p, i, r2)) continue;
      for (const std::string& x : P.base.elements(p))
        for (const std::string& y : P.base.elements(q))
          for (const std::string& z : P.base.elements(s)) {
            ++rep.checks;
            std::string lhs =
                P.circ_value(r1, i - 1 + j, s, P.circ_value(p, i, q, x, y), z);
            std::string rhs = P.circ_value(p, i, r2, x, P.circ_value(q, j, s, y, z));
            if (lhs != rhs)
              rep.violations.push_back(
                  "nested associativity fails: ('" + x + "' o_" + std::to_string(i) + " '" + y +
                  "') o_" + std::to_string(i - 1 + j) + " '" + z + "' = '" + lhs +
                  "' but the other nesting gives '" + rhs + "'");
          }
    }
  }
  // disjoint: (x o_i y) o_{j+m-1} z = (x o_j z) o_i y for i < j
  for (const auto& [k1, t1] : P.circ) {
    const Profile& p = k1.outer;
    const Profile& q = k1.inner;
    int i = k1.slot;
    int m = q.arity();
    Profile r1 = circ_profile(p, i, q);
    for (const auto& [k2, t2] : P.circ) {
      if (k2.outer != p) continue;
      int j = k2.slot;
      if (j <= i) continue;
      const Profile& s = k2.inner;
      Profile r2 = circ_profile(p, j, s);
      if (!P.circ_stored(r1, j + m - 1, s) || !P.circ_stored(r2, i, q)) continue;
      for (const std::string& x : P.base.elements(p))
        for (const std::string& y : P.base.elements(q))
          for (const std::string& z : P.base.elements(s)) {
            ++rep.checks;
            std::string lhs =
                P.circ_value(r1, j + m - 1, s, P.circ_value(p, i, q, x, y), z);
            std::string rhs = P.circ_value(r2, i, q, P.circ_value(p, j, s, x, z), y);
            if (lhs != rhs)
              rep.violations.push_back("disjoint associativity fails between slots " +
                                       std::to_string(i) + " and " + std::to_string(j) +
                                       " at " + format_profile(p) + " on ('" + x + "','" + y +
                                       "','" + z + "')");
          }
    }
  }
}

inline void verify_equivariance(const FiniteOperad& P, VerifyReport& rep) {
  for (const auto& [k1, t1] : P.circ) {
    const Profile& p = k1.outer;
    const Profile& q = k1.inner;
    int s = k1.slot;
    int n = p.arity();
    int m = q.arity();
    Profile r = circ_profile(p, s, q);

    // outer action: (alpha* x) o_i y = inflate_at(alpha,i,m)* (x o_{alpha(i)} y)
    for (const Permutation& alpha : all_permutations(n)) {
      if (alpha.is_identity()) continue;
      int i = alpha.inverse()(s);
      Profile pp = permute_profile(p, alpha);
      if (!P.circ_stored(pp, i, q)) continue;
      Permutation beta = inflate_at(alpha, i, m);
      for (const std::string& x : P.base.elements(p))
        for (const std::string& y : P.base.elements(q)) {
          ++rep.checks;
          std::string lhs = P.circ_value(pp, i, q, P.base.act(p, alpha, x), y);
          std::string rhs = P.base.act(r, beta, P.circ_value(p, s, q, x, y));
          if (lhs != rhs)
            rep.violations.push_back("outer equivariance fails at " + format_profile(p) +
                                     " slot " + std::to_string(s) + " under " + alpha.str() +
                                     " on ('" + x + "','" + y + "')");
        }
    }

    // inner action: x o_i (delta* y) = embed_block(n,i,delta)* (x o_i y)
    for (const Permutation& delta : all_permutations(m)) {
      if (delta.is_identity()) continue;
      Profile qq = permute_profile(q, delta);
      if (!P.circ_stored(p, s, qq)) continue;
      Permutation emb = embed_block(n, s, delta);
      for (const std::string& x : P.base.elements(p))
        for (const std::string& y : P.base.elements(q)) {
          ++rep.checks;
          std::string lhs = P.circ_value(p, s, qq, x, P.base.act(q, delta, y));
          std::string rhs = P.base.act(r, emb, P.circ_value(p, s, q, x, y));
          if (lhs != rhs)
            rep.violations.push_back("inner equivariance fails at " + format_profile(p) +
                                     " slot " + std::to_string(s) + " under " + delta.str() +
                                     " on ('" + x + "','" + y + "')");
        }
    }
  }
}

}  // namespace detail

// Exhaustively checks the operad laws over the stored support: the
// collection laws, existence and typing of units and composition
// tables, unit laws, both associativity shapes, and equivariance with
// respect to both actions. The notes record the support quantified
// over.
inline VerifyReport verify_operad(const FiniteOperad& P) {
  VerifyReport rep;
  std::size_t elem_total = 0;
  for (const auto& [p, es] : P.base.components) elem_total += es.size();
  rep.notes.push_back("support: " + std::to_string(P.base.components.size()) +
                      " stored profiles, " + std::to_string(elem_total) + " elements, " +
                      std::to_string(P.circ.size()) + " composition tables");

  for (std::string& v : validate_collection(P.base)) rep.violations.push_back(std::move(v));
  if (!rep.violations.empty()) return rep;

  detail::verify_units(P, rep);
  detail::verify_circ_tables(P, rep);
  if (!rep.violations.empty()) return rep;  // law checks assume well-typed tables

  detail::verify_unit_laws(P, rep);
  detail::verify_associativity(P, rep);
  detail::verify_equivariance(P, rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Constructions

// Every component a one-point set; the terminal operad on the stored
// support (all profiles up to the arity bound).
inline FiniteOperad terminal_operad(const std::set<Colour>& colours, int max_arity,
                                    const std::string& point = "pt") {
  if (max_arity < 1) throw DomainError("terminal_operad: max_arity must be >= 1");
  if (colours.empty()) throw DomainError("terminal_operad: need at least one colour");
  FiniteOperad P;
  P.base.colours = colours;
  std::vector<Profile> profiles;
  std::vector<std::vector<Colour>> tuples{{}};
  for (int n = 0; n <= max_arity; ++n) {
    std::vector<std::vector<Colour>> next;
    for (const std::vector<Colour>& t : tuples)
      for (const Colour& out : colours) profiles.push_back(Profile(t, out));
    for (const std::vector<Colour>& t : tuples)
      for (const Colour& c : colours) {
        std::vector<Colour> u = t;
        u.push_back(c);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  for (const Profile& p : profiles) {
    P.base.add_component(p, {point});
    for (const Permutation& alpha : all_permutations(p.arity())) {
      if (alpha.is_identity()) continue;
      P.base.actions[{p, alpha}] = {{point, point}};
    }
  }
  for (const Colour& c : colours) P.units[c] = point;
  for (const Profile& p : profiles)
    for (int i = 1; i <= p.arity(); ++i)
      for (const Profile& q : profiles) {
        if (q.output != p.inputs[static_cast<std::size_t>(i) - 1]) continue;
        if (p.arity() + q.arity() - 1 > max_arity) continue;
        P.circ[CircKey{p, i, q}] = {{{point, point}, point}};
      }
  return P;
}

// One-line name of a permutation element: "e" for the empty
// permutation, otherwise the digit string of its images. Arities are
// capped at 9 so names stay unambiguous.
inline std::string perm_name(const Permutation& pi) {
  if (pi.size() == 0) return "e";
  std::string out;
  for (int i = 1; i <= pi.size(); ++i) out += static_cast<char>('0' + pi(i));
  return out;
}

inline Permutation perm_of_name(const std::string& name, int arity) {
  if (arity == 0) {
    if (name != "e") throw DomainError("bad arity-0 permutation name '" + name + "'");
    return Permutation(std::vector<int>{});
  }
  if (static_cast<int>(name.size()) != arity)
    throw DomainError("permutation name '" + name + "' has wrong length");
  std::vector<int> im;
  for (char ch : name) im.push_back(ch - '0');
  return Permutation(std::move(im));
}

// Substituting a permutation into one slot of another: the inner
// permutation's whole ordering is spliced where the outer one reads
// slot i, all other entries shifted around the new block.
inline Permutation block_substitute(const Permutation& x, int i, const Permutation& y) {
  int n = x.size();
  int m = y.size();
  if (i < 1 || i > n) throw DomainError("block_substitute: slot out of range");
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(n + m - 1));
  for (int t = 1; t <= n; ++t) {
    if (x(t) < i) {
      im.push_back(x(t));
    } else if (x(t) > i) {
      im.push_back(x(t) + m - 1);
    } else {
      for (int s = 1; s <= m; ++s) im.push_back(i - 1 + y(s));
    }
  }
  return Permutation(std::move(im));
}

// The one-colour operad whose arity-n component is the symmetric group
// Sigma_n with its free action, truncated at the given arity. Arity 0
// is included as a singleton (see the README note on nullary
// operations).
inline FiniteOperad ass_truncated(int max_arity, Colour colour = Colour("c")) {
  if (max_arity < 1) throw DomainError("ass_truncated: max_arity must be >= 1");
  if (max_arity > 9) throw DomainError("ass_truncated: arities above 9 are not supported");
  FiniteOperad P;
  P.base.colours = {colour};
  std::vector<std::vector<Permutation>> sigma;
  for (int n = 0; n <= max_arity; ++n) sigma.push_back(all_permutations(n));

  auto profile_of_arity = [&](int n) {
    return Profile(std::vector<Colour>(static_cast<std::size_t>(n), colour), colour);
  };

  for (int n = 0; n <= max_arity; ++n) {
    Profile p = profile_of_arity(n);
    std::vector<std::string> elems;
    for (const Permutation& pi : sigma[static_cast<std::size_t>(n)]) elems.push_back(perm_name(pi));
    P.base.add_component(p, std::move(elems));
    // free action: alpha* pi = alpha^{-1} composed with pi
    for (const Permutation& alpha : sigma[static_cast<std::size_t>(n)]) {
      if (alpha.is_identity()) continue;
      std::map<std::string, std::string> table;
      Permutation inv = alpha.inverse();
      for (const Permutation& pi : sigma[static_cast<std::size_t>(n)])
        table[perm_name(pi)] = perm_name(inv * pi);
      P.base.actions[{p, alpha}] = std::move(table);
    }
  }
  P.units[colour] = perm_name(Permutation::identity(1));
  for (int n = 1; n <= max_arity; ++n)
    for (int m = 0; n + m - 1 <= max_arity; ++m)
      for (int i = 1; i <= n; ++i) {
        std::map<std::pair<std::string, std::string>, std::string> table;
        for (const Permutation& x : sigma[static_cast<std::size_t>(n)])
          for (const Permutation& y : sigma[static_cast<std::size_t>(m)])
            table[{perm_name(x), perm_name(y)}] = perm_name(block_substitute(x, i, y));
        P.circ[CircKey{profile_of_arity(n), i, profile_of_arity(m)}] = std::move(table);
      }
  return P;
}

// ---------------------------------------------------------------------------
// Monoids and the arity-one embedding

struct Monoid {
  std::vector<std::string> carrier;  // sorted, unique
  std::string unit;
  std::map<std::pair<std::string, std::string>, std::string> mult;

  std::string times(const std::string& x, const std::string& y) const {
    auto it = mult.find({x, y});
    if (it == mult.end())
      throw DomainError("monoid multiplication missing ('" + x + "','" + y + "')");
    return it->second;
  }

  friend bool operator==(const Monoid&, const Monoid&) = default;
};

inline std::vector<std::string> validate_monoid(const Monoid& R) {
  std::vector<std::string> report;
  std::set<std::string> elems(R.carrier.begin(), R.carrier.end());
  if (elems.size() != R.carrier.size()) report.push_back("carrier has duplicates");
  if (!elems.count(R.unit)) report.push_back("unit '" + R.unit + "' not in carrier");
  for (const std::string& e : R.carrier)
    if (e.empty() || e.find(',') != std::string::npos)
      report.push_back("bad element name '" + e + "'");
  if (!report.empty()) return report;
  for (const std::string& x : R.carrier)
    for (const std::string& y : R.carrier) {
      auto it = R.mult.find({x, y});
      if (it == R.mult.end())
        report.push_back("multiplication missing ('" + x + "','" + y + "')");
      else if (!elems.count(it->second))
        report.push_back("product '" + it->second + "' not in carrier");
    }
  if (!report.empty()) return report;
  for (const std::string& x : R.carrier) {
    if (R.times(R.unit, x) != x) report.push_back("left unit fails on '" + x + "'");
    if (R.times(x, R.unit) != x) report.push_back("right unit fails on '" + x + "'");
  }
  for (const std::string& x : R.carrier)
    for (const std::string& y : R.carrier)
      for (const std::string& z : R.carrier)
        if (R.times(R.times(x, y), z) != R.times(x, R.times(y, z)))
          report.push_back("associativity fails on ('" + x + "','" + y + "','" + z + "')");
  return report;
}

// The operad concentrated in arity one with the monoid as its only
// component; its algebras are the monoid's modules.
inline FiniteOperad operad_from_monoid(const Monoid& R, Colour colour = Colour("c")) {
  std::vector<std::string> report = validate_monoid(R);
  if (!report.empty()) throw DomainError("not a monoid: " + report.front());
  FiniteOperad P;
  P.base.colours = {colour};
  Profile pc({colour}, colour);
  P.base.add_component(pc, R.carrier);
  P.units[colour] = R.unit;
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (const std::string& x : R.carrier)
    for (const std::string& y : R.carrier) table[{x, y}] = R.times(x, y);
  P.circ[CircKey{pc, 1, pc}] = std::move(table);
  return P;
}

// The reverse direction: the arity-one component of an operad is a
// monoid under o_1.
inline Monoid monoid_of(const FiniteOperad& P, const Colour& colour) {
  Profile pc({colour}, colour);
  Monoid R;
  R.carrier = P.base.elements(pc);
  R.unit = P.unit(colour);
  for (const std::string& x : R.carrier)
    for (const std::string& y : R.carrier)
      R.mult[{x, y}] = P.circ_value(pc, 1, pc, x, y);
  return R;
}

// ---------------------------------------------------------------------------
// Operad morphisms

// Checks that per-profile maps defined on P's stored support commute
// with the actions and preserve units and composition, wherever the
// target has the corresponding structure stored.
inline std::vector<std::string> verify_operad_morphism(
    const FiniteOperad& P, const FiniteOperad& Q,
    const std::map<Profile, std::map<std::string, std::string>>& maps) {
  CollectionMorphism phi{maps};
  std::vector<std::string> report = validate_collection_morphism(P.base, Q.base, phi);
  if (!report.empty()) return report;
  for (const auto& [c, u] : P.units) {
    Profile pc({c}, c);
    try {
      if (phi(pc, u) != Q.unit(c))
        report.push_back("unit at colour '" + c.name + "' not preserved");
    } catch (const DomainError& err) {
      report.push_back(std::string("unit check failed: ") + err.what());
    }
  }
  for (const auto& [key, table] : P.circ) {
    Profile r = circ_profile(key.outer, key.slot, key.inner);
    for (const auto& [xy, z] : table) {
      try {
        std::string lhs = phi(r, z);
        std::string rhs = Q.circ_value(key.outer, key.slot, key.inner, phi(key.outer, xy.first),
                                       phi(key.inner, xy.second));
        if (lhs != rhs)
          report.push_back("composition not preserved at " + format_profile(key.outer) + " o_" +
                           std::to_string(key.slot) + " on ('" + xy.first + "','" + xy.second +
                           "')");
      } catch (const DomainError& err) {
        report.push_back(std::string("composition check failed: ") + err.what());
      }
    }
  }
  return report;
}

}  // namespace operads
