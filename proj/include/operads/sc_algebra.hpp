#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "operads/finite_operad.hpp"
#include "operads/sc.hpp"

namespace operads {

namespace detail {

inline OperadElement sc_eval_vertex(const FiniteOperad& Q, const TreeProfiles& tp,
                                    const std::vector<std::string>& elems, const Vertex& v) {
  const Profile& p = tp.vertices[static_cast<std::size_t>(v.number) - 1];
  OperadElement acc{p, elems[static_cast<std::size_t>(v.number) - 1]};
  for (int i = static_cast<int>(v.children.size()); i >= 1; --i) {
    const Child& c = v.children[static_cast<std::size_t>(i) - 1];
    if (c.is_leaf()) continue;
    OperadElement sub = sc_eval_vertex(Q, tp, elems, c.vertex());
    std::string name = Q.circ_value(acc.profile, i, sub.profile, acc.name, sub.name);
    acc = OperadElement{circ_profile(acc.profile, i, sub.profile), name};
  }
  return acc;
}

}  // namespace detail

// The action of a tree on a tuple of operad elements: label the vertex
// numbered i with elems[i-1], compose along the tree from the leaves
// inward, then apply the leaf-numbering action. This is what makes the
// components of any coloured operad an algebra over the tree operad.
inline OperadElement sc_evaluate(const FiniteOperad& Q, const SCElement& x,
                                 const std::vector<std::string>& elems) {
  if (!validate(x.tree(), Q.base.colours).empty())
    throw DomainError("sc_evaluate: tree does not live over the operad's colours");
  TreeProfiles tp = x.profiles();
  if (elems.size() != tp.vertices.size())
    throw DomainError("sc_evaluate: expected " + std::to_string(tp.vertices.size()) +
                      " elements, got " + std::to_string(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!Q.base.contains(tp.vertices[i], elems[i]))
      throw DomainError("sc_evaluate: '" + elems[i] + "' is not an element of " +
                        format_profile(tp.vertices[i]));
  if (x.tree().is_edge())
    return OperadElement{Profile({x.tree().edge_colour()}, x.tree().edge_colour()),
                         Q.unit(x.tree().edge_colour())};
  OperadElement composite = detail::sc_eval_vertex(Q, tp, elems, x.tree().root());
  return detail::tau_twist(Q, detail::planar_leaf_numbers(x.tree()), composite);
}

// Enumerates every tree with at most max_vertices vertices and at most
// max_leaves boundary leaves whose vertex profiles are nonempty stored
// components of Q, and calls fn on each. Boundaries are derived from
// the vertex-profile tuple: one choice of root fixes the output colour
// and the leaf-colour multiset, and every ordering of that multiset is
// a distinct component.
template <typename Fn>
void for_each_support_tree(const FiniteOperad& Q, int max_vertices, int max_leaves, Fn&& fn) {
  std::vector<Profile> support;
  for (const auto& [p, elems] : Q.base.components)
    if (!elems.empty()) support.push_back(p);

  // the vertexless trees
  for (const Colour& c : Q.base.colours) {
    SCElement edge(ColouredTree::edge(c), Q.base.colours);
    fn(edge);
  }

  std::vector<Profile> tuple;
  auto emit_tuple = [&](const std::vector<Profile>& profiles) {
    int n = static_cast<int>(profiles.size());
    int slots = 0;
    for (const Profile& p : profiles) slots += p.arity();
    int m = slots - (n - 1);
    if (m < 0 || m > max_leaves) return;

    std::set<Profile> boundaries;
    for (int r = 0; r < n; ++r) {
      std::map<Colour, int> multiset;
      for (const Profile& p : profiles)
        for (const Colour& c : p.inputs) ++multiset[c];
      bool feasible = true;
      for (int v = 0; v < n; ++v) {
        if (v == r) continue;
        if (--multiset[profiles[static_cast<std::size_t>(v)].output] < 0) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::vector<Colour> leaves;
      for (const auto& [c, k] : multiset)
        for (int t = 0; t < k; ++t) leaves.push_back(c);
      std::sort(leaves.begin(), leaves.end());
      do {
        boundaries.insert(Profile(leaves, profiles[static_cast<std::size_t>(r)].output));
      } while (std::next_permutation(leaves.begin(), leaves.end()));
    }
    for (const Profile& boundary : boundaries)
      for (const SCElement& x : sc_component(Q.base.colours, profiles, boundary)) fn(x);
  };

  std::function<void(int)> grow = [&](int n) {
    if (n > 0) emit_tuple(tuple);
    if (n == max_vertices) return;
    for (const Profile& p : support) {
      tuple.push_back(p);
      grow(n + 1);
      tuple.pop_back();
    }
  };
  grow(0);
}

// An algebra over the tree operad, supplied abstractly: a family of
// finite sets indexed by profiles and an action of trees on element
// tuples. The tuple is ordered by vertex number; the result must lie in
// the boundary-profile component.
struct SCAlgebra {
  std::set<Colour> colours;
  std::map<Profile, std::vector<std::string>> family;
  std::function<std::string(const SCElement&, const std::vector<std::string>&)> act;
};

// The tautological algebra carried by an operad's own components.
inline SCAlgebra make_sc_algebra(const FiniteOperad& Q) {
  SCAlgebra phi;
  phi.colours = Q.base.colours;
  phi.family = Q.base.components;
  phi.act = [Q](const SCElement& x, const std::vector<std::string>& elems) {
    return sc_evaluate(Q, x, elems).name;
  };
  return phi;
}

// Extracts a coloured operad from a tree-operad algebra: units are the
// images of the edge trees, the symmetric action comes from single
// corollas with permuted leaf numbering, and partial composition from
// the two-level trees. Inconsistencies (images landing outside the
// stated family) are reported, not repaired; the result passes
// verify_operad whenever the supplied action really was an algebra.
inline FiniteOperad operad_from_sc_algebra(const SCAlgebra& phi,
                                           std::vector<std::string>* report = nullptr) {
  auto note = [&](const std::string& msg) {
    if (report) report->push_back(msg);
  };
  FiniteOperad P;
  P.base.colours = phi.colours;
  for (const auto& [p, elems] : phi.family) {
    std::vector<std::string> sorted = elems;
    P.base.add_component(p, sorted);
  }

  auto in_family = [&](const Profile& p, const std::string& e) {
    auto it = phi.family.find(p);
    if (it == phi.family.end()) return false;
    return std::find(it->second.begin(), it->second.end(), e) != it->second.end();
  };

  // units from the edge trees
  for (const Colour& c : phi.colours) {
    Profile pc({c}, c);
    if (!phi.family.count(pc)) {
      note("no component at " + format_profile(pc) + "; unit for '" + c.name +
           "' cannot be extracted");
      continue;
    }
    SCElement edge(ColouredTree::edge(c), phi.colours);
    std::string u = phi.act(edge, {});
    if (!in_family(pc, u))
      note("extracted unit '" + u + "' for colour '" + c.name + "' is outside the family");
    P.units[c] = u;
  }

  // the symmetric action from single corollas with twisted numbering:
  // leaf j sits at planar position alpha(j)
  for (const auto& [p, elems] : phi.family) {
    int n = p.arity();
    for (const Permutation& alpha : all_permutations(n)) {
      if (alpha.is_identity()) continue;
      Permutation inv = alpha.inverse();
      Vertex v;
      v.number = 1;
      v.colour = p.output;
      for (int t = 1; t <= n; ++t)
        v.children.push_back(
            Child(Leaf{inv(t), p.inputs[static_cast<std::size_t>(t) - 1]}));
      SCElement corolla(ColouredTree::node(std::move(v)), phi.colours);
      Profile target = permute_profile(p, alpha);
      std::map<std::string, std::string> table;
      for (const std::string& e : elems) {
        std::string img = phi.act(corolla, {e});
        if (!in_family(target, img))
          note("action image '" + img + "' of '" + e + "' is outside " + format_profile(target));
        table[e] = img;
      }
      P.base.actions[{p, alpha}] = std::move(table);
    }
  }

  // partial composition from two-level trees: the bottom vertex is
  // numbered 1, the top vertex 2 sits in slot i, leaves are numbered
  // left to right
  for (const auto& [p, pes] : phi.family) {
    int n = p.arity();
    for (int i = 1; i <= n; ++i) {
      for (const auto& [q, qes] : phi.family) {
        int m = q.arity();
        if (q.output != p.inputs[static_cast<std::size_t>(i) - 1]) continue;
        Profile r = circ_profile(p, i, q);
        if (!phi.family.count(r)) continue;

        Vertex top;
        top.number = 2;
        top.colour = q.output;
        for (int s = 1; s <= m; ++s)
          top.children.push_back(
              Child(Leaf{i - 1 + s, q.inputs[static_cast<std::size_t>(s) - 1]}));
        Vertex bottom;
        bottom.number = 1;
        bottom.colour = p.output;
        for (int t = 1; t <= n; ++t) {
          if (t == i) {
            bottom.children.push_back(Child(top));
          } else {
            int leaf = t < i ? t : t + m - 1;
            bottom.children.push_back(
                Child(Leaf{leaf, p.inputs[static_cast<std::size_t>(t) - 1]}));
          }
        }
        SCElement two_level(ColouredTree::node(std::move(bottom)), phi.colours);
        std::map<std::pair<std::string, std::string>, std::string> table;
        for (const std::string& x : pes)
          for (const std::string& y : qes) {
            std::string z = phi.act(two_level, {x, y});
            if (!in_family(r, z))
              note("composite '" + z + "' of ('" + x + "','" + y + "') is outside " +
                   format_profile(r));
            table[{x, y}] = z;
          }
        P.circ[CircKey{p, i, q}] = std::move(table);
      }
    }
  }
  return P;
}

}  // namespace operads
