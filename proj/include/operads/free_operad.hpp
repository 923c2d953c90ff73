#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "operads/collection.hpp"
#include "operads/finite_operad.hpp"
#include "operads/tree.hpp"

namespace operads {

// Elements of the free operad on a collection: planar trees with
// numbered leaves whose vertices are unnumbered but decorated by
// collection elements of the matching profile. Two decorated trees
// represent the same free-operad element when one arises from the other
// by reordering the inputs of vertices, acting simultaneously on the
// planar order and on the decorations.

class DecChild;

struct DecoratedVertex {
  std::string element;
  Colour colour;  // output edge colour
  std::vector<DecChild> children;

  friend bool operator==(const DecoratedVertex&, const DecoratedVertex&) = default;
};

class DecChild {
 public:
  DecChild(Leaf l) : node_(std::move(l)) {}
  DecChild(DecoratedVertex v) : node_(std::move(v)) {}

  bool is_leaf() const { return std::holds_alternative<Leaf>(node_); }
  const Leaf& leaf() const { return std::get<Leaf>(node_); }
  const DecoratedVertex& vertex() const { return std::get<DecoratedVertex>(node_); }

  friend bool operator==(const DecChild&, const DecChild&) = default;

 private:
  std::variant<Leaf, DecoratedVertex> node_;
};

class DecoratedTree {
 public:
  static DecoratedTree edge(Colour c) { return DecoratedTree(std::move(c)); }
  static DecoratedTree node(DecoratedVertex root) { return DecoratedTree(std::move(root)); }

  bool is_edge() const { return std::holds_alternative<Colour>(data_); }
  const Colour& edge_colour() const { return std::get<Colour>(data_); }
  const DecoratedVertex& root() const { return std::get<DecoratedVertex>(data_); }
  const Colour& root_colour() const { return is_edge() ? edge_colour() : root().colour; }

  int vertex_count() const;

  friend bool operator==(const DecoratedTree&, const DecoratedTree&) = default;

 private:
  explicit DecoratedTree(Colour c) : data_(std::move(c)) {}
  explicit DecoratedTree(DecoratedVertex v) : data_(std::move(v)) {}

  std::variant<Colour, DecoratedVertex> data_;
};

namespace detail {

template <typename F>
void dec_for_each_leaf(const DecoratedVertex& v, F&& fn) {
  for (const DecChild& c : v.children) {
    if (c.is_leaf())
      fn(c.leaf());
    else
      dec_for_each_leaf(c.vertex(), fn);
  }
}

inline int dec_count(const DecoratedVertex& v) {
  int n = 1;
  for (const DecChild& c : v.children)
    if (!c.is_leaf()) n += dec_count(c.vertex());
  return n;
}

inline void dec_serialize(const DecChild& c, std::string& out);

inline void dec_serialize_vertex(const DecoratedVertex& v, std::string& out) {
  out += v.element;
  out += ':';
  out += v.colour.name;
  out += '(';
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    if (i) out += ',';
    dec_serialize(v.children[i], out);
  }
  out += ')';
}

inline void dec_serialize(const DecChild& c, std::string& out) {
  if (c.is_leaf()) {
    out += 'l';
    out += std::to_string(c.leaf().number);
    out += ':';
    out += c.leaf().colour.name;
  } else {
    dec_serialize_vertex(c.vertex(), out);
  }
}

}  // namespace detail

inline int DecoratedTree::vertex_count() const {
  return is_edge() ? 0 : detail::dec_count(root());
}

// "elem:colour(children...)" with the leaf and edge syntax of the plain
// tree language. Canonical representatives are the lexicographic minima
// of these strings over each equivalence class.
inline std::string serialize_decorated(const DecoratedTree& t) {
  std::string out;
  if (t.is_edge())
    out = "e:" + t.edge_colour().name;
  else
    detail::dec_serialize_vertex(t.root(), out);
  return out;
}

// The planar profile of a decorated vertex (child edge colours read
// left to right).
inline Profile decorated_vertex_profile(const DecoratedVertex& v) {
  Profile p;
  p.output = v.colour;
  for (const DecChild& c : v.children)
    p.inputs.push_back(c.is_leaf() ? c.leaf().colour : c.vertex().colour);
  return p;
}

inline Profile decorated_boundary(const DecoratedTree& t) {
  if (t.is_edge()) return Profile({t.edge_colour()}, t.edge_colour());
  std::map<std::int64_t, Colour> leaves;
  detail::dec_for_each_leaf(t.root(), [&](const Leaf& l) { leaves[l.number] = l.colour; });
  Profile b;
  for (auto& [num, col] : leaves) b.inputs.push_back(col);
  b.output = t.root().colour;
  return b;
}

// Leaf numbering is a bijection and every decoration names an element
// of K at its vertex's planar profile.
inline std::vector<std::string> validate_decorated(const DecoratedTree& t, const Collection& K) {
  std::vector<std::string> report;
  if (t.is_edge()) return report;
  std::vector<std::int64_t> nums;
  detail::dec_for_each_leaf(t.root(), [&](const Leaf& l) { nums.push_back(l.number); });
  std::sort(nums.begin(), nums.end());
  for (std::size_t i = 0; i < nums.size(); ++i)
    if (nums[i] != static_cast<std::int64_t>(i) + 1) {
      report.push_back("leaf numbering not 1.." + std::to_string(nums.size()));
      break;
    }
  struct Rec {
    const Collection& K;
    std::vector<std::string>& report;
    void run(const DecoratedVertex& v) {
      Profile p = decorated_vertex_profile(v);
      if (!K.contains(p, v.element))
        report.push_back("decoration '" + v.element + "' not in the collection at " +
                         format_profile(p));
      for (const DecChild& c : v.children)
        if (!c.is_leaf()) run(c.vertex());
    }
  } rec{K, report};
  rec.run(t.root());
  return report;
}

// ---------------------------------------------------------------------------
// The generating reordering moves and the induced equivalence

namespace detail {

inline DecChild reorder_at(const DecChild& c, const Collection& K, int target,
                           const Permutation& alpha, int& counter);

inline DecoratedVertex reorder_vertex(const DecoratedVertex& v, const Collection& K, int target,
                                      const Permutation& alpha, int& counter) {
  int my_id = counter++;
  DecoratedVertex out;
  out.colour = v.colour;
  if (my_id == target) {
    Profile p = decorated_vertex_profile(v);
    if (alpha.size() != p.arity()) throw DomainError("reorder: arity mismatch");
    out.element = K.act(p, alpha, v.element);
    for (int i = 1; i <= alpha.size(); ++i)
      out.children.push_back(
          reorder_at(v.children[static_cast<std::size_t>(alpha(i)) - 1], K, target, alpha, counter));
    // note: counter advance below children of a reordered vertex is
    // irrelevant, the target was already hit
    return out;
  }
  out.element = v.element;
  for (const DecChild& c : v.children) out.children.push_back(reorder_at(c, K, target, alpha, counter));
  return out;
}

inline DecChild reorder_at(const DecChild& c, const Collection& K, int target,
                           const Permutation& alpha, int& counter) {
  if (c.is_leaf()) return c;
  return DecChild(reorder_vertex(c.vertex(), K, target, alpha, counter));
}

}  // namespace detail

// Applies one generating move: permutes the children of the vertex at
// preorder index `target` (0-based) by alpha, acting on its decoration
// through K.
inline DecoratedTree reorder_inputs(const DecoratedTree& t, const Collection& K, int target,
                                    const Permutation& alpha) {
  if (t.is_edge()) throw DomainError("reorder_inputs: edge tree has no vertices");
  int counter = 0;
  return DecoratedTree::node(detail::reorder_vertex(t.root(), K, target, alpha, counter));
}

// The whole equivalence class of a decorated tree, keyed by
// serialization; closure of the reordering moves.
inline std::map<std::string, DecoratedTree> decorated_orbit(const DecoratedTree& t,
                                                            const Collection& K) {
  std::map<std::string, DecoratedTree> seen;
  seen.emplace(serialize_decorated(t), t);
  std::vector<DecoratedTree> frontier{t};
  while (!frontier.empty()) {
    std::vector<DecoratedTree> next;
    for (const DecoratedTree& cur : frontier) {
      int n = cur.vertex_count();
      for (int v = 0; v < n; ++v) {
        // arity of the vertex at preorder index v
        struct Find {
          int target;
          int counter = 0;
          int arity = -1;
          void run(const DecoratedVertex& dv) {
            int id = counter++;
            if (id == target) {
              arity = static_cast<int>(dv.children.size());
              return;
            }
            for (const DecChild& c : dv.children)
              if (!c.is_leaf() && arity < 0) run(c.vertex());
          }
        } find{v};
        find.run(cur.root());
        for (const Permutation& alpha : all_permutations(find.arity)) {
          if (alpha.is_identity()) continue;
          DecoratedTree moved = reorder_inputs(cur, K, v, alpha);
          std::string key = serialize_decorated(moved);
          if (!seen.count(key)) {
            seen.emplace(key, moved);
            next.push_back(std::move(moved));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline DecoratedTree canonical_decorated(const DecoratedTree& t, const Collection& K) {
  if (t.is_edge()) return t;
  return decorated_orbit(t, K).begin()->second;
}

// ---------------------------------------------------------------------------
// Enumeration of free-operad elements

namespace detail {

struct DecEnumerator {
  const Collection& K;
  const std::vector<Colour>& leaf_colours;

  // All decorated subtrees with exactly the leaves in lmask, root edge
  // colour c, and at most `budget` vertices; paired with vertex counts.
  std::vector<std::pair<DecChild, int>> subtrees(std::uint64_t lmask, int budget,
                                                 const Colour& c) {
    std::vector<std::pair<DecChild, int>> out;
    if (popcount(lmask) == 1) {
      int j = lowest(lmask);
      if (leaf_colours[static_cast<std::size_t>(j) - 1] == c)
        out.push_back({DecChild(Leaf{j, c}), 0});
    }
    if (budget == 0) return out;
    for (const auto& [p, elems] : K.components) {
      if (p.output != c || elems.empty()) continue;
      DecoratedVertex base;
      base.colour = c;
      std::vector<std::pair<DecoratedVertex, int>> partial{{base, 1}};
      extend(partial, p, 0, lmask, budget, out, elems);
    }
    return out;
  }

  void extend(std::vector<std::pair<DecoratedVertex, int>>& partial, const Profile& p, int slot,
              std::uint64_t lfree, int budget, std::vector<std::pair<DecChild, int>>& out,
              const std::vector<std::string>& elems) {
    if (slot == p.arity()) {
      if (lfree != 0) return;
      for (const auto& [v, used] : partial)
        for (const std::string& e : elems) {
          DecoratedVertex w = v;
          w.element = e;
          out.push_back({DecChild(std::move(w)), used});
        }
      return;
    }
    bool last = slot + 1 == p.arity();
    const Colour& want = p.inputs[static_cast<std::size_t>(slot)];
    std::uint64_t lsub = lfree;
    for (;;) {
      if (!last || lsub == lfree) {
        for (auto& [v, used] : partial) {
          std::vector<std::pair<DecChild, int>> parts = subtrees(lsub, budget - used, want);
          for (auto& [c, cused] : parts) {
            std::vector<std::pair<DecoratedVertex, int>> extended;
            DecoratedVertex w = v;
            w.children.push_back(c);
            extended.push_back({std::move(w), used + cused});
            extend(extended, p, slot + 1, lfree & ~lsub, budget, out, elems);
          }
        }
      }
      if (lsub == 0) break;
      lsub = (lsub - 1) & lfree;
    }
  }

  static int popcount(std::uint64_t x) {
    int n = 0;
    while (x) {
      x &= x - 1;
      ++n;
    }
    return n;
  }
  static int lowest(std::uint64_t x) {
    int i = 1;
    while (!(x & 1)) {
      x >>= 1;
      ++i;
    }
    return i;
  }
};

}  // namespace detail

// All equivalence classes of decorated trees over K with the given
// boundary and at most max_vertices vertices, each by its canonical
// (lexicographically minimal) representative, ordered by vertex count
// and then serialization. The list at a smaller bound is a prefix of
// the list at a larger one.
inline std::vector<DecoratedTree> free_elements(const Collection& K, const Profile& boundary,
                                                int max_vertices) {
  if (max_vertices < 0) throw DomainError("free_elements: negative bound");
  std::vector<DecoratedTree> reps;
  if (boundary.arity() == 1 && boundary.inputs[0] == boundary.output)
    reps.push_back(DecoratedTree::edge(boundary.output));

  int m = boundary.arity();
  if (m > 62) throw DomainError("free_elements: too many leaves");
  std::uint64_t lall = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
  detail::DecEnumerator en{K, boundary.inputs};
  std::set<std::string> seen;
  std::vector<DecoratedTree> all;
  for (auto& [child, used] : en.subtrees(lall, max_vertices, boundary.output)) {
    if (child.is_leaf()) continue;  // the edge case was handled above
    DecoratedTree t = DecoratedTree::node(child.vertex());
    DecoratedTree canon = canonical_decorated(t, K);
    std::string key = serialize_decorated(canon);
    if (seen.insert(key).second) all.push_back(std::move(canon));
  }
  std::sort(all.begin(), all.end(), [](const DecoratedTree& a, const DecoratedTree& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    if (na != nb) return na < nb;
    return serialize_decorated(a) < serialize_decorated(b);
  });
  for (DecoratedTree& t : all) reps.push_back(std::move(t));
  return reps;
}

// ---------------------------------------------------------------------------
// The operad structure of the free operad: grafting and leaf relabelling

namespace detail {

inline DecChild graft_rec(const DecChild& c, std::int64_t target, const DecoratedTree& s,
                          int m_s) {
  if (c.is_leaf()) {
    const Leaf& l = c.leaf();
    if (l.number == target) {
      if (s.is_edge()) return c;
      // renumber the grafted tree's leaves into the target gap
      struct Shift {
        std::int64_t base;
        DecChild run(const DecChild& sc) const {
          if (sc.is_leaf())
            return DecChild(Leaf{base + sc.leaf().number - 1, sc.leaf().colour});
          DecoratedVertex v;
          v.element = sc.vertex().element;
          v.colour = sc.vertex().colour;
          for (const DecChild& cc : sc.vertex().children) v.children.push_back(run(cc));
          return DecChild(std::move(v));
        }
      } shift{target};
      return shift.run(DecChild(s.root()));
    }
    if (l.number > target) return DecChild(Leaf{l.number + m_s - 1, l.colour});
    return c;
  }
  DecoratedVertex v;
  v.element = c.vertex().element;
  v.colour = c.vertex().colour;
  for (const DecChild& cc : c.vertex().children)
    v.children.push_back(graft_rec(cc, target, s, m_s));
  return DecChild(std::move(v));
}

}  // namespace detail

// Partial composition in the free operad: the leaf numbered i of t is
// replaced by s, leaves renumbered the standard way.
inline DecoratedTree graft(const DecoratedTree& t, int i, const DecoratedTree& s) {
  Profile tb = decorated_boundary(t);
  if (i < 1 || i > tb.arity()) throw DomainError("graft: leaf index out of range");
  Profile sb = decorated_boundary(s);
  if (sb.output != tb.inputs[static_cast<std::size_t>(i) - 1])
    throw DomainError("graft: root colour " + sb.output.name + " does not match leaf colour");
  if (t.is_edge()) return s;
  int m_s = sb.arity();
  DecChild res = detail::graft_rec(DecChild(t.root()), i, s, m_s);
  if (res.is_leaf()) return DecoratedTree::edge(res.leaf().colour);
  return DecoratedTree::node(res.vertex());
}

// The right symmetric action on free-operad elements: the leaf carrying
// old number alpha(j) carries new number j.
inline DecoratedTree leaf_relabel(const DecoratedTree& t, const Permutation& alpha) {
  Profile b = decorated_boundary(t);
  if (alpha.size() != b.arity()) throw DomainError("leaf_relabel: arity mismatch");
  if (t.is_edge()) return t;
  Permutation inv = alpha.inverse();
  struct Rec {
    const Permutation& inv;
    DecChild run(const DecChild& c) const {
      if (c.is_leaf())
        return DecChild(Leaf{inv(static_cast<int>(c.leaf().number)), c.leaf().colour});
      DecoratedVertex v;
      v.element = c.vertex().element;
      v.colour = c.vertex().colour;
      for (const DecChild& cc : c.vertex().children) v.children.push_back(run(cc));
      return DecChild(std::move(v));
    }
  } rec{inv};
  return DecoratedTree::node(rec.run(DecChild(t.root())).vertex());
}

// ---------------------------------------------------------------------------
// The adjunction: extending a generator map to an evaluator

namespace detail {

inline std::vector<std::int64_t> dec_planar_leaves(const DecoratedTree& t) {
  std::vector<std::int64_t> out;
  if (t.is_edge()) {
    out.push_back(1);
    return out;
  }
  dec_for_each_leaf(t.root(), [&](const Leaf& l) { out.push_back(l.number); });
  return out;
}

// Composes the element tuple along the planar structure of a decorated
// vertex: children are plugged right to left so slot indices stay put.
inline OperadElement dec_eval(const FiniteOperad& P, const CollectionMorphism& gen,
                              const DecoratedVertex& v) {
  Profile p = decorated_vertex_profile(v);
  OperadElement acc{p, gen(p, v.element)};
  for (int i = static_cast<int>(v.children.size()); i >= 1; --i) {
    const DecChild& c = v.children[static_cast<std::size_t>(i) - 1];
    if (c.is_leaf()) continue;
    OperadElement sub = dec_eval(P, gen, c.vertex());
    std::string name = P.circ_value(acc.profile, i, sub.profile, acc.name, sub.name);
    acc = OperadElement{circ_profile(acc.profile, i, sub.profile), name};
  }
  return acc;
}

}  // namespace detail

// The evaluator induced by a generator map gen : K -> U(P): decorations
// are replaced by their images and composed along the tree, then the
// leaf numbering acts. Well-defined on equivalence classes, sends the
// edge class to the unit, and commutes with grafting and relabelling.
class FreeEvaluator {
 public:
  FreeEvaluator(Collection K, FiniteOperad P, CollectionMorphism gen)
      : K_(std::move(K)), P_(std::move(P)), gen_(std::move(gen)) {
    std::vector<std::string> report = validate_collection_morphism(K_, P_.base, gen_);
    if (!report.empty())
      throw DomainError("generator map is not a collection morphism: " + report.front());
  }

  OperadElement operator()(const DecoratedTree& t) const {
    if (t.is_edge())
      return OperadElement{Profile({t.edge_colour()}, t.edge_colour()),
                           P_.unit(t.edge_colour())};
    OperadElement composite = detail::dec_eval(P_, gen_, t.root());
    return detail::tau_twist(P_, detail::dec_planar_leaves(t), composite);
  }

  const Collection& collection() const { return K_; }
  const FiniteOperad& target() const { return P_; }

 private:
  Collection K_;
  FiniteOperad P_;
  CollectionMorphism gen_;
};

inline FreeEvaluator extend_to_free(const Collection& K, const FiniteOperad& P,
                                    const CollectionMorphism& gen) {
  return FreeEvaluator(K, P, gen);
}

}  // namespace operads
