#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "operads/enumerate.hpp"
#include "operads/permutation.hpp"
#include "operads/tree.hpp"

namespace operads {

// An element of the tree operad over a fixed colour set: a numbered
// planar rooted coloured tree. Its component is indexed by the list of
// vertex profiles (inputs) and the boundary profile (output), both
// recovered by profile_of.
class SCElement {
 public:
  SCElement(ColouredTree tree, std::set<Colour> colour_set)
      : tree_(std::move(tree)), colours_(std::move(colour_set)) {
    std::vector<std::string> report = validate(tree_, colours_);
    if (!report.empty()) throw DomainError("invalid tree element: " + report.front());
  }

  static SCElement parse(std::string_view text, std::set<Colour> colour_set) {
    ColouredTree t = parse_tree(text, colour_set);
    return SCElement(std::move(t), std::move(colour_set));
  }

  const ColouredTree& tree() const { return tree_; }
  const std::set<Colour>& colour_set() const { return colours_; }
  std::string str() const { return serialize_tree(tree_); }

  int vertex_count() const { return tree_.vertex_count(); }
  TreeProfiles profiles() const { return profile_of(tree_); }

  friend bool operator==(const SCElement&, const SCElement&) = default;

 private:
  ColouredTree tree_;
  std::set<Colour> colours_;
};

// The unit element at a profile: the corolla with a single vertex
// numbered 1, leaf j numbered j left to right.
inline SCElement sc_unit(const Profile& p, std::set<Colour> colour_set) {
  Vertex v;
  v.number = 1;
  v.colour = p.output;
  for (std::size_t j = 0; j < p.inputs.size(); ++j)
    v.children.push_back(Child(Leaf{static_cast<std::int64_t>(j) + 1, p.inputs[j]}));
  return SCElement(ColouredTree::node(std::move(v)), std::move(colour_set));
}

namespace detail {

template <typename F>
Vertex map_vertex_numbers(const Vertex& v, F&& fn) {
  Vertex out;
  out.number = fn(v.number);
  out.colour = v.colour;
  out.children.reserve(v.children.size());
  for (const Child& c : v.children) {
    if (c.is_leaf())
      out.children.push_back(Child(c.leaf()));
    else
      out.children.push_back(Child(map_vertex_numbers(c.vertex(), fn)));
  }
  return out;
}

}  // namespace detail

// The right symmetric action: sends (T, sigma, tau) to (T, sigma o alpha, tau),
// i.e. the vertex carrying old number alpha(i) carries new number i. The
// vertex-profile list of the result is the alpha-permuted list.
inline SCElement sigma_action(const SCElement& x, const Permutation& alpha) {
  if (alpha.size() != x.vertex_count())
    throw DomainError("sigma_action: permutation size " + std::to_string(alpha.size()) +
                      " does not match vertex count " + std::to_string(x.vertex_count()));
  if (x.tree().is_edge()) return x;
  Permutation inv = alpha.inverse();
  Vertex root = detail::map_vertex_numbers(
      x.tree().root(), [&](std::int64_t old) { return static_cast<std::int64_t>(inv(static_cast<int>(old))); });
  return SCElement(ColouredTree::node(std::move(root)), x.colour_set());
}

namespace detail {

struct ComposeRec {
  const std::vector<const ColouredTree*>& guests;
  const std::vector<int>& offsets;

  // Replaces every vertex of the host by its guest; returns the grafted
  // child. Result vertex numbers are blockwise: guest i keeps its
  // internal order at offset[i-1].
  Child run(const Vertex& host) const {
    std::vector<Child> slots;
    slots.reserve(host.children.size());
    for (const Child& c : host.children) {
      if (c.is_leaf())
        slots.push_back(c);
      else
        slots.push_back(run(c.vertex()));
    }
    const ColouredTree& guest = *guests[static_cast<std::size_t>(host.number) - 1];
    if (guest.is_edge()) return std::move(slots.front());
    int offset = offsets[static_cast<std::size_t>(host.number) - 1];
    return Child(graft(guest.root(), slots, offset));
  }

  Vertex graft(const Vertex& gv, const std::vector<Child>& slots, int offset) const {
    Vertex out;
    out.number = gv.number + offset;
    out.colour = gv.colour;
    out.children.reserve(gv.children.size());
    for (const Child& c : gv.children) {
      if (c.is_leaf())
        out.children.push_back(slots[static_cast<std::size_t>(c.leaf().number) - 1]);
      else
        out.children.push_back(Child(graft(c.vertex(), slots, offset)));
    }
    return out;
  }
};

}  // namespace detail

// The composition product: simultaneous substitution of args[i-1] at the
// vertex numbered i. Vertices of the result are numbered blockwise
// (args[0] occupies 1..n_1 keeping its order, then args[1], and so on);
// leaves keep the host numbering, relocated through the slot/leaf
// identifications.
inline SCElement sc_compose(const SCElement& x, const std::vector<SCElement>& args) {
  TreeProfiles xp = x.profiles();
  if (args.size() != xp.vertices.size())
    throw DomainError("compose: expected " + std::to_string(xp.vertices.size()) +
                      " arguments, got " + std::to_string(args.size()));
  std::vector<const ColouredTree*> guests;
  std::vector<int> offsets;
  int total = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].colour_set() != x.colour_set())
      throw DomainError("compose: argument " + std::to_string(i + 1) +
                        " uses a different colour set");
    Profile b = args[i].profiles().boundary;
    if (b != xp.vertices[i])
      throw DomainError("compose: argument " + std::to_string(i + 1) + " has boundary " +
                        format_profile(b) + ", vertex expects " +
                        format_profile(xp.vertices[i]));
    guests.push_back(&args[i].tree());
    offsets.push_back(total);
    total += args[i].vertex_count();
  }
  if (x.tree().is_edge()) return x;

  detail::ComposeRec rec{guests, offsets};
  Child grafted = rec.run(x.tree().root());
  if (grafted.is_leaf())
    return SCElement(ColouredTree::edge(grafted.leaf().colour), x.colour_set());
  return SCElement(ColouredTree::node(std::move(grafted.vertex())), x.colour_set());
}

// Partial composition x o_i y: compose with units in every slot but i.
inline SCElement sc_circ(const SCElement& x, int i, const SCElement& y) {
  TreeProfiles xp = x.profiles();
  if (i < 1 || i > static_cast<int>(xp.vertices.size()))
    throw DomainError("circ: index " + std::to_string(i) + " out of range");
  std::vector<SCElement> args;
  args.reserve(xp.vertices.size());
  for (std::size_t j = 0; j < xp.vertices.size(); ++j) {
    if (static_cast<int>(j) + 1 == i)
      args.push_back(y);
    else
      args.push_back(sc_unit(xp.vertices[j], x.colour_set()));
  }
  return sc_compose(x, args);
}

// On single-vertex elements, the permutation j -> planar position of the
// leaf numbered j. These components embed into the symmetric groups;
// composition of elements maps to multiplication in the opposite order.
inline std::optional<Permutation> as_permutation(const SCElement& x) {
  if (x.vertex_count() != 1) return std::nullopt;
  std::vector<std::int64_t> planar = detail::planar_leaf_numbers(x.tree());
  std::vector<int> images(planar.size());
  for (std::size_t pos = 0; pos < planar.size(); ++pos) {
    std::int64_t leaf = planar[pos];
    if (leaf < 1 || leaf > static_cast<std::int64_t>(planar.size())) return std::nullopt;
    images[static_cast<std::size_t>(leaf) - 1] = static_cast<int>(pos) + 1;
  }
  return Permutation(std::move(images));
}

// The full finite component: every element with the given vertex
// profiles and boundary, in canonical order.
inline std::vector<SCElement> sc_component(const std::set<Colour>& colours,
                                           const std::vector<Profile>& vertex_profiles,
                                           const Profile& boundary) {
  std::vector<SCElement> out;
  for (ColouredTree& t : enumerate_trees(colours, vertex_profiles, boundary))
    out.push_back(SCElement(std::move(t), colours));
  return out;
}

}  // namespace operads
