#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "operads/permutation.hpp"
#include "operads/types.hpp"

namespace operads {

// Planar rooted coloured trees with numbered vertices and numbered
// leaves. Vertex numbers encode the bijection sigma: {1..n} -> V(T),
// leaf numbers the bijection tau: {1..m} -> in(T). The planar order of
// each vertex's children is the linear order of its incoming edges.
//
// Structural equality is equality of equivalence classes: sigma, tau
// and the planar order leave no nontrivial isomorphisms, so the literal
// representation is already canonical.

struct Leaf {
  std::int64_t number = 0;
  Colour colour;

  friend bool operator==(const Leaf&, const Leaf&) = default;
};

class Child;

struct Vertex {
  std::int64_t number = 0;
  Colour colour;  // colour of the outgoing edge
  std::vector<Child> children;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class Child {
 public:
  Child(Leaf l) : node_(std::move(l)) {}
  Child(Vertex v) : node_(std::move(v)) {}

  bool is_leaf() const { return std::holds_alternative<Leaf>(node_); }
  const Leaf& leaf() const { return std::get<Leaf>(node_); }
  const Vertex& vertex() const { return std::get<Vertex>(node_); }
  Leaf& leaf() { return std::get<Leaf>(node_); }
  Vertex& vertex() { return std::get<Vertex>(node_); }

  friend bool operator==(const Child&, const Child&) = default;

 private:
  std::variant<Leaf, Vertex> node_;
};

// Either the vertexless single edge (one input which is also the root)
// or a tree rooted at a Vertex. The edge tree is kept as its own variant
// rather than a degenerate vertex: it is the unique inhabitant of the
// (;(c;c)) components and the source of unit elements.
class ColouredTree {
 public:
  static ColouredTree edge(Colour c) { return ColouredTree(std::move(c)); }
  static ColouredTree node(Vertex root) { return ColouredTree(std::move(root)); }

  bool is_edge() const { return std::holds_alternative<Colour>(data_); }
  const Colour& edge_colour() const { return std::get<Colour>(data_); }
  const Vertex& root() const { return std::get<Vertex>(data_); }

  const Colour& root_colour() const { return is_edge() ? edge_colour() : root().colour; }

  int vertex_count() const;
  int leaf_count() const;

  friend bool operator==(const ColouredTree&, const ColouredTree&) = default;

 private:
  explicit ColouredTree(Colour c) : data_(std::move(c)) {}
  explicit ColouredTree(Vertex v) : data_(std::move(v)) {}

  std::variant<Colour, Vertex> data_;
};

namespace detail {

template <typename F>
void for_each_vertex(const Vertex& v, F&& fn) {
  fn(v);
  for (const Child& c : v.children)
    if (!c.is_leaf()) for_each_vertex(c.vertex(), fn);
}

template <typename F>
void for_each_leaf(const Vertex& v, F&& fn) {
  for (const Child& c : v.children) {
    if (c.is_leaf())
      fn(c.leaf());
    else
      for_each_leaf(c.vertex(), fn);
  }
}

}  // namespace detail

inline int ColouredTree::vertex_count() const {
  if (is_edge()) return 0;
  int n = 0;
  detail::for_each_vertex(root(), [&](const Vertex&) { ++n; });
  return n;
}

inline int ColouredTree::leaf_count() const {
  if (is_edge()) return 1;
  int m = 0;
  detail::for_each_leaf(root(), [&](const Leaf&) { ++m; });
  return m;
}

// ---------------------------------------------------------------------------
// Serialization. Canonical text, grammar:
//   tree  := "e:" colour | node
//   node  := "v" INT ":" colour "(" [child ("," child)*] ")"
//   child := node | "l" INT ":" colour
// Nullary vertices keep their parentheses ("v1:c()") so they cannot be
// confused with leaves.

namespace detail {

inline void serialize_child(const Child& c, std::string& out);

inline void serialize_vertex(const Vertex& v, std::string& out) {
  out += 'v';
  out += std::to_string(v.number);
  out += ':';
  out += v.colour.name;
  out += '(';
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    if (i) out += ',';
    serialize_child(v.children[i], out);
  }
  out += ')';
}

inline void serialize_child(const Child& c, std::string& out) {
  if (c.is_leaf()) {
    out += 'l';
    out += std::to_string(c.leaf().number);
    out += ':';
    out += c.leaf().colour.name;
  } else {
    serialize_vertex(c.vertex(), out);
  }
}

}  // namespace detail

inline std::string serialize_tree(const ColouredTree& t) {
  std::string out;
  if (t.is_edge()) {
    out = "e:" + t.edge_colour().name;
  } else {
    detail::serialize_vertex(t.root(), out);
  }
  return out;
}

// Total order used wherever trees are listed: lexicographic on the
// canonical serialization.
inline bool tree_less(const ColouredTree& a, const ColouredTree& b) {
  return serialize_tree(a) < serialize_tree(b);
}

// ---------------------------------------------------------------------------
// Validation

// Lists every violated invariant; empty iff t is a valid planar rooted
// coloured tree over `colours` with both numbering bijections intact.
inline std::vector<std::string> validate(const ColouredTree& t, const std::set<Colour>& colours) {
  std::vector<std::string> report;
  auto check_colour = [&](const Colour& c) {
    if (!is_colour_token(c.name))
      report.push_back("malformed colour token '" + c.name + "'");
    else if (!colours.empty() && !colours.count(c))
      report.push_back("unknown colour '" + c.name + "'");
  };

  if (t.is_edge()) {
    check_colour(t.edge_colour());
    return report;
  }

  std::vector<std::int64_t> vertex_numbers;
  std::vector<std::int64_t> leaf_numbers;
  detail::for_each_vertex(t.root(), [&](const Vertex& v) {
    vertex_numbers.push_back(v.number);
    check_colour(v.colour);
  });
  detail::for_each_leaf(t.root(), [&](const Leaf& l) {
    leaf_numbers.push_back(l.number);
    check_colour(l.colour);
  });

  auto check_numbering = [&](std::vector<std::int64_t> nums, const std::string& what) {
    std::sort(nums.begin(), nums.end());
    bool contiguous = true;
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (i > 0 && nums[i] == nums[i - 1]) {
        report.push_back("duplicate " + what + " number " + std::to_string(nums[i]));
        contiguous = false;
      } else if (nums[i] != static_cast<std::int64_t>(i) + 1) {
        contiguous = false;
      }
    }
    if (contiguous) return;
    bool dup = false;
    for (std::size_t i = 1; i < nums.size(); ++i) dup |= nums[i] == nums[i - 1];
    if (!dup)
      report.push_back(what + " numbering not 1.." + std::to_string(nums.size()));
  };
  check_numbering(vertex_numbers, "vertex");
  check_numbering(leaf_numbers, "leaf");
  return report;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline Child parse_child(TokenScanner& sc);

inline Vertex parse_vertex(TokenScanner& sc) {
  sc.expect('v');
  Vertex v;
  v.number = sc.integer();
  sc.expect(':');
  v.colour = Colour(sc.word());
  sc.expect('(');
  if (!sc.accept(')')) {
    for (;;) {
      v.children.push_back(parse_child(sc));
      if (sc.accept(',')) continue;
      sc.expect(')');
      break;
    }
  }
  return v;
}

inline Child parse_child(TokenScanner& sc) {
  if (sc.peek() == 'v') return Child(parse_vertex(sc));
  sc.expect('l');
  Leaf l;
  l.number = sc.integer();
  sc.expect(':');
  l.colour = Colour(sc.word());
  return Child(std::move(l));
}

}  // namespace detail

// Parses the tree DSL grammar only; numbering and colour invariants are
// not checked.
inline ColouredTree parse_tree_syntax(std::string_view text) {
  detail::TokenScanner sc(text);
  ColouredTree t = [&] {
    if (sc.peek() == 'e') {
      sc.expect('e');
      sc.expect(':');
      return ColouredTree::edge(Colour(sc.word()));
    }
    return ColouredTree::node(detail::parse_vertex(sc));
  }();
  if (!sc.at_end()) throw ParseError("trailing input after tree", sc.position());
  return t;
}

// Parses the tree DSL and enforces all structural invariants. When a
// non-empty colour set is given, colours outside it are rejected too.
inline ColouredTree parse_tree(std::string_view text, const std::set<Colour>& colours = {}) {
  ColouredTree t = parse_tree_syntax(text);
  std::vector<std::string> report = validate(t, colours);
  if (!report.empty()) throw ParseError(report.front());
  return t;
}

// ---------------------------------------------------------------------------
// Profiles

struct TreeProfiles {
  std::vector<Profile> vertices;  // entry i-1 is the profile of the vertex numbered i
  Profile boundary;               // leaf colours in tau order; root colour

  friend bool operator==(const TreeProfiles&, const TreeProfiles&) = default;
};

// The signature data of a valid tree: per-vertex profiles indexed by
// vertex number and the boundary profile. For the edge tree the single
// edge is both the input and the root, so the boundary is ((c);c).
inline TreeProfiles profile_of(const ColouredTree& t) {
  TreeProfiles out;
  if (t.is_edge()) {
    out.boundary = Profile({t.edge_colour()}, t.edge_colour());
    return out;
  }
  out.vertices.resize(static_cast<std::size_t>(t.vertex_count()));
  detail::for_each_vertex(t.root(), [&](const Vertex& v) {
    Profile p;
    p.output = v.colour;
    for (const Child& c : v.children)
      p.inputs.push_back(c.is_leaf() ? c.leaf().colour : c.vertex().colour);
    if (v.number < 1 || v.number > static_cast<std::int64_t>(out.vertices.size()))
      throw DomainError("profile_of: vertex numbering not 1..n");
    out.vertices[static_cast<std::size_t>(v.number) - 1] = std::move(p);
  });
  std::map<std::int64_t, Colour> leaves;
  detail::for_each_leaf(t.root(), [&](const Leaf& l) { leaves[l.number] = l.colour; });
  for (auto& [num, col] : leaves) out.boundary.inputs.push_back(col);
  if (static_cast<int>(leaves.size()) != t.leaf_count())
    throw DomainError("profile_of: leaf numbering not 1..m");
  out.boundary.output = t.root().colour;
  return out;
}

// ---------------------------------------------------------------------------
// Substitution
//
// Replacing the vertex numbered i of a host tree by a guest tree whose
// boundary profile equals that vertex's profile. The j-th input slot of
// the vertex is identified with the guest leaf numbered j (colours
// agree by the profile match). The grafted shape has no canonical
// vertex numbering, so it is returned as a skeleton whose vertices are
// tagged with their origin; leaves carry final (host) numbers.

class SkeletonChild;

struct SkeletonVertex {
  bool from_guest = false;
  std::int64_t origin = 0;  // number within host or guest
  Colour colour;
  std::vector<SkeletonChild> children;
};

class SkeletonChild {
 public:
  SkeletonChild(Leaf l) : node_(std::move(l)) {}
  SkeletonChild(SkeletonVertex v) : node_(std::move(v)) {}

  bool is_leaf() const { return std::holds_alternative<Leaf>(node_); }
  const Leaf& leaf() const { return std::get<Leaf>(node_); }
  const SkeletonVertex& vertex() const { return std::get<SkeletonVertex>(node_); }

 private:
  std::variant<Leaf, SkeletonVertex> node_;
};

struct TreeSkeleton {
  // Edge colour when the graft contracted everything away, else a root vertex.
  std::variant<Colour, SkeletonVertex> root;

  bool is_edge() const { return std::holds_alternative<Colour>(root); }
};

struct SubstitutionResult {
  TreeSkeleton skeleton;
  // absorbed[j-1] = number of the guest leaf identified with the j-th
  // input slot of the replaced vertex.
  std::vector<std::int64_t> absorbed;
};

// Assigns vertex numbers to a skeleton. `assign(from_guest, origin)`
// must produce a fresh number for every vertex.
inline ColouredTree renumber(
    const TreeSkeleton& sk,
    const std::function<std::int64_t(bool, std::int64_t)>& assign) {
  struct Rec {
    const std::function<std::int64_t(bool, std::int64_t)>& assign;
    Vertex run(const SkeletonVertex& sv) const {
      Vertex v;
      v.number = assign(sv.from_guest, sv.origin);
      v.colour = sv.colour;
      for (const SkeletonChild& c : sv.children) {
        if (c.is_leaf())
          v.children.push_back(Child(c.leaf()));
        else
          v.children.push_back(Child(run(c.vertex())));
      }
      return v;
    }
  } rec{assign};
  if (sk.is_edge()) return ColouredTree::edge(std::get<Colour>(sk.root));
  return ColouredTree::node(rec.run(std::get<SkeletonVertex>(sk.root)));
}

namespace detail {

// Positions of a tree's leaves in planar left-to-right order.
inline std::vector<std::int64_t> planar_leaf_numbers(const ColouredTree& t) {
  std::vector<std::int64_t> out;
  if (t.is_edge()) {
    out.push_back(1);
    return out;
  }
  for_each_leaf(t.root(), [&](const Leaf& l) { out.push_back(l.number); });
  return out;
}

// Copies `v` into skeleton form, replacing guest leaves by the supplied
// slot contents: slots[j-1] is grafted where the guest leaf numbered j was.
inline SkeletonVertex guest_to_skeleton(const Vertex& v, const std::vector<SkeletonChild>& slots) {
  SkeletonVertex sv;
  sv.from_guest = true;
  sv.origin = v.number;
  sv.colour = v.colour;
  for (const Child& c : v.children) {
    if (c.is_leaf())
      sv.children.push_back(slots[static_cast<std::size_t>(c.leaf().number) - 1]);
    else
      sv.children.push_back(SkeletonChild(guest_to_skeleton(c.vertex(), slots)));
  }
  return sv;
}

inline SkeletonChild host_to_skeleton(const Vertex& v, std::int64_t target,
                                      const ColouredTree& guest,
                                      std::vector<std::int64_t>& absorbed) {
  std::vector<SkeletonChild> slots;
  slots.reserve(v.children.size());
  for (const Child& c : v.children) {
    if (c.is_leaf())
      slots.push_back(SkeletonChild(c.leaf()));
    else
      slots.push_back(host_to_skeleton(c.vertex(), target, guest, absorbed));
  }
  if (v.number != target) {
    SkeletonVertex sv;
    sv.from_guest = false;
    sv.origin = v.number;
    sv.colour = v.colour;
    sv.children = std::move(slots);
    return SkeletonChild(std::move(sv));
  }
  // This is the vertex being replaced. Record the identification of its
  // input slots with the guest's numbered leaves.
  absorbed = planar_leaf_numbers(guest);
  std::sort(absorbed.begin(), absorbed.end());
  if (guest.is_edge()) return std::move(slots.front());
  return SkeletonChild(guest_to_skeleton(guest.root(), slots));
}

}  // namespace detail

// Grafts `guest` in place of the vertex numbered `target` of `host`.
// Precondition: the vertex profile of `host` at `target` equals the
// boundary profile of `guest`. An edge-only guest is legal only at a
// unary vertex with equal input and output colour, and contracts it.
inline SubstitutionResult substitute_vertex(const ColouredTree& host, std::int64_t target,
                                            const ColouredTree& guest) {
  TreeProfiles hp = profile_of(host);
  if (target < 1 || target > static_cast<std::int64_t>(hp.vertices.size()))
    throw DomainError("substitute_vertex: no vertex numbered " + std::to_string(target));
  const Profile& slot = hp.vertices[static_cast<std::size_t>(target) - 1];
  Profile gb = profile_of(guest).boundary;
  if (slot != gb)
    throw DomainError("substitute_vertex: vertex profile " + format_profile(slot) +
                      " does not match guest boundary " + format_profile(gb));

  SubstitutionResult out;
  SkeletonChild root = detail::host_to_skeleton(host.root(), target, guest, out.absorbed);
  if (root.is_leaf())
    out.skeleton.root = root.leaf().colour;  // everything contracted to an edge
  else
    out.skeleton.root = root.vertex();
  return out;
}

}  // namespace operads
