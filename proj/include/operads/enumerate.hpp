#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "operads/tree.hpp"

namespace operads {

namespace detail {

// Exhaustive generation of the subtrees that use exactly the vertex
// numbers in `vmask` and the leaf numbers in `lmask`, with the given
// root colour. Vertex i must carry profiles[i-1]; leaf j must carry
// boundary colour j. Masks keep the subset bookkeeping cheap; sizes are
// expected to stay small (this is a combinatorial oracle, not a bulk
// engine).
class TreeEnumerator {
 public:
  TreeEnumerator(const std::vector<Profile>& profiles, const std::vector<Colour>& leaf_colours)
      : profiles_(profiles), leaf_colours_(leaf_colours) {}

  std::vector<Child> subtrees(std::uint64_t vmask, std::uint64_t lmask, const Colour& root) {
    std::vector<Child> out;
    if (vmask == 0) {
      // A vertexless subtree is a single leaf of the right colour.
      if (popcount(lmask) == 1) {
        int j = lowest(lmask);
        if (leaf_colours_[static_cast<std::size_t>(j) - 1] == root)
          out.push_back(Child(Leaf{j, root}));
      }
      return out;
    }
    for (int i = 1; i <= static_cast<int>(profiles_.size()); ++i) {
      std::uint64_t bit = std::uint64_t{1} << (i - 1);
      if (!(vmask & bit)) continue;
      const Profile& p = profiles_[static_cast<std::size_t>(i) - 1];
      if (p.output != root) continue;
      Vertex v;
      v.number = i;
      v.colour = p.output;
      std::vector<Vertex> partial{std::move(v)};
      distribute(partial, p, 0, vmask & ~bit, lmask, out);
    }
    return out;
  }

  // Leaves of a subtree with k vertices and s total input slots: s - (k-1).
  bool leaf_count_feasible(std::uint64_t vmask, std::uint64_t lmask) const {
    int k = popcount(vmask);
    if (k == 0) return popcount(lmask) == 1;
    int slots = 0;
    for (int i = 1; i <= static_cast<int>(profiles_.size()); ++i)
      if (vmask & (std::uint64_t{1} << (i - 1)))
        slots += profiles_[static_cast<std::size_t>(i) - 1].arity();
    return popcount(lmask) == slots - (k - 1);
  }

 private:
  // Extends every vertex in `partial` by all ways of filling slot
  // `slot` (0-based) from the unused vertices and leaves.
  void distribute(std::vector<Vertex>& partial, const Profile& p, int slot,
                  std::uint64_t vfree, std::uint64_t lfree, std::vector<Child>& out) {
    if (slot == p.arity()) {
      if (vfree == 0 && lfree == 0)
        for (Vertex& v : partial) out.push_back(Child(std::move(v)));
      return;
    }
    const Colour& want = p.inputs[static_cast<std::size_t>(slot)];
    // Iterate all submasks of vfree and lfree for this slot.
    std::uint64_t vsub = vfree;
    for (;;) {
      std::uint64_t lsub = lfree;
      for (;;) {
        bool last_slot = slot + 1 == p.arity();
        // The final slot must consume everything that remains.
        if ((!last_slot || (vsub == vfree && lsub == lfree)) &&
            leaf_count_feasible(vsub, lsub)) {
          std::vector<Child> parts = subtrees(vsub, lsub, want);
          if (!parts.empty()) {
            std::vector<Vertex> extended;
            extended.reserve(partial.size() * parts.size());
            for (const Vertex& v : partial)
              for (const Child& c : parts) {
                Vertex w = v;
                w.children.push_back(c);
                extended.push_back(std::move(w));
              }
            distribute(extended, p, slot + 1, vfree & ~vsub, lfree & ~lsub, out);
          }
        }
        if (lsub == 0) break;
        lsub = (lsub - 1) & lfree;
      }
      if (vsub == 0) break;
      vsub = (vsub - 1) & vfree;
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

  const std::vector<Profile>& profiles_;
  const std::vector<Colour>& leaf_colours_;
};

}  // namespace detail

// All valid trees whose vertex numbered i has profile vertex_profiles[i-1]
// and whose boundary is `boundary`, sorted by canonical serialization.
// With no vertex profiles the answer is the edge tree when the boundary
// is ((c);c), and empty otherwise.
inline std::vector<ColouredTree> enumerate_trees(const std::set<Colour>& colours,
                                                 const std::vector<Profile>& vertex_profiles,
                                                 const Profile& boundary) {
  std::vector<ColouredTree> out;
  auto known = [&](const Colour& c) { return colours.empty() || colours.count(c) > 0; };
  for (const Profile& p : vertex_profiles) {
    if (!known(p.output)) return out;
    for (const Colour& c : p.inputs)
      if (!known(c)) return out;
  }
  if (!known(boundary.output)) return out;
  for (const Colour& c : boundary.inputs)
    if (!known(c)) return out;

  int n = static_cast<int>(vertex_profiles.size());
  int m = boundary.arity();
  if (n == 0) {
    if (m == 1 && boundary.inputs[0] == boundary.output)
      out.push_back(ColouredTree::edge(boundary.output));
    return out;
  }
  if (n > 62 || m > 62) throw DomainError("enumerate_trees: input too large");

  // Edge balance: total input slots = inner edges + leaves = (n-1) + m.
  int slots = 0;
  for (const Profile& p : vertex_profiles) slots += p.arity();
  if (slots != n - 1 + m) return out;

  detail::TreeEnumerator en(vertex_profiles, boundary.inputs);
  std::uint64_t vall = n == 62 ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << n) - 1;
  std::uint64_t lall = m == 0 ? 0 : (m == 62 ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << m) - 1);
  for (Child& c : en.subtrees(vall, lall, boundary.output)) {
    if (c.is_leaf()) continue;  // cannot happen with n >= 1
    out.push_back(ColouredTree::node(std::move(c.vertex())));
  }
  std::sort(out.begin(), out.end(),
            [](const ColouredTree& a, const ColouredTree& b) { return tree_less(a, b); });
  return out;
}

}  // namespace operads
