#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "operads/types.hpp"

namespace operads {

// A bijection of {1,...,n}. One-based throughout, matching the usual
// one-line notation: Permutation({2,1,3}) maps 1->2, 2->1, 3->3.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
        throw DomainError("not a permutation of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }

  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(im));
  }

  // (a * b)(i) = a(b(i)): apply b first, then a.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("permutation size mismatch");
    std::vector<int> im(a.images_.size());
    for (int i = 1; i <= a.size(); ++i) im[static_cast<std::size_t>(i) - 1] = a(b(i));
    return Permutation(std::move(im));
  }

  const std::vector<int>& images() const { return images_; }

  std::string str() const {
    std::string out = "[";
    for (int i = 1; i <= size(); ++i) {
      if (i > 1) out += ',';
      out += std::to_string((*this)(i));
    }
    return out + "]";
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// All of Sigma_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

// The permuted signature alpha . p = (c_{alpha(1)},...,c_{alpha(n)};c),
// the target component of the right action on a collection.
inline Profile permute_profile(const Profile& p, const Permutation& alpha) {
  if (alpha.size() != p.arity()) throw DomainError("permutation/profile arity mismatch");
  Profile out;
  out.output = p.output;
  out.inputs.reserve(p.inputs.size());
  for (int i = 1; i <= alpha.size(); ++i)
    out.inputs.push_back(p.inputs[static_cast<std::size_t>(alpha(i)) - 1]);
  return out;
}

// Argument reindexing matching the action on multivariable functions:
// (alpha* f)(y_1,...,y_n) = f applied to the tuple this returns,
// namely x_j = y_{alpha^{-1}(j)}.
template <typename T>
std::vector<T> permute_arguments(const std::vector<T>& ys, const Permutation& alpha) {
  if (static_cast<int>(ys.size()) != alpha.size())
    throw DomainError("permutation/tuple size mismatch");
  Permutation inv = alpha.inverse();
  std::vector<T> out;
  out.reserve(ys.size());
  for (int j = 1; j <= alpha.size(); ++j)
    out.push_back(ys[static_cast<std::size_t>(inv(j)) - 1]);
  return out;
}

// The block permutation beta in Sigma_{n+m-1} with
//   (alpha* x) o_i y = beta* (x o_{alpha(i)} y)
// for alpha in Sigma_n and y of arity m: slot i is inflated to an
// m-wide block, the other slots follow alpha shifted around it.
inline Permutation inflate_at(const Permutation& alpha, int i, int m) {
  int n = alpha.size();
  if (i < 1 || i > n) throw DomainError("inflate_at: slot out of range");
  std::vector<int> im(static_cast<std::size_t>(n + m - 1));
  auto shifted = [&](int a) { return a < alpha(i) ? a : a + m - 1; };
  for (int r = 1; r <= n + m - 1; ++r) {
    int v;
    if (r < i)
      v = shifted(alpha(r));
    else if (r <= i + m - 1)
      v = alpha(i) + (r - i);
    else
      v = shifted(alpha(r - m + 1));
    im[static_cast<std::size_t>(r) - 1] = v;
  }
  return Permutation(std::move(im));
}

// The permutation of {1,...,n+m-1} acting as delta on the m-block rooted
// at slot i and fixing everything else:
//   x o_i (delta* y) = embed_block(n, i, delta)* (x o_i y).
inline Permutation embed_block(int n, int i, const Permutation& delta) {
  int m = delta.size();
  if (i < 1 || i > n) throw DomainError("embed_block: slot out of range");
  std::vector<int> im(static_cast<std::size_t>(n + m - 1));
  for (int r = 1; r <= n + m - 1; ++r) {
    int v = r;
    if (r >= i && r <= i + m - 1) v = i - 1 + delta(r - i + 1);
    im[static_cast<std::size_t>(r) - 1] = v;
  }
  return Permutation(std::move(im));
}

// The block permutation of {1,...,sum(sizes)} that reorders consecutive
// blocks of the given sizes by alpha, keeping each block's internal
// order: block at position i of the result is block alpha(i).
inline Permutation block_permutation(const Permutation& alpha, const std::vector<int>& sizes) {
  int n = alpha.size();
  if (static_cast<int>(sizes.size()) != n)
    throw DomainError("block_permutation: size list mismatch");
  std::vector<int> offset(sizes.size() + 1, 0);
  for (int j = 0; j < n; ++j) offset[static_cast<std::size_t>(j) + 1] = offset[static_cast<std::size_t>(j)] + sizes[static_cast<std::size_t>(j)];
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(offset[sizes.size()]));
  for (int i = 1; i <= n; ++i) {
    int src = alpha(i);
    for (int t = 1; t <= sizes[static_cast<std::size_t>(src) - 1]; ++t)
      im.push_back(offset[static_cast<std::size_t>(src) - 1] + t);
  }
  return Permutation(std::move(im));
}

}  // namespace operads
