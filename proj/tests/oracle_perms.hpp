#pragma once

// Independent oracle for block substitution of permutations. A
// permutation pi stands for the operation multiplying its arguments in
// the order pi(1),...,pi(n). Instead of index arithmetic, the oracle
// evaluates that operation in the free monoid on tagged symbols and
// reads the composite ordering back off the resulting word.

#include <string>
#include <vector>

#include "operads/permutation.hpp"

namespace oracle {

using operads::Permutation;

// The word produced by applying pi to the given argument words.
inline std::string apply_in_order(const Permutation& pi, const std::vector<std::string>& args) {
  std::string out;
  for (int t = 1; t <= pi.size(); ++t) out += args[static_cast<std::size_t>(pi(t)) - 1];
  return out;
}

inline Permutation block_substitute(const Permutation& x, int i, const Permutation& y) {
  int n = x.size();
  int m = y.size();
  // symbols "<k>|" for the n+m-1 composite arguments
  std::vector<std::string> symbols;
  for (int k = 1; k <= n + m - 1; ++k) symbols.push_back(std::to_string(k) + "|");
  // inner word consumes arguments i..i+m-1
  std::vector<std::string> inner_args(symbols.begin() + (i - 1), symbols.begin() + (i - 1 + m));
  std::string inner = apply_in_order(y, inner_args);
  // outer word sees args 1..i-1, the inner word, args i+m..n+m-1
  std::vector<std::string> outer_args(symbols.begin(), symbols.begin() + (i - 1));
  outer_args.push_back(inner);
  for (int k = i + m; k <= n + m - 1; ++k) outer_args.push_back(symbols[static_cast<std::size_t>(k) - 1]);
  std::string word = apply_in_order(x, outer_args);
  // parse the word back into the argument order
  std::vector<int> images;
  std::string digits;
  for (char ch : word) {
    if (ch == '|') {
      images.push_back(std::stoi(digits));
      digits.clear();
    } else {
      digits += ch;
    }
  }
  return Permutation(std::move(images));
}

}  // namespace oracle
