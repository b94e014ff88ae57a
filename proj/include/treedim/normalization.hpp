#pragma once

#include <vector>

#include "treedim/leaf_set.hpp"
#include "treedim/node.hpp"

namespace treedim {

// Order in which nodes of one length are visited. Longer nodes always come
// before shorter ones.
enum class TieBreak { kLexicographic, kReverseLexicographic };

struct AppliedSwap {
  Node prefix;
  int k = 0;
};

struct NormalizationTrace {
  LeafSet initial;
  LeafSet final;
  std::vector<AppliedSwap> swaps;
  int final_norm = -1;

  // Re-applies the swaps to `initial`; true when that reproduces `final`.
  bool replays() const;
};

// Binary normalization: visit every internal node a, deepest first, and swap
// the two subtrees below a whenever that strictly lowers the norm of the
// leaves below a.
NormalizationTrace normalize_binary(const LeafSet& leaves, TieBreak order = TieBreak::kLexicographic);

// ell-ary normalization: at every internal node a, deepest first, bubble-sort
// the children of a so that their norms relative to the child node decrease
// from digit 0 upward.
NormalizationTrace normalize_mary(const LeafSet& leaves, int ell, TieBreak order = TieBreak::kLexicographic);

// All nodes of length < n in the visiting order described above.
std::vector<Node> internal_node_order(int arity, int height, TieBreak order);

}  // namespace treedim
