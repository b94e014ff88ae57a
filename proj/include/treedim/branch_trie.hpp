#pragma once

#include <cstdint>
#include <vector>

#include "treedim/leaf_set.hpp"
#include "treedim/node.hpp"

namespace treedim {

// The branch closure of a leaf set as an explicit rooted tree.
//
// Node ids follow the canonical node order (shorter first, then lexicographic),
// so the root is id 0, every parent has a smaller id than its children, and the
// ids of one level are contiguous.
class BranchTrie {
 public:
  using Id = std::int32_t;
  static constexpr Id kNone = -1;

  explicit BranchTrie(const LeafSet& leaves);

  int arity() const { return arity_; }
  int height() const { return height_; }
  std::size_t size() const { return depth_.size(); }
  bool empty() const { return depth_.empty(); }
  Id root() const { return empty() ? kNone : 0; }

  int depth(Id v) const { return depth_[idx(v)]; }
  Id parent(Id v) const { return parent_[idx(v)]; }
  Id child(Id v, int digit) const { return children_[idx(v) * static_cast<std::size_t>(arity_) + static_cast<std::size_t>(digit)]; }
  int child_count(Id v) const { return child_count_[idx(v)]; }
  bool is_leaf(Id v) const { return depth(v) == height_; }
  // Height of the subtree below v (0 for a leaf).
  int subtree_height(Id v) const { return subtree_height_[idx(v)]; }
  // Ids at depth k form the half-open range [level_begin(k), level_begin(k + 1)).
  Id level_begin(int k) const { return level_begin_[static_cast<std::size_t>(k)]; }

  Node node(Id v) const;
  Id find(const Node& a) const;
  std::vector<Node> nodes() const;

  // u is a (non-strict) prefix of v.
  bool is_prefix(Id u, Id v) const;
  Id ancestor_at(Id v, int k) const;
  Id meet(Id u, Id v) const;

 private:
  static std::size_t idx(Id v) { return static_cast<std::size_t>(v); }

  int arity_;
  int height_;
  std::vector<int> depth_;
  std::vector<Id> parent_;
  std::vector<std::uint64_t> prefix_code_;
  std::vector<Id> children_;
  std::vector<int> child_count_;
  std::vector<int> subtree_height_;
  std::vector<Id> level_begin_;
};

// Convenience: the trie of a leaf set.
inline BranchTrie branch_closure(const LeafSet& leaves) { return BranchTrie(leaves); }

}  // namespace treedim
