#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treedim/node.hpp"

namespace treedim {

// Largest height for which a binary leaf set has a 64-bit mask view.
inline constexpr int kMaxMaskHeight = 6;

// A set of leaves (nodes of length exactly n) of the m-ary tree of height n.
//
// Leaves are stored as their base-m codes, most significant digit first, so
// ascending code order is the lexicographic order of the leaves. Values are
// immutable; "modifiers" return new sets.
class LeafSet {
 public:
  LeafSet(int arity, int height);
  // Duplicates collapse.
  LeafSet(int arity, int height, const std::vector<Node>& leaves);

  static LeafSet from_codes(int arity, int height, std::vector<std::uint64_t> codes);
  // Binary only: bit i of `mask` selects the leaf with code i.
  static LeafSet from_mask(int height, std::uint64_t mask);
  static LeafSet full(int arity, int height);

  int arity() const { return arity_; }
  int height() const { return height_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  // m^n, the number of possible leaves.
  std::uint64_t capacity() const { return capacity_; }

  std::span<const std::uint64_t> codes() const { return codes_; }
  std::vector<Node> leaves() const;

  Node leaf(std::uint64_t code) const;
  std::uint64_t code_of(const Node& leaf) const;

  bool contains(const Node& leaf) const;
  bool contains_code(std::uint64_t code) const;
  LeafSet with_code(std::uint64_t code) const;

  // The 2^n-bit mask view. Requires arity 2 and height <= kMaxMaskHeight.
  std::uint64_t mask() const;
  bool has_mask_view() const { return arity_ == 2 && height_ <= kMaxMaskHeight; }

  friend bool operator==(const LeafSet&, const LeafSet&) = default;

 private:
  LeafSet(int arity, int height, std::vector<std::uint64_t> sorted_codes, bool);

  int arity_;
  int height_;
  std::uint64_t capacity_;
  std::vector<std::uint64_t> codes_;
};

// m^n with an overflow check (throws when the result exceeds 2^62).
std::uint64_t leaf_capacity(int arity, int height);

// Every prefix of every member, in canonical order. Empty for an empty set.
std::vector<Node> branch_nodes(const LeafSet& leaves);

// max over members of norm_ell, or -1 for an empty set.
int set_norm(std::span<const Node> nodes, int ell);
int set_norm(const LeafSet& leaves, int ell);

// Members having `a` as a (non-strict) prefix.
std::vector<Node> restrict(std::span<const Node> nodes, const Node& a);
LeafSet restrict(const LeafSet& leaves, const Node& a);

// Image of the set under the swap automorphism (a, k).
LeafSet apply_swap(const LeafSet& leaves, const Node& a, int k);

// The two height-(n-1) sets used in the induction on height: all length-(n-1)
// prefixes of B, and those prefixes a with at least ell leaves of B below a.
struct SplitProjection {
  LeafSet prefixes;
  LeafSet branching;
};
SplitProjection split_projection(const LeafSet& leaves, int ell);

}  // namespace treedim
