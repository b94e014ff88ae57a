#include "treedim/branch_trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedim {

BranchTrie::BranchTrie(const LeafSet& leaves) : arity_(leaves.arity()), height_(leaves.height()) {
  level_begin_.assign(static_cast<std::size_t>(height_) + 2, 0);
  if (leaves.empty()) return;

  const auto m = static_cast<std::uint64_t>(arity_);
  // levels[k] holds the sorted distinct length-k prefixes, as codes.
  std::vector<std::vector<std::uint64_t>> levels(static_cast<std::size_t>(height_) + 1);
  levels[static_cast<std::size_t>(height_)].assign(leaves.codes().begin(), leaves.codes().end());
  for (int k = height_; k > 0; --k) {
    auto& below = levels[static_cast<std::size_t>(k)];
    auto& above = levels[static_cast<std::size_t>(k) - 1];
    for (std::uint64_t c : below) {
      if (above.empty() || above.back() != c / m) above.push_back(c / m);
    }
  }

  for (int k = 0; k <= height_; ++k) {
    level_begin_[static_cast<std::size_t>(k)] = static_cast<Id>(depth_.size());
    const auto& level = levels[static_cast<std::size_t>(k)];
    const auto& prev = k > 0 ? levels[static_cast<std::size_t>(k) - 1] : level;
    std::size_t p = 0;
    for (std::uint64_t c : level) {
      Id parent = kNone;
      if (k > 0) {
        while (prev[p] != c / m) ++p;
        parent = level_begin_[static_cast<std::size_t>(k) - 1] + static_cast<Id>(p);
      }
      depth_.push_back(k);
      parent_.push_back(parent);
      prefix_code_.push_back(c);
    }
  }
  level_begin_[static_cast<std::size_t>(height_) + 1] = static_cast<Id>(depth_.size());

  children_.assign(depth_.size() * static_cast<std::size_t>(arity_), kNone);
  child_count_.assign(depth_.size(), 0);
  subtree_height_.assign(depth_.size(), 0);
  for (Id v = static_cast<Id>(depth_.size()) - 1; v > 0; --v) {
    const Id up = parent_[idx(v)];
    children_[idx(up) * static_cast<std::size_t>(arity_) + prefix_code_[idx(v)] % m] = v;
    ++child_count_[idx(up)];
    subtree_height_[idx(up)] = std::max(subtree_height_[idx(up)], subtree_height_[idx(v)] + 1);
  }
}

Node BranchTrie::node(Id v) const {
  std::vector<Digit> digits(static_cast<std::size_t>(depth(v)));
  std::uint64_t code = prefix_code_[idx(v)];
  for (std::size_t i = digits.size(); i > 0; --i) {
    digits[i - 1] = static_cast<Digit>(code % static_cast<std::uint64_t>(arity_));
    code /= static_cast<std::uint64_t>(arity_);
  }
  return Node(arity_, std::move(digits));
}

BranchTrie::Id BranchTrie::find(const Node& a) const {
  if (empty() || a.arity() != arity_ || a.size() > static_cast<std::size_t>(height_)) return kNone;
  Id v = 0;
  for (Digit d : a.digits()) {
    v = child(v, d);
    if (v == kNone) return kNone;
  }
  return v;
}

std::vector<Node> BranchTrie::nodes() const {
  std::vector<Node> out;
  out.reserve(size());
  for (Id v = 0; v < static_cast<Id>(size()); ++v) out.push_back(node(v));
  return out;
}

BranchTrie::Id BranchTrie::ancestor_at(Id v, int k) const {
  if (k > depth(v) || k < 0) return kNone;
  while (depth(v) > k) v = parent(v);
  return v;
}

bool BranchTrie::is_prefix(Id u, Id v) const {
  if (depth(u) > depth(v)) return false;
  std::uint64_t code = prefix_code_[idx(v)];
  for (int k = depth(v); k > depth(u); --k) code /= static_cast<std::uint64_t>(arity_);
  return code == prefix_code_[idx(u)];
}

BranchTrie::Id BranchTrie::meet(Id u, Id v) const {
  while (depth(u) > depth(v)) u = parent(u);
  while (depth(v) > depth(u)) v = parent(v);
  while (u != v) {
    u = parent(u);
    v = parent(v);
  }
  return u;
}

}  // namespace treedim
