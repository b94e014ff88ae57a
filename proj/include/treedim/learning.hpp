#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "treedim/leaf_set.hpp"

namespace treedim {

// Subsets of the universe are bitmasks: bit i is the i-th universe element.
using Subset = std::uint64_t;

inline constexpr std::size_t kMaxUniverse = 64;

// A finite universe with a fixed element order, and a family of its subsets.
class SetFamily {
 public:
  SetFamily(std::vector<std::string> universe, std::vector<Subset> members);

  // Universe named x0, x1, ...
  static SetFamily over(std::size_t universe_size, std::vector<Subset> members);
  static SetFamily powerset(std::vector<std::string> universe);

  const std::vector<std::string>& universe() const { return universe_; }
  std::size_t universe_size() const { return universe_.size(); }
  // Sorted, no duplicates.
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Subset universe_mask() const;

  // Throws std::invalid_argument for unknown names.
  std::size_t index_of(const std::string& element) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<Subset> members_;
};

// A labeling of every binary node of length < n by a universe element index.
// labels[i] belongs to the i-th node in canonical order (root first).
struct Labeling {
  int height = 0;
  std::vector<std::size_t> labels;

  std::size_t label(const Node& s) const;
};

// Number of distinct traces F & A over the family.
std::size_t trace_count(const SetFamily& family, Subset a);

bool shatters(const SetFamily& family, Subset a);

// Largest shattered size, or -1 for the empty family.
int vc_dim(const SetFamily& family);

// Image of the family under the characteristic map of the tuple (repetitions
// allowed): leaf digit i is 1 iff tuple[i] is in the member.
LeafSet chi_tuple(const SetFamily& family, std::span<const std::size_t> tuple);

// Image of the family under the labeling's characteristic map: from the root,
// step to digit 1 exactly when the current node's label is in the member.
LeafSet chi_labeling(const SetFamily& family, const Labeling& labeling);

// Littlestone dimension via the mistake-tree recursion; -1 for the empty family.
int littlestone_dim(const SetFamily& family);

}  // namespace treedim
