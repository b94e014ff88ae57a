#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treedim/branch_trie.hpp"
#include "treedim/leaf_set.hpp"
#include "treedim/node.hpp"

namespace treedim {

// Which structure an embedding must preserve.
//   kPlain   - the ancestor relation (both directions)
//   kMeeted  - ancestor relation and meets
//   kLeveled - ancestor relation, meets, and the equal-length relation
enum class EmbeddingKind { kPlain, kMeeted, kLeveled };

std::string_view to_string(EmbeddingKind kind);
EmbeddingKind parse_embedding_kind(std::string_view text);

// The complete ell-ary tree of height d, nodes in canonical order.
class PatternTree {
 public:
  PatternTree(int height, int ell);

  int height() const { return height_; }
  int ell() const { return ell_; }
  std::size_t size() const { return size_; }

  int depth(std::size_t i) const { return depth_[i]; }
  std::size_t parent(std::size_t i) const { return (i - 1) / static_cast<std::size_t>(ell_); }
  std::size_t first_child(std::size_t i) const { return i * static_cast<std::size_t>(ell_) + 1; }
  std::size_t meet(std::size_t i, std::size_t j) const;
  bool precedes(std::size_t i, std::size_t j) const;
  Node node(std::size_t i) const;
  std::size_t index_of(const Node& a) const;

 private:
  int height_;
  int ell_;
  std::size_t size_;
  std::vector<std::size_t> level_begin_;
  std::vector<int> depth_;
  // Dense meet table, only for patterns of moderate size.
  std::vector<std::uint32_t> meet_table_;
};

// A map from the nodes of a pattern tree to nodes of a target trie. Entry i
// is the image of pattern node i (canonical order).
struct EmbeddingWitness {
  int height = 0;
  int ell = 2;
  std::vector<Node> image;

  // (pattern node, image) pairs in canonical pattern order.
  std::vector<std::pair<Node, Node>> pairs() const;
};

// Checks the witness against the conditions required by `kind`, including
// injectivity and both directions of each "if and only if". Throws
// std::invalid_argument if the witness does not cover the complete pattern
// tree or maps outside `target`.
bool is_embedding(const EmbeddingWitness& witness, EmbeddingKind kind, const BranchTrie& target);

// Backtracking search for an embedding of the height-d ell-ary pattern tree.
// Deterministic: pattern nodes are assigned breadth-first and target
// candidates are tried in canonical order.
std::optional<EmbeddingWitness> embed_exists(int d, int ell, EmbeddingKind kind, const BranchTrie& target);

// Largest d with embed_exists, or -1 for an empty set.
int brute_dimension(const LeafSet& leaves, int ell, EmbeddingKind kind);
// Same, also returning the witness for the maximal d.
std::pair<int, std::optional<EmbeddingWitness>> brute_dimension_with_witness(const LeafSet& leaves, int ell,
                                                                            EmbeddingKind kind);

}  // namespace treedim
