#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treedim {

using Digit = std::uint8_t;

// Largest supported arity. Digits are rendered as single characters 0-9.
inline constexpr int kMaxArity = 10;

// A finite digit sequence over {0, ..., arity-1}: one node of the m-ary tree.
// The empty sequence is the root.
//
// Nodes are totally ordered by length first and lexicographically second;
// that order is the canonical iteration order used throughout the library.
class Node {
 public:
  explicit Node(int arity = 2);
  Node(int arity, std::vector<Digit> digits);

  // Parses a digit string such as "0212". "" and "-" both denote the root.
  static Node parse(std::string_view text, int arity);

  int arity() const { return arity_; }
  std::size_t size() const { return digits_.size(); }
  bool is_root() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  std::span<const Digit> digits() const { return digits_; }

  Node child(int digit) const;
  Node prefix(std::size_t length) const;

  // Non-strict: a.is_prefix_of(a) holds.
  bool is_prefix_of(const Node& other) const;
  // The ancestor relation: a strict initial segment.
  bool precedes(const Node& other) const;

  // Digit string; the root renders as "".
  std::string str() const;

  friend bool operator==(const Node& a, const Node& b) = default;
  friend std::strong_ordering operator<=>(const Node& a, const Node& b);

 private:
  int arity_;
  std::vector<Digit> digits_;
};

// Longest common prefix.
Node meet(const Node& a, const Node& b);

// Digit sum of a binary node. Rejects arity > 2.
int norm(const Node& a);

// Number of positions whose digit is at least ell - 1. Requires 2 <= ell <= arity.
int norm_ell(const Node& a, int ell);

// The swap automorphism determined by (a, k): exchanges the subtrees rooted at
// a^k and a^(k+1) and fixes every other node. For binary trees k is 0.
Node swap(const Node& a, int k, const Node& x);

void check_ell(int ell, int arity);

}  // namespace treedim
