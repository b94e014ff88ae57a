#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "treedim/learning.hpp"
#include "treedim/leaf_set.hpp"

namespace treedim {

// Malformed input; `line()` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Leaf set files:
//
//   # comment
//   2 3
//   000
//   010
//
// A header "m n", then one leaf per line as a digit string of length n.
// Lines starting with '#' and blank lines are ignored. For n = 0 the single
// possible leaf is written "-". Duplicate leaves are rejected.
LeafSet parse_leaf_set(std::string_view text);
std::string render_leaf_set(const LeafSet& leaves);

// Family files:
//
//   universe 3 x y z
//   000
//   110
//
// A header "universe k" optionally followed by k element names (default
// x0 .. x{k-1}), then one member per line as a k-character bit string whose
// i-th character is 1 when the i-th element belongs to the member. For k = 0
// the empty member is written "-". Duplicate members are rejected.
SetFamily parse_family(std::string_view text);
std::string render_family(const SetFamily& family);

// Labeling files:
//
//   labeling 2
//   - x
//   0 y
//   1 y
//
// A header "labeling n", then one "node element" line for every binary node
// of length < n (the root is "-"), in any order.
Labeling parse_labeling(std::string_view text, const SetFamily& family);
std::string render_labeling(const Labeling& labeling, const SetFamily& family);

std::string read_file(const std::string& path);

}  // namespace treedim
