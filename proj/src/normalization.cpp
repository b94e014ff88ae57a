#include "treedim/normalization.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedim {

std::vector<Node> internal_node_order(int arity, int height, TieBreak order) {
  std::vector<Node> out;
  for (int len = height - 1; len >= 0; --len) {
    const LeafSet level = LeafSet::full(arity, len);
    std::vector<Node> nodes = level.leaves();
    if (order == TieBreak::kReverseLexicographic) std::reverse(nodes.begin(), nodes.end());
    out.insert(out.end(), nodes.begin(), nodes.end());
  }
  return out;
}

bool NormalizationTrace::replays() const {
  LeafSet current = initial;
  for (const AppliedSwap& s : swaps) current = apply_swap(current, s.prefix, s.k);
  return current == final;
}

NormalizationTrace normalize_binary(const LeafSet& leaves, TieBreak order) {
  if (leaves.arity() != 2) throw std::invalid_argument("normalize_binary needs a binary leaf set");
  NormalizationTrace trace{leaves, leaves, {}, -1};
  LeafSet current = leaves;
  for (const Node& a : internal_node_order(2, leaves.height(), order)) {
    const LeafSet below = restrict(current, a);
    if (set_norm(below, 2) <= set_norm(apply_swap(below, a, 0), 2)) continue;
    current = apply_swap(current, a, 0);
    trace.swaps.push_back({a, 0});
  }
  trace.final_norm = set_norm(current, 2);
  trace.final = std::move(current);
  return trace;
}

NormalizationTrace normalize_mary(const LeafSet& leaves, int ell, TieBreak order) {
  check_ell(ell, leaves.arity());
  const int m = leaves.arity();
  NormalizationTrace trace{leaves, leaves, {}, -1};
  LeafSet current = leaves;
  for (const Node& a : internal_node_order(m, leaves.height(), order)) {
    for (int j = 0; j < m - 1; ++j) {
      for (int k = 0; k < m - j - 1; ++k) {
        const Node lower = a.child(k);
        const Node upper = a.child(k + 1);
        const int lower_rel = set_norm(restrict(current, lower), ell) - norm_ell(lower, ell);
        const int upper_rel = set_norm(restrict(current, upper), ell) - norm_ell(upper, ell);
        if (lower_rel >= upper_rel) continue;
        current = apply_swap(current, a, k);
        trace.swaps.push_back({a, k});
      }
    }
  }
  trace.final_norm = set_norm(current, ell);
  trace.final = std::move(current);
  return trace;
}

}  // namespace treedim
