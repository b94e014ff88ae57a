#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treedim/branch_trie.hpp"
#include "treedim/dimension.hpp"
#include "treedim/embedding.hpp"
#include "treedim/leaf_set.hpp"

namespace treedim {

// {b in m^n : norm_ell(b) <= d}.
LeafSet canonical_ball(int n, int d, int m, int ell);

// Evidence that a leaf set is maximal for its dimension: every absent leaf,
// once added, raises the dimension.
struct MaximalityCertificate {
  LeafSet leaves;
  EmbeddingKind kind = EmbeddingKind::kLeveled;
  int ell = 2;
  int value = -1;
  // (absent leaf code, dimension after adding it), in code order.
  std::vector<std::pair<std::uint64_t, int>> extensions;

  // Recomputes every entry with the fast dimensions, or with the brute-force
  // embedding search when `use_oracle` is set.
  bool verify(bool use_oracle = false) const;
};

std::optional<MaximalityCertificate> is_maximal(const LeafSet& leaves, EmbeddingKind kind, int ell);

// Adds absent leaves one at a time, keeping the dimension <= d, until no leaf
// can be added. Leaves are tried in canonical order when `seed` is empty and in
// a seeded random order otherwise. Throws if the input already exceeds d.
LeafSet greedy_complete(const LeafSet& leaves, EmbeddingKind kind, int ell, int d,
                        std::optional<std::uint64_t> seed = std::nullopt);

// As above, also reporting the number of dimension evaluations performed.
LeafSet greedy_complete(const LeafSet& leaves, EmbeddingKind kind, int ell, int d,
                        std::optional<std::uint64_t> seed, std::uint64_t& evaluations);

// AHU encoding: each node is "(" + its children's encodings, sorted, + ")".
std::string canonical_form(const BranchTrie& trie);
bool tree_isomorphic(const BranchTrie& a, const BranchTrie& b);

struct CounterexampleSearch {
  int n = 6;
  int d = 2;
  // Upper limit on dimension evaluations.
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  // Only accept sets whose tree dimension equals this value.
  std::optional<int> target_td;
  unsigned jobs = 1;
};

struct CounterexampleHit {
  LeafSet leaves;
  DimensionReport report;
  // Index of the restart that produced the hit.
  std::uint64_t restart = 0;
  // Evaluations spent up to and including the hit.
  std::uint64_t evaluations = 0;
};

// Looks for a binary leaf set of height n that is maximal with leveled
// dimension d yet smaller than binomial_bound(n, d). Heights up to 4 are
// scanned exhaustively; larger heights use seeded greedy completions followed
// by local remove/re-complete moves. Deterministic for a given seed, whatever
// the number of jobs.
std::optional<CounterexampleHit> search_counterexample(const CounterexampleSearch& params);

// Derives the seed of an independent sub-run.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace treedim
