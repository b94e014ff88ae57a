#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "treedim/branch_trie.hpp"
#include "treedim/embedding.hpp"
#include "treedim/leaf_set.hpp"

namespace treedim {

using BigInt = boost::multiprecision::cpp_int;

// sum_{i <= min(d, n)} C(n, i); 0 for d = -1.
BigInt binomial_bound(int n, int d);

// sum_{i <= min(d, n)} C(n, i) (m - ell + 1)^i (ell - 1)^(n - i); 0 for d = -1.
// Requires m >= ell >= 2.
BigInt mary_bound(int n, int d, int m, int ell);

// Tree dimensions of a leaf set; -1 for the empty set.
int td(const LeafSet& leaves);                   // binary only
int ltd(const LeafSet& leaves, int ell = 2);     // leveled
int mtd_ell(const LeafSet& leaves, int ell);     // meeted
int td_ell(const LeafSet& leaves, int ell);      // plain
int dimension(const LeafSet& leaves, int ell, EmbeddingKind kind);

// The individual fast paths, exposed so that they can be checked separately.
namespace fast {

// Largest d such that some d positions are strongly shattered: computed as the
// family of realizable position sets, merged bottom-up over the trie.
int ltd_trie(const BranchTrie& trie, int ell);
// g(v) = max(max_c g(c), 1 + ell-th largest g(c)), g(leaf) = 0.
int mtd_trie(const BranchTrie& trie, int ell);
// Iterated thresholding on antichains of strict descendants.
int td_trie(const BranchTrie& trie, int ell);

// Binary, height <= kMaxMaskHeight, on the 2^n-bit mask view.
int ltd_mask(std::uint64_t mask, int height);
int td_mask(std::uint64_t mask, int height);

}  // namespace fast

struct DimensionReport {
  int arity = 2;
  int height = 0;
  std::size_t size = 0;
  int ell = 2;
  int td = -1;   // TD_ell
  int mtd = -1;  // MTD_ell
  int ltd = -1;  // LTD_ell
  BigInt bound;  // mary_bound(n, ltd, m, ell)
  bool bound_tight = false;
};

DimensionReport analyze(const LeafSet& leaves, int ell);

// A fast path disagreed with the brute-force embedding search.
class OracleMismatch : public std::runtime_error {
 public:
  OracleMismatch(const std::string& what, LeafSet leaves, int ell) : std::runtime_error(what), leaves_(std::move(leaves)), ell_(ell) {}
  const LeafSet& leaves() const { return leaves_; }
  int ell() const { return ell_; }

 private:
  LeafSet leaves_;
  int ell_;
};

// analyze() plus the brute-force oracle for every kind; throws OracleMismatch
// on any disagreement.
DimensionReport cross_check(const LeafSet& leaves, int ell);

}  // namespace treedim
