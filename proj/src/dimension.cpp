#include "treedim/dimension.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

namespace treedim {

BigInt binomial_bound(int n, int d) {
  if (n < 0) throw std::invalid_argument("binomial_bound: n must be nonnegative");
  if (d < -1) throw std::invalid_argument("binomial_bound: d must be at least -1");
  BigInt sum = 0;
  BigInt term = 1;  // C(n, i)
  for (int i = 0; i <= std::min(d, n); ++i) {
    sum += term;
    term = term * (n - i) / (i + 1);
  }
  return sum;
}

BigInt mary_bound(int n, int d, int m, int ell) {
  if (n < 0) throw std::invalid_argument("mary_bound: n must be nonnegative");
  if (d < -1) throw std::invalid_argument("mary_bound: d must be at least -1");
  if (!(m >= ell && ell >= 2)) throw std::invalid_argument("mary_bound: requires m >= ell >= 2");
  BigInt sum = 0;
  BigInt choose = 1;
  for (int i = 0; i <= std::min(d, n); ++i) {
    sum += choose * boost::multiprecision::pow(BigInt(m - ell + 1), static_cast<unsigned>(i)) *
           boost::multiprecision::pow(BigInt(ell - 1), static_cast<unsigned>(n - i));
    choose = choose * (n - i) / (i + 1);
  }
  return sum;
}

namespace {

// Families of position sets. Bit P of the family is set when the position set
// with bitmask P is realizable. The empty family (no bits) stands for an
// empty subtree.

// n <= 6: a family fits one word.
struct SmallFamily {
  std::uint64_t bits = 0;
};

inline SmallFamily unit_small() { return {1}; }

int max_popcount(std::uint64_t word, std::uint64_t offset) {
  int best = -1;
  while (word != 0) {
    const int bit = std::countr_zero(word);
    best = std::max(best, std::popcount(offset + static_cast<std::uint64_t>(bit)));
    word &= word - 1;
  }
  return best;
}

// Larger heights: a bitset over 2^n position masks.
using BigFamily = std::vector<std::uint64_t>;

void shift_left(BigFamily& bits, std::size_t amount) {
  const std::size_t words = amount / 64;
  const unsigned rest = static_cast<unsigned>(amount % 64);
  for (std::size_t i = bits.size(); i-- > 0;) {
    std::uint64_t value = 0;
    if (i >= words) {
      value = bits[i - words] << rest;
      if (rest != 0 && i >= words + 1) value |= bits[i - words - 1] >> (64 - rest);
    }
    bits[i] = value;
  }
}

constexpr int kMaxLtdHeight = 20;

class LtdSolver {
 public:
  LtdSolver(const BranchTrie& trie, int ell) : trie_(trie), ell_(ell) {}

  int solve() {
    if (trie_.empty()) return -1;
    if (trie_.height() <= kMaxMaskHeight) {
      return max_popcount(small(trie_.root()).bits, 0);
    }
    if (trie_.height() > kMaxLtdHeight) throw std::invalid_argument("ltd: height above 20 is not supported");
    words_ = std::max<std::size_t>(1, (std::size_t{1} << trie_.height()) / 64);
    const BigFamily fam = big(trie_.root());
    int best = -1;
    for (std::size_t w = 0; w < fam.size(); ++w) best = std::max(best, max_popcount(fam[w], w * 64));
    return best;
  }

 private:
  SmallFamily small(BranchTrie::Id v) {
    if (trie_.is_leaf(v)) return unit_small();
    std::uint64_t merged = 0;
    // at_least[j]: masks realized in at least j children, j = 1..ell.
    std::array<std::uint64_t, kMaxArity + 1> at_least{};
    for (int digit = 0; digit < trie_.arity(); ++digit) {
      const BranchTrie::Id c = trie_.child(v, digit);
      if (c == BranchTrie::kNone) continue;
      const std::uint64_t fam = small(c).bits;
      merged |= fam;
      for (int j = ell_; j >= 2; --j) at_least[static_cast<std::size_t>(j)] |= at_least[static_cast<std::size_t>(j) - 1] & fam;
      at_least[1] |= fam;
    }
    const std::uint64_t shared = at_least[static_cast<std::size_t>(ell_)];
    return {merged | 1U | (shared << (1U << trie_.depth(v)))};
  }

  BigFamily big(BranchTrie::Id v) {
    BigFamily merged(words_, 0);
    merged[0] = 1;
    if (trie_.is_leaf(v)) return merged;
    std::vector<BigFamily> at_least(static_cast<std::size_t>(ell_) + 1, BigFamily(words_, 0));
    for (int digit = 0; digit < trie_.arity(); ++digit) {
      const BranchTrie::Id c = trie_.child(v, digit);
      if (c == BranchTrie::kNone) continue;
      const BigFamily fam = big(c);
      for (std::size_t w = 0; w < words_; ++w) {
        merged[w] |= fam[w];
        for (int j = ell_; j >= 2; --j) {
          at_least[static_cast<std::size_t>(j)][w] |= at_least[static_cast<std::size_t>(j) - 1][w] & fam[w];
        }
        at_least[1][w] |= fam[w];
      }
    }
    BigFamily& shared = at_least[static_cast<std::size_t>(ell_)];
    shift_left(shared, std::size_t{1} << trie_.depth(v));
    for (std::size_t w = 0; w < words_; ++w) merged[w] |= shared[w];
    return merged;
  }

  const BranchTrie& trie_;
  int ell_;
  std::size_t words_ = 1;
};

}  // namespace

namespace fast {

int ltd_trie(const BranchTrie& trie, int ell) {
  check_ell(ell, trie.arity());
  return LtdSolver(trie, ell).solve();
}

int mtd_trie(const BranchTrie& trie, int ell) {
  check_ell(ell, trie.arity());
  if (trie.empty()) return -1;
  std::vector<int> g(trie.size(), 0);
  std::vector<int> kids;
  for (auto v = static_cast<BranchTrie::Id>(trie.size()) - 1; v >= 0; --v) {
    if (trie.is_leaf(v)) continue;
    kids.clear();
    for (int digit = 0; digit < trie.arity(); ++digit) {
      const BranchTrie::Id c = trie.child(v, digit);
      if (c != BranchTrie::kNone) kids.push_back(g[static_cast<std::size_t>(c)]);
    }
    std::sort(kids.begin(), kids.end(), std::greater<>());
    int value = kids.front();
    if (kids.size() >= static_cast<std::size_t>(ell)) value = std::max(value, 1 + kids[static_cast<std::size_t>(ell) - 1]);
    g[static_cast<std::size_t>(v)] = value;
  }
  return g[0];
}

int td_trie(const BranchTrie& trie, int ell) {
  check_ell(ell, trie.arity());
  if (trie.empty()) return -1;
  const auto levels = static_cast<std::size_t>(trie.height()) + 2;
  // antichain[v * levels + t]: size (capped at ell) of the largest antichain
  // inside the subtree of v whose members u all have rank(u) >= t.
  std::vector<int> antichain(trie.size() * levels, 0);
  std::vector<int> rank(trie.size(), 0);
  std::vector<int> sum(levels);
  for (auto v = static_cast<BranchTrie::Id>(trie.size()) - 1; v >= 0; --v) {
    const auto vi = static_cast<std::size_t>(v);
    std::fill(sum.begin(), sum.end(), 0);
    for (int digit = 0; digit < trie.arity(); ++digit) {
      const BranchTrie::Id c = trie.child(v, digit);
      if (c == BranchTrie::kNone) continue;
      for (std::size_t t = 0; t < levels; ++t) {
        sum[t] = std::min(ell, sum[t] + antichain[static_cast<std::size_t>(c) * levels + t]);
      }
    }
    int r = 0;
    for (std::size_t t = 0; t < levels; ++t) {
      if (sum[t] >= ell) r = static_cast<int>(t) + 1;
    }
    rank[vi] = r;
    for (std::size_t t = 0; t < levels; ++t) {
      antichain[vi * levels + t] = std::max(static_cast<int>(static_cast<int>(t) <= r), sum[t]);
    }
  }
  return rank[0];
}

namespace {

std::uint64_t range_bits(std::uint64_t mask, unsigned lo, unsigned len) {
  const std::uint64_t window = len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
  return (mask >> lo) & window;
}

std::uint64_t ltd_mask_rec(std::uint64_t mask, unsigned lo, unsigned len, unsigned depth) {
  if (range_bits(mask, lo, len) == 0) return 0;
  if (len == 1) return 1;
  const std::uint64_t left = ltd_mask_rec(mask, lo, len / 2, depth + 1);
  const std::uint64_t right = ltd_mask_rec(mask, lo + len / 2, len / 2, depth + 1);
  return left | right | 1U | ((left & right) << (1U << depth));
}

int td_mask_rec(std::uint64_t mask, unsigned lo, unsigned len) {
  if (range_bits(mask, lo, len) == 0) return -1;
  if (len == 1) return 0;
  const int left = td_mask_rec(mask, lo, len / 2);
  const int right = td_mask_rec(mask, lo + len / 2, len / 2);
  if (left >= 0 && right >= 0) return std::max({left, right, 1 + std::min(left, right)});
  return std::max(left, right);
}

void check_mask_height(int height) {
  if (height < 0 || height > kMaxMaskHeight) throw std::invalid_argument("mask view needs 0 <= height <= 6");
}

}  // namespace

int ltd_mask(std::uint64_t mask, int height) {
  check_mask_height(height);
  return max_popcount(ltd_mask_rec(mask, 0, 1U << height, 0), 0);
}

int td_mask(std::uint64_t mask, int height) {
  check_mask_height(height);
  return td_mask_rec(mask, 0, 1U << height);
}

}  // namespace fast

int td(const LeafSet& leaves) {
  if (leaves.arity() != 2) throw std::invalid_argument("td is the binary tree dimension; use td_ell");
  return td_ell(leaves, 2);
}

int ltd(const LeafSet& leaves, int ell) {
  check_ell(ell, leaves.arity());
  if (ell == 2 && leaves.has_mask_view()) return fast::ltd_mask(leaves.mask(), leaves.height());
  return fast::ltd_trie(BranchTrie(leaves), ell);
}

int mtd_ell(const LeafSet& leaves, int ell) {
  check_ell(ell, leaves.arity());
  if (ell == 2 && leaves.has_mask_view()) return fast::td_mask(leaves.mask(), leaves.height());
  return fast::mtd_trie(BranchTrie(leaves), ell);
}

int td_ell(const LeafSet& leaves, int ell) {
  check_ell(ell, leaves.arity());
  if (ell == 2 && leaves.has_mask_view()) return fast::td_mask(leaves.mask(), leaves.height());
  return fast::td_trie(BranchTrie(leaves), ell);
}

int dimension(const LeafSet& leaves, int ell, EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::kPlain:
      return td_ell(leaves, ell);
    case EmbeddingKind::kMeeted:
      return mtd_ell(leaves, ell);
    case EmbeddingKind::kLeveled:
      return ltd(leaves, ell);
  }
  throw std::logic_error("unreachable");
}

DimensionReport analyze(const LeafSet& leaves, int ell) {
  check_ell(ell, leaves.arity());
  DimensionReport report;
  report.arity = leaves.arity();
  report.height = leaves.height();
  report.size = leaves.size();
  report.ell = ell;
  const BranchTrie trie(leaves);
  report.td = fast::td_trie(trie, ell);
  report.mtd = fast::mtd_trie(trie, ell);
  report.ltd = fast::ltd_trie(trie, ell);
  report.bound = mary_bound(leaves.height(), report.ltd, leaves.arity(), ell);
  report.bound_tight = report.bound == leaves.size();
  return report;
}

DimensionReport cross_check(const LeafSet& leaves, int ell) {
  DimensionReport report = analyze(leaves, ell);
  const std::array<std::pair<EmbeddingKind, int>, 3> fast_values{
      {{EmbeddingKind::kPlain, report.td}, {EmbeddingKind::kMeeted, report.mtd}, {EmbeddingKind::kLeveled, report.ltd}}};
  for (const auto& [kind, value] : fast_values) {
    const int oracle = brute_dimension(leaves, ell, kind);
    if (oracle != value) {
      throw OracleMismatch("fast " + std::string(to_string(kind)) + " dimension " + std::to_string(value) +
                               " disagrees with embedding search " + std::to_string(oracle),
                           leaves, ell);
    }
  }
  return report;
}

}  // namespace treedim
