#include "treedim/maximal.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

#include "treedim/parallel.hpp"

namespace treedim {

LeafSet canonical_ball(int n, int d, int m, int ell) {
  check_ell(ell, m);
  if (d < -1) throw std::invalid_argument("canonical_ball: d must be at least -1");
  const LeafSet all = LeafSet::full(m, n);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code : all.codes()) {
    if (norm_ell(all.leaf(code), ell) <= d) codes.push_back(code);
  }
  return LeafSet::from_codes(m, n, std::move(codes));
}

bool MaximalityCertificate::verify(bool use_oracle) const {
  auto dim = [&](const LeafSet& b) {
    return use_oracle ? brute_dimension(b, ell, kind) : dimension(b, ell, kind);
  };
  if (dim(leaves) != value) return false;
  std::size_t next = 0;
  for (std::uint64_t code = 0; code < leaves.capacity(); ++code) {
    if (leaves.contains_code(code)) continue;
    if (next >= extensions.size() || extensions[next].first != code) return false;
    const int grown = dim(leaves.with_code(code));
    if (grown != extensions[next].second || grown <= value) return false;
    ++next;
  }
  return next == extensions.size();
}

std::optional<MaximalityCertificate> is_maximal(const LeafSet& leaves, EmbeddingKind kind, int ell) {
  MaximalityCertificate cert{leaves, kind, ell, dimension(leaves, ell, kind), {}};
  for (std::uint64_t code = 0; code < leaves.capacity(); ++code) {
    if (leaves.contains_code(code)) continue;
    const int grown = dimension(leaves.with_code(code), ell, kind);
    if (grown <= cert.value) return std::nullopt;
    cert.extensions.emplace_back(code, grown);
  }
  return cert;
}

namespace {

std::vector<std::uint64_t> absent_codes(const LeafSet& leaves) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t code = 0; code < leaves.capacity(); ++code) {
    if (!leaves.contains_code(code)) out.push_back(code);
  }
  return out;
}

int mask_dimension(std::uint64_t mask, int height, EmbeddingKind kind) {
  return kind == EmbeddingKind::kLeveled ? fast::ltd_mask(mask, height) : fast::td_mask(mask, height);
}

// Dimension only grows with the leaf set, so a leaf rejected once stays
// rejected: a single pass over the candidates yields a maximal set.
std::uint64_t complete_mask(std::uint64_t mask, int height, EmbeddingKind kind, int d,
                            std::span<const std::uint64_t> order, std::uint64_t& evaluations) {
  for (std::uint64_t code : order) {
    const std::uint64_t bit = std::uint64_t{1} << code;
    if (mask & bit) continue;
    ++evaluations;
    if (mask_dimension(mask | bit, height, kind) <= d) mask |= bit;
  }
  return mask;
}

}  // namespace

LeafSet greedy_complete(const LeafSet& leaves, EmbeddingKind kind, int ell, int d, std::optional<std::uint64_t> seed,
                        std::uint64_t& evaluations) {
  ++evaluations;
  if (dimension(leaves, ell, kind) > d) throw std::invalid_argument("greedy_complete: input already exceeds d");
  std::vector<std::uint64_t> order = absent_codes(leaves);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  if (ell == 2 && leaves.has_mask_view()) {
    return LeafSet::from_mask(leaves.height(), complete_mask(leaves.mask(), leaves.height(), kind, d, order, evaluations));
  }
  LeafSet current = leaves;
  for (std::uint64_t code : order) {
    LeafSet grown = current.with_code(code);
    ++evaluations;
    if (dimension(grown, ell, kind) <= d) current = std::move(grown);
  }
  return current;
}

LeafSet greedy_complete(const LeafSet& leaves, EmbeddingKind kind, int ell, int d, std::optional<std::uint64_t> seed) {
  std::uint64_t evaluations = 0;
  return greedy_complete(leaves, kind, ell, d, seed, evaluations);
}

std::string canonical_form(const BranchTrie& trie) {
  if (trie.empty()) return {};
  std::vector<std::string> form(trie.size());
  std::vector<std::string> kids;
  for (auto v = static_cast<BranchTrie::Id>(trie.size()) - 1; v >= 0; --v) {
    kids.clear();
    for (int digit = 0; digit < trie.arity(); ++digit) {
      const BranchTrie::Id c = trie.child(v, digit);
      if (c != BranchTrie::kNone) kids.push_back(std::move(form[static_cast<std::size_t>(c)]));
    }
    std::sort(kids.begin(), kids.end());
    std::string& out = form[static_cast<std::size_t>(v)];
    out.push_back('(');
    for (const std::string& k : kids) out += k;
    out.push_back(')');
  }
  return form[0];
}

bool tree_isomorphic(const BranchTrie& a, const BranchTrie& b) { return canonical_form(a) == canonical_form(b); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

struct RestartOutcome {
  std::optional<std::uint64_t> hit;
  std::uint64_t evaluations = 0;
};

class CounterexampleRunner {
 public:
  explicit CounterexampleRunner(const CounterexampleSearch& params)
      : params_(params), bound_(binomial_bound(params.n, params.d)) {}

  bool accepts(std::uint64_t mask) const {
    if (std::popcount(mask) >= bound_) return false;
    if (fast::ltd_mask(mask, params_.n) != params_.d) return false;
    return !params_.target_td || fast::td_mask(mask, params_.n) == *params_.target_td;
  }

  // Exhaustive scan of all subsets (heights <= 4).
  std::optional<CounterexampleHit> scan() const {
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << params_.n);
    const std::uint64_t leaves = std::uint64_t{1} << params_.n;
    std::vector<int> dims(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) dims[mask] = fast::ltd_mask(mask, params_.n);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if (dims[mask] != params_.d) continue;
      bool maximal = true;
      for (std::uint64_t b = 0; b < leaves && maximal; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
        if (!(mask & bit) && dims[mask | bit] <= params_.d) maximal = false;
      }
      if (maximal && accepts(mask)) return hit(mask, 0, count);
    }
    return std::nullopt;
  }

  RestartOutcome restart(std::uint64_t index) const {
    constexpr int kLocalMoves = 16;
    constexpr int kMaxRemoved = 3;
    RestartOutcome out;
    std::mt19937_64 rng(derive_seed(params_.seed, index));
    const int leaves = 1 << params_.n;
    std::vector<std::uint64_t> order(static_cast<std::size_t>(leaves));
    std::iota(order.begin(), order.end(), std::uint64_t{0});

    auto complete = [&](std::uint64_t start) {
      std::shuffle(order.begin(), order.end(), rng);
      return complete_mask(start, params_.n, EmbeddingKind::kLeveled, params_.d, order, out.evaluations);
    };

    std::uint64_t current = complete(0);
    if (accepts(current)) {
      out.hit = current;
      return out;
    }
    for (int move = 0; move < kLocalMoves; ++move) {
      std::uint64_t reduced = current;
      const int removals = 1 + static_cast<int>(rng() % kMaxRemoved);
      for (int r = 0; r < removals && reduced != 0; ++r) {
        int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(std::popcount(reduced)));
        std::uint64_t scan = reduced;
        while (pick-- > 0) scan &= scan - 1;
        reduced &= ~(scan & (~scan + 1));
      }
      const std::uint64_t candidate = complete(reduced);
      if (std::popcount(candidate) <= std::popcount(current)) current = candidate;
      if (accepts(current)) {
        out.hit = current;
        return out;
      }
    }
    return out;
  }

  std::optional<CounterexampleHit> randomized() const {
    const unsigned jobs = std::max(1U, params_.jobs);
    const std::size_t batch = 64 * static_cast<std::size_t>(jobs);
    std::uint64_t spent = 0;
    for (std::uint64_t base = 0;; base += batch) {
      auto outcomes = parallel_map(batch, jobs, [&](std::size_t i) { return restart(base + i); });
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        spent += outcomes[i].evaluations;
        if (spent > params_.budget) return std::nullopt;
        if (outcomes[i].hit) return hit(*outcomes[i].hit, base + i, spent);
      }
    }
  }

 private:
  CounterexampleHit hit(std::uint64_t mask, std::uint64_t restart, std::uint64_t spent) const {
    const LeafSet leaves = LeafSet::from_mask(params_.n, mask);
    return {leaves, analyze(leaves, 2), restart, spent};
  }

  const CounterexampleSearch& params_;
  BigInt bound_;
};

}  // namespace

std::optional<CounterexampleHit> search_counterexample(const CounterexampleSearch& params) {
  if (params.n < 0 || params.n > kMaxMaskHeight) throw std::invalid_argument("search_counterexample: n must be in [0, 6]");
  if (params.d < 0 || params.d > params.n) throw std::invalid_argument("search_counterexample: d must be in [0, n]");
  CounterexampleRunner runner(params);
  if (params.n <= 4) return runner.scan();
  return runner.randomized();
}

}  // namespace treedim
