#include "treedim/suites.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "treedim/branch_trie.hpp"
#include "treedim/dimension.hpp"
#include "treedim/embedding.hpp"
#include "treedim/maximal.hpp"
#include "treedim/normalization.hpp"
#include "treedim/parallel.hpp"

namespace treedim::verification {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.failures == 0; });
}

const CheckTally* SuiteReport::find(std::string_view check) const {
  for (const CheckTally& t : checks) {
    if (t.name == check) return &t;
  }
  return nullptr;
}

namespace {

constexpr int kMaxBinarySweep = 4;
constexpr int kMaxTernarySweep = 2;

class Tally {
 public:
  template <typename Describe>
  void check(std::string_view name, bool ok, Describe&& describe) {
    CheckTally& t = slot(name);
    ++t.instances;
    if (!ok) {
      ++t.failures;
      if (!t.first_failure) t.first_failure = describe();
    }
  }

  void check(std::string_view name, bool ok) {
    check(name, ok, [] { return Json(nullptr); });
  }

  void merge(Tally&& other) {
    for (CheckTally& t : other.checks_) {
      CheckTally& mine = slot(t.name);
      mine.instances += t.instances;
      mine.failures += t.failures;
      if (!mine.first_failure && t.first_failure) mine.first_failure = std::move(t.first_failure);
    }
  }

  std::vector<CheckTally> take() { return std::move(checks_); }

 private:
  CheckTally& slot(std::string_view name) {
    for (CheckTally& t : checks_) {
      if (t.name == name) return t;
    }
    checks_.push_back(CheckTally{std::string(name), 0, 0, std::nullopt});
    return checks_.back();
  }

  std::vector<CheckTally> checks_;
};

// Runs fn(i, tally) for i in [0, count). Instances are cut into fixed blocks so
// that tallies, and which failure is reported first, do not depend on jobs.
template <typename Fn>
void sweep(Tally& into, std::uint64_t count, unsigned jobs, Fn&& fn) {
  if (count == 0) return;
  const std::uint64_t blocks = std::min<std::uint64_t>(count, 4096);
  auto parts = parallel_map(static_cast<std::size_t>(blocks), jobs, [&](std::size_t b) {
    Tally local;
    const std::uint64_t begin = count * b / blocks;
    const std::uint64_t end = count * (b + 1) / blocks;
    for (std::uint64_t i = begin; i < end; ++i) fn(i, local);
    return local;
  });
  for (Tally& part : parts) into.merge(std::move(part));
}

Json set_json(const LeafSet& leaves) {
  Json out;
  out["m"] = leaves.arity();
  out["n"] = leaves.height();
  out["leaves"] = leaf_strings(leaves);
  return out;
}

Json family_json(const SetFamily& family) {
  Json out;
  out["universe"] = family.universe();
  Json members = Json::array();
  for (Subset s : family.members()) {
    std::string bits;
    for (std::size_t j = 0; j < family.universe_size(); ++j) bits.push_back(((s >> j) & 1U) ? '1' : '0');
    members.push_back(bits);
  }
  out["members"] = std::move(members);
  return out;
}

template <typename... Fields>
Json with(Json base, Fields&&... fields) {
  (base.update(std::forward<Fields>(fields)), ...);
  return base;
}

Json field(const char* key, Json value) {
  Json out;
  out[key] = std::move(value);
  return out;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t phase, std::uint64_t i) {
  return derive_seed(derive_seed(seed, phase), i);
}

std::uint64_t ipow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Subsets of m^n for small capacities: bit c of i selects leaf code c.
LeafSet subset_of(int m, int n, std::uint64_t i) {
  std::vector<std::uint64_t> codes;
  for (std::uint64_t c = 0; i >> c; ++c) {
    if ((i >> c) & 1U) codes.push_back(c);
  }
  return LeafSet::from_codes(m, n, std::move(codes));
}

std::uint64_t subset_count(int m, int n) { return std::uint64_t{1} << ipow(static_cast<std::uint64_t>(m), n); }

std::uint64_t bound_u64(int n, int d, int m = 2, int ell = 2) {
  return static_cast<std::uint64_t>(m == 2 && ell == 2 ? binomial_bound(n, d) : mary_bound(n, d, m, ell));
}

// The leveled bound with its induction step, binary or ell-ary.
void bound_checks(Tally& t, const LeafSet& b, int ell) {
  const int m = b.arity();
  const int n = b.height();
  const int d = ltd(b, ell);
  t.check("bound", b.size() <= bound_u64(n, d, m, ell), [&] { return with(set_json(b), field("ltd", d)); });
  if (n == 0 || b.empty()) return;
  const SplitProjection split = split_projection(b, ell);
  const int d1 = ltd(split.prefixes, ell);
  const int d2 = ltd(split.branching, ell);
  if (m == 2) {
    t.check("split-identity", b.size() == split.prefixes.size() + split.branching.size(), [&] { return set_json(b); });
  } else {
    const std::size_t rhs = split.prefixes.size() * static_cast<std::size_t>(ell - 1) +
                            split.branching.size() * static_cast<std::size_t>(m - ell + 1);
    t.check("projection-inequality", b.size() <= rhs, [&] { return set_json(b); });
  }
  t.check("prefixes-ltd", d1 <= d, [&] { return with(set_json(b), field("ltd", d), field("prefixesLtd", d1)); });
  t.check("branching-ltd", d2 <= d - 1, [&] { return with(set_json(b), field("ltd", d), field("branchingLtd", d2)); });
}

SuiteReport finish(std::string_view name, const SuiteOptions& options, Tally& tally, Json details = nullptr) {
  return SuiteReport{std::string(name), options, tally.take(), std::move(details)};
}

// ---------------------------------------------------------------------------

SuiteReport thm_ltd(const SuiteOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(o.max_n, kMaxBinarySweep); ++n) {
    sweep(t, subset_count(2, n), o.jobs, [&](std::uint64_t mask, Tally& local) {
      bound_checks(local, LeafSet::from_mask(n, mask), 2);
    });
  }
  for (int n : {5, 6}) {
    sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
      bound_checks(local, random_leaf_set(2, n, instance_seed(o.seed, static_cast<std::uint64_t>(n), i)), 2);
    });
  }
  for (int n = 0; n <= 6; ++n) {
    for (int d = -1; d <= n; ++d) {
      const LeafSet ball = canonical_ball(n, d, 2, 2);
      t.check("tight", ball.size() == bound_u64(n, d) && ltd(ball) == d, [&] { return with(set_json(ball), field("d", d)); });
    }
  }
  return finish("thm-ltd", o, t);
}

SuiteReport thm_ltd_mary(const SuiteOptions& o) {
  Tally t;
  for (int ell : {2, 3}) {
    for (int n = 0; n <= std::min(o.max_n, kMaxTernarySweep); ++n) {
      sweep(t, subset_count(3, n), o.jobs, [&](std::uint64_t i, Tally& local) { bound_checks(local, subset_of(3, n, i), ell); });
    }
    for (int n : {3, 4}) {
      sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
        const std::uint64_t phase = 100 * static_cast<std::uint64_t>(ell) + static_cast<std::uint64_t>(n);
        bound_checks(local, random_leaf_set(3, n, instance_seed(o.seed, phase, i)), ell);
      });
    }
  }
  SuiteReport report = finish("thm-ltd-mary", o, t);
  report.checks.push_back(tightness_check(6));
  return report;
}

void td_norm_checks(Tally& t, const LeafSet& b, bool oracle) {
  const NormalizationTrace trace = normalize_binary(b);
  const int fast_td = td(b);
  t.check("td-equals-norm", fast_td == trace.final_norm, [&] {
    return with(set_json(b), field("td", fast_td), field("norm", trace.final_norm));
  });
  if (oracle) {
    const int brute = brute_dimension(b, 2, EmbeddingKind::kPlain);
    t.check("oracle-td-equals-norm", brute == trace.final_norm, [&] {
      return with(set_json(b), field("bruteTd", brute), field("norm", trace.final_norm));
    });
  } else {
    const int by_trie = fast::td_trie(BranchTrie(b), 2);
    t.check("trie-td-equals-norm", by_trie == trace.final_norm, [&] { return set_json(b); });
  }
  t.check("cardinality", trace.final.size() == b.size(), [&] { return set_json(b); });
  t.check("replay", trace.replays(), [&] { return set_json(b); });
  t.check("shape", tree_isomorphic(BranchTrie(b), BranchTrie(trace.final)), [&] { return set_json(b); });
  const int reverse = normalize_binary(b, TieBreak::kReverseLexicographic).final_norm;
  t.check("reverse-tie-break", reverse == trace.final_norm, [&] { return set_json(b); });
  const int as_mary = normalize_mary(b, 2).final_norm;
  t.check("binary-vs-ell-ary", as_mary == trace.final_norm, [&] { return set_json(b); });
  t.check("idempotent", normalize_binary(trace.final).final == trace.final, [&] { return set_json(b); });
}

SuiteReport thm_td_norm(const SuiteOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(o.max_n, kMaxBinarySweep); ++n) {
    sweep(t, subset_count(2, n), o.jobs, [&](std::uint64_t mask, Tally& local) {
      td_norm_checks(local, LeafSet::from_mask(n, mask), true);
    });
  }
  for (int n : {5, 6}) {
    sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
      td_norm_checks(local, random_leaf_set(2, n, instance_seed(o.seed, static_cast<std::uint64_t>(n), i)), false);
    });
  }
  return finish("thm-td-norm", o, t);
}

void mtd_norm_checks(Tally& t, const LeafSet& b, int ell) {
  const NormalizationTrace trace = normalize_mary(b, ell);
  const int fast_mtd = mtd_ell(b, ell);
  const int brute = brute_dimension(b, ell, EmbeddingKind::kMeeted);
  auto describe = [&] {
    return with(set_json(b), field("ell", ell), field("mtd", fast_mtd), field("bruteMtd", brute),
                field("norm", trace.final_norm));
  };
  t.check("mtd-equals-norm", fast_mtd == trace.final_norm, describe);
  t.check("oracle-mtd-equals-norm", brute == trace.final_norm, describe);
  t.check("cardinality", trace.final.size() == b.size(), describe);
  t.check("replay", trace.replays(), describe);
  t.check("shape", tree_isomorphic(BranchTrie(b), BranchTrie(trace.final)), describe);
  const int reverse = normalize_mary(b, ell, TieBreak::kReverseLexicographic).final_norm;
  t.check("reverse-tie-break", reverse == trace.final_norm, describe);
  t.check("idempotent", normalize_mary(trace.final, ell).final == trace.final, describe);
}

SuiteReport thm_mtd_norm(const SuiteOptions& o) {
  Tally t;
  for (int ell : {2, 3}) {
    for (int n = 0; n <= std::min(o.max_n, kMaxTernarySweep); ++n) {
      sweep(t, subset_count(3, n), o.jobs, [&](std::uint64_t i, Tally& local) { mtd_norm_checks(local, subset_of(3, n, i), ell); });
    }
    sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
      mtd_norm_checks(local, random_leaf_set(3, 3, instance_seed(o.seed, static_cast<std::uint64_t>(ell), i)), ell);
    });
  }
  return finish("thm-mtd-norm", o, t);
}

// Shape of the canonical ball, cached per (n, d).
class BallShapes {
 public:
  BallShapes(int m, int ell) : m_(m), ell_(ell) {}
  const std::string& get(int n, int d) {
    auto [it, fresh] = cache_.try_emplace({n, d});
    if (fresh) it->second = canonical_form(BranchTrie(canonical_ball(n, d, m_, ell_)));
    return it->second;
  }
  void warm(int max_n) {
    for (int n = 0; n <= max_n; ++n) {
      for (int d = -1; d <= n; ++d) get(n, d);
    }
  }

 private:
  int m_;
  int ell_;
  std::map<std::pair<int, int>, std::string> cache_;
};

// Checks on a maximal set of dimension d: shape of the ball and a verified
// certificate.
void maximal_shape_checks(Tally& t, const LeafSet& b, EmbeddingKind kind, int ell, int d, const std::string& ball,
                          bool oracle_certificate) {
  auto describe = [&] { return with(set_json(b), field("ell", ell), field("dimension", d)); };
  t.check("isomorphic-to-ball", canonical_form(BranchTrie(b)) == ball, describe);
  t.check("size-equals-bound", b.size() == bound_u64(b.height(), d, b.arity(), ell), describe);
  const auto cert = is_maximal(b, kind, ell);
  t.check("certificate", cert.has_value() && cert->value == d && cert->verify(false), describe);
  if (oracle_certificate) t.check("certificate-oracle", cert.has_value() && cert->verify(true), describe);
}

SuiteReport cor_isotp(const SuiteOptions& o) {
  Tally t;
  BallShapes shapes(2, 2);
  shapes.warm(6);
  for (int n = 0; n <= std::min(o.max_n, kMaxBinarySweep); ++n) {
    const std::uint64_t count = subset_count(2, n);
    const std::uint64_t leaves = std::uint64_t{1} << n;
    std::vector<int> dims(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) dims[mask] = fast::td_mask(mask, n);
    sweep(t, count, o.jobs, [&](std::uint64_t mask, Tally& local) {
      const int d = dims[mask];
      for (std::uint64_t c = 0; c < leaves; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (!(mask & bit) && dims[mask | bit] <= d) return;
      }
      maximal_shape_checks(local, LeafSet::from_mask(n, mask), EmbeddingKind::kPlain, 2, d, shapes.get(n, d), true);
    });
  }
  for (int n : {5, 6}) {
    sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
      const std::uint64_t seed = instance_seed(o.seed, static_cast<std::uint64_t>(n), i);
      const int d = static_cast<int>(seed % static_cast<std::uint64_t>(n + 1));
      const LeafSet b = greedy_complete(LeafSet(2, n), EmbeddingKind::kPlain, 2, d, seed);
      local.check("greedy-reaches-d", td(b) == d, [&] { return with(set_json(b), field("d", d)); });
      maximal_shape_checks(local, b, EmbeddingKind::kPlain, 2, d, shapes.get(n, d), false);
    });
  }
  return finish("cor-isotp", o, t);
}

SuiteReport cor_isotp_mary(const SuiteOptions& o) {
  Tally t;
  for (int ell : {2, 3}) {
    BallShapes shapes(3, ell);
    shapes.warm(4);
    for (int n = 0; n <= std::min(o.max_n, kMaxTernarySweep); ++n) {
      const std::uint64_t count = subset_count(3, n);
      const std::uint64_t leaves = ipow(3, n);
      std::vector<int> dims(count);
      for (std::uint64_t i = 0; i < count; ++i) dims[i] = mtd_ell(subset_of(3, n, i), ell);
      sweep(t, count, o.jobs, [&](std::uint64_t i, Tally& local) {
        const int d = dims[i];
        for (std::uint64_t c = 0; c < leaves; ++c) {
          const std::uint64_t bit = std::uint64_t{1} << c;
          if (!(i & bit) && dims[i | bit] <= d) return;
        }
        maximal_shape_checks(local, subset_of(3, n, i), EmbeddingKind::kMeeted, ell, d, shapes.get(n, d), true);
      });
    }
    for (int n = 3; n <= 4; ++n) {
      sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
        const std::uint64_t phase = 100 * static_cast<std::uint64_t>(ell) + static_cast<std::uint64_t>(n);
        const std::uint64_t seed = instance_seed(o.seed, phase, i);
        const int d = static_cast<int>(seed % static_cast<std::uint64_t>(n + 1));
        const LeafSet b = greedy_complete(LeafSet(3, n), EmbeddingKind::kMeeted, ell, d, seed);
        local.check("greedy-reaches-d", mtd_ell(b, ell) == d, [&] { return with(set_json(b), field("d", d)); });
        maximal_shape_checks(local, b, EmbeddingKind::kMeeted, ell, d, shapes.get(n, d), false);
      });
    }
  }
  return finish("cor-isotp-mary", o, t);
}

// Every tuple of length n over k elements, in lexicographic order.
template <typename Fn>
void for_each_tuple(std::size_t k, int n, Fn&& fn) {
  const std::uint64_t count = ipow(k, n);
  std::vector<std::size_t> tuple(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t rest = i;
    for (int p = n - 1; p >= 0; --p) {
      tuple[static_cast<std::size_t>(p)] = static_cast<std::size_t>(rest % k);
      rest /= k;
    }
    fn(std::span<const std::size_t>(tuple));
  }
}

void tuple_checks(Tally& t, const SetFamily& family, int max_n, int vc) {
  for (int n = 0; n <= max_n; ++n) {
    for_each_tuple(family.universe_size(), n, [&](std::span<const std::size_t> tuple) {
      const LeafSet image = chi_tuple(family, tuple);
      const int d = ltd(image);
      auto describe = [&] {
        return with(family_json(family), field("tuple", std::vector<std::size_t>(tuple.begin(), tuple.end())),
                    field("ltd", d), field("vc", vc));
      };
      t.check("chi-tuple-ltd-le-vc", d <= vc, describe);
      t.check("chi-tuple-bound", image.size() <= bound_u64(n, d), describe);
    });
  }
}

SuiteReport cor_ss(const SuiteOptions& o) {
  Tally t;
  sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
    const SetFamily family = random_family(5, instance_seed(o.seed, 1, i));
    const int vc = vc_dim(family);
    const Subset universe = family.universe_mask();
    for (Subset a = 0;; a = (a - universe) & universe) {
      const int size = std::popcount(a);
      if (size <= 4) {
        const std::size_t traces = trace_count(family, a);
        local.check("sauer-shelah", traces <= bound_u64(size, vc), [&] {
          return with(family_json(family), field("subset", a), field("traces", traces), field("vc", vc));
        });
      }
      if (a == universe) break;
    }
    tuple_checks(local, family, std::min(o.max_n, kMaxBinarySweep), vc);
    const int ld = littlestone_dim(family);
    local.check("vc-le-ld", vc <= ld, [&] { return with(family_json(family), field("vc", vc), field("ld", ld)); });
  });
  return finish("cor-ss", o, t);
}

Labeling labeling_from_index(std::size_t k, int n, std::uint64_t index) {
  Labeling labeling{n, std::vector<std::size_t>((std::size_t{1} << n) - 1)};
  for (std::size_t& label : labeling.labels) {
    label = static_cast<std::size_t>(index % k);
    index /= k;
  }
  return labeling;
}

void labeling_checks(Tally& t, const SetFamily& family, const Labeling& labeling, int ld) {
  const LeafSet image = chi_labeling(family, labeling);
  const int l = ltd(image);
  const int d = td(image);
  auto describe = [&] {
    return with(family_json(family), field("labeling", labeling.labels), field("height", labeling.height),
                field("ltd", l), field("td", d), field("ld", ld));
  };
  t.check("thicket-bound", image.size() <= bound_u64(labeling.height, ld), describe);
  t.check("ltd-le-td-le-ld", l <= d && d <= ld, describe);
}

SetFamily family_from_index(std::size_t k, std::uint64_t index) {
  std::vector<Subset> members;
  for (Subset s = 0; s < (Subset{1} << k); ++s) {
    if ((index >> s) & 1U) members.push_back(s);
  }
  return SetFamily::over(k, std::move(members));
}

SuiteReport cor_stable_ss(const SuiteOptions& o) {
  Tally t;
  const int max_height = std::min(o.max_n, 3);
  for (std::size_t k = 0; k <= 3; ++k) {
    sweep(t, std::uint64_t{1} << (std::uint64_t{1} << k), o.jobs, [&](std::uint64_t index, Tally& local) {
      const SetFamily family = family_from_index(k, index);
      const int ld = littlestone_dim(family);
      for (int n = 0; n <= max_height; ++n) {
        const std::uint64_t labelings = ipow(k, static_cast<int>((std::size_t{1} << n) - 1));
        for (std::uint64_t l = 0; l < labelings; ++l) labeling_checks(local, family, labeling_from_index(k, n, l), ld);
      }
      tuple_checks(local, family, max_height, vc_dim(family));
      const int by_search = ld_by_labeling_search(family);
      local.check("ld-recursion-vs-labeling", ld == by_search, [&] {
        return with(family_json(family), field("recursion", ld), field("labelingSearch", by_search));
      });
    });
  }
  sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
    const std::uint64_t seed = instance_seed(o.seed, 2, i);
    const SetFamily family = random_family(5, seed);
    const int ld = littlestone_dim(family);
    std::mt19937_64 rng(seed);
    const int n = static_cast<int>(rng() % 5);
    const std::size_t k = family.universe_size();
    if (k == 0 && n > 0) return;
    Labeling labeling{n, std::vector<std::size_t>((std::size_t{1} << n) - 1)};
    for (std::size_t& label : labeling.labels) label = static_cast<std::size_t>(rng() % k);
    labeling_checks(local, family, labeling, ld);
  });
  return finish("cor-stable-ss", o, t);
}

void oracle_checks(Tally& t, const LeafSet& b, int ell) {
  const BranchTrie trie(b);
  auto compare = [&](std::string_view name, int fast_value, int brute) {
    t.check(name, fast_value == brute, [&] {
      return with(set_json(b), field("ell", ell), field("fast", fast_value), field("brute", brute));
    });
  };
  std::vector<int> brutes;
  for (EmbeddingKind kind : {EmbeddingKind::kLeveled, EmbeddingKind::kMeeted, EmbeddingKind::kPlain}) {
    const auto [brute, witness] = brute_dimension_with_witness(b, ell, kind);
    const std::string prefix(to_string(kind));
    t.check(prefix + "-witness", b.empty() ? !witness : witness && is_embedding(*witness, kind, trie),
            [&] { return with(set_json(b), field("ell", ell)); });
    switch (kind) {
      case EmbeddingKind::kLeveled:
        compare("leveled-trie", fast::ltd_trie(trie, ell), brute);
        if (ell == 2 && b.has_mask_view()) compare("leveled-mask", fast::ltd_mask(b.mask(), b.height()), brute);
        break;
      case EmbeddingKind::kMeeted:
        compare("meeted-trie", fast::mtd_trie(trie, ell), brute);
        break;
      case EmbeddingKind::kPlain:
        compare("plain-trie", fast::td_trie(trie, ell), brute);
        if (ell == 2 && b.has_mask_view()) compare("plain-mask", fast::td_mask(b.mask(), b.height()), brute);
        break;
    }
    compare(prefix + "-dispatch", dimension(b, ell, kind), brute);
    brutes.push_back(brute);
  }
  auto describe = [&] { return with(set_json(b), field("ell", ell), field("brute", brutes)); };
  t.check("brute-kind-order", brutes[0] <= brutes[1] && brutes[1] <= brutes[2], describe);
  if (ell == 2) t.check("brute-meeted-equals-plain", brutes[1] == brutes[2], describe);
}

SuiteReport oracle_equiv(const SuiteOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(o.max_n, kMaxBinarySweep); ++n) {
    sweep(t, subset_count(2, n), o.jobs, [&](std::uint64_t mask, Tally& local) {
      oracle_checks(local, LeafSet::from_mask(n, mask), 2);
    });
  }
  for (int ell : {2, 3}) {
    sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
      oracle_checks(local, random_leaf_set(3, 3, instance_seed(o.seed, static_cast<std::uint64_t>(ell), i)), ell);
    });
  }
  return finish("oracle-equiv", o, t);
}

SuiteReport maximal_small_n(const SuiteOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(o.max_n, kMaxBinarySweep); ++n) {
    const std::uint64_t count = subset_count(2, n);
    const std::uint64_t leaves = std::uint64_t{1} << n;
    std::vector<int> dims(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) dims[mask] = fast::ltd_mask(mask, n);
    sweep(t, count, o.jobs, [&](std::uint64_t mask, Tally& local) {
      const int d = dims[mask];
      for (std::uint64_t c = 0; c < leaves; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (!(mask & bit) && dims[mask | bit] <= d) return;
      }
      const LeafSet b = LeafSet::from_mask(n, mask);
      local.check("maximal-size-equals-bound", b.size() == bound_u64(n, d), [&] { return with(set_json(b), field("ltd", d)); });
      const auto cert = is_maximal(b, EmbeddingKind::kLeveled, 2);
      local.check("certificate-oracle", cert.has_value() && cert->value == d && cert->verify(true), [&] { return set_json(b); });
    });
    for (int d = 0; d <= n; ++d) {
      CounterexampleSearch params;
      params.n = n;
      params.d = d;
      t.check("search-finds-nothing", !search_counterexample(params), [&] { return field("n", n); });
    }
  }
  constexpr int kHeight = 5;
  sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
    const int d = static_cast<int>(i % (kHeight + 1));
    const LeafSet b = greedy_complete(LeafSet(2, kHeight), EmbeddingKind::kLeveled, 2, d, instance_seed(o.seed, 5, i));
    const int reached = ltd(b);
    local.check("greedy-no-smaller-maximal", b.size() == bound_u64(kHeight, reached), [&] {
      return with(set_json(b), field("ltd", reached));
    });
    local.check("greedy-reaches-d", reached == d, [&] { return with(set_json(b), field("d", d)); });
  });
  return finish("maximal-small-n", o, t);
}

SuiteReport counterexample_n6(const SuiteOptions& o) {
  Tally t;
  CounterexampleSearch params;
  params.n = 6;
  params.d = 2;
  params.seed = o.seed;
  params.target_td = 4;
  params.jobs = o.jobs;
  const auto hit = search_counterexample(params);
  t.check("found", hit.has_value(), [&] { return field("budget", params.budget); });
  Json details;
  details["budget"] = params.budget;
  if (hit) {
    const LeafSet& b = hit->leaves;
    const std::uint64_t bound = bound_u64(6, 2);
    auto describe = [&] { return set_json(b); };
    t.check("size-21-below-22", b.size() == 21 && bound == 22, describe);
    t.check("ltd-2", hit->report.ltd == 2, describe);
    t.check("oracle-ltd-2", brute_dimension(b, 2, EmbeddingKind::kLeveled) == 2, describe);
    const auto cert = is_maximal(b, EmbeddingKind::kLeveled, 2);
    t.check("maximal", cert.has_value() && cert->verify(false), describe);
    t.check("oracle-maximal", cert.has_value() && cert->verify(true), describe);
    t.check("td-4", hit->report.td == 4, describe);
    t.check("oracle-td-4", brute_dimension(b, 2, EmbeddingKind::kPlain) == 4, describe);
    t.check("within-budget", hit->evaluations <= params.budget, describe);
    details["set"] = set_json(b);
    details["size"] = b.size();
    details["bound"] = bound;
    details["ltd"] = hit->report.ltd;
    details["mtd"] = hit->report.mtd;
    details["td"] = hit->report.td;
    details["restart"] = hit->restart;
    details["evaluations"] = hit->evaluations;
  }
  return finish("counterexample-n6", o, t, std::move(details));
}

void chain_checks(Tally& t, const LeafSet& b, int ell, std::uint64_t seed) {
  const int l = ltd(b, ell);
  const int mt = mtd_ell(b, ell);
  const int p = td_ell(b, ell);
  auto describe = [&] { return with(set_json(b), field("ell", ell), field("ltd", l), field("mtd", mt), field("td", p)); };
  t.check("ltd-le-mtd-le-td", l <= mt && mt <= p, describe);
  if (b.height() == 0) return;
  std::mt19937_64 rng(seed);
  const int m = b.arity();
  const auto length = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(b.height()));
  std::vector<Digit> digits(length);
  for (Digit& digit : digits) digit = static_cast<Digit>(rng() % static_cast<std::uint64_t>(m));
  const Node a(m, std::move(digits));
  const int k = static_cast<int>(rng() % static_cast<std::uint64_t>(m - 1));
  const LeafSet swapped = apply_swap(b, a, k);
  t.check("swap-invariance",
          ltd(swapped, ell) == l && mtd_ell(swapped, ell) == mt && td_ell(swapped, ell) == p && swapped.size() == b.size(),
          [&] { return with(describe(), field("swapPrefix", a.str()), field("k", k)); });
}

SuiteReport chain_ineq(const SuiteOptions& o) {
  Tally t;
  for (int n = 0; n <= std::min(o.max_n, kMaxBinarySweep); ++n) {
    sweep(t, subset_count(2, n), o.jobs, [&](std::uint64_t mask, Tally& local) {
      chain_checks(local, LeafSet::from_mask(n, mask), 2, instance_seed(o.seed, static_cast<std::uint64_t>(n), mask));
    });
  }
  for (int ell : {2, 3}) {
    sweep(t, o.samples, o.jobs, [&](std::uint64_t i, Tally& local) {
      const std::uint64_t seed = instance_seed(o.seed, 10 + static_cast<std::uint64_t>(ell), i);
      chain_checks(local, random_leaf_set(3, 3, seed), ell, derive_seed(seed, 1));
    });
  }
  return finish("chain-ineq", o, t);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "thm-ltd", "thm-ltd-mary", "thm-td-norm",  "thm-mtd-norm",    "cor-isotp",         "cor-isotp-mary",
      "cor-ss",  "cor-stable-ss", "oracle-equiv", "maximal-small-n", "counterexample-n6", "chain-ineq"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (options.max_n < 0) throw std::invalid_argument("max-n must be nonnegative");
  if (name == "thm-ltd") return thm_ltd(options);
  if (name == "thm-ltd-mary") return thm_ltd_mary(options);
  if (name == "thm-td-norm") return thm_td_norm(options);
  if (name == "thm-mtd-norm") return thm_mtd_norm(options);
  if (name == "cor-isotp") return cor_isotp(options);
  if (name == "cor-isotp-mary") return cor_isotp_mary(options);
  if (name == "cor-ss") return cor_ss(options);
  if (name == "cor-stable-ss") return cor_stable_ss(options);
  if (name == "oracle-equiv") return oracle_equiv(options);
  if (name == "maximal-small-n") return maximal_small_n(options);
  if (name == "counterexample-n6") return counterexample_n6(options);
  if (name == "chain-ineq") return chain_ineq(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Json suite_document(const SuiteReport& report) {
  Json doc;
  doc["command"] = "verify";
  doc["suite"] = report.suite;
  doc["maxN"] = report.options.max_n;
  doc["samples"] = report.options.samples;
  doc["seed"] = report.options.seed;
  doc["passed"] = report.passed();
  Json checks = Json::array();
  for (const CheckTally& t : report.checks) {
    Json entry;
    entry["name"] = t.name;
    entry["instances"] = t.instances;
    entry["failures"] = t.failures;
    if (t.first_failure) entry["firstFailure"] = *t.first_failure;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  if (!report.details.is_null()) doc["details"] = report.details;
  return doc;
}

CheckTally tightness_check(int max_n) {
  Tally t;
  for (auto [m, ell] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 3}}) {
    for (int n = 0; n <= max_n; ++n) {
      for (int d = -1; d <= n; ++d) {
        const LeafSet ball = canonical_ball(n, d, m, ell);
        const int reached = ltd(ball, ell);
        t.check("tight", ball.size() == bound_u64(n, d, m, ell) && reached == d, [&] {
          return with(set_json(ball), field("ell", ell), field("d", d), field("ltd", reached));
        });
      }
    }
  }
  auto checks = t.take();
  return std::move(checks.front());
}

CheckTally ld_agreement_check(std::size_t universe_size) {
  if (universe_size > 3) throw std::invalid_argument("ld_agreement_check: universe size must be at most 3");
  Tally t;
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << universe_size);
  for (std::uint64_t index = 0; index < count; ++index) {
    const SetFamily family = family_from_index(universe_size, index);
    const int recursion = littlestone_dim(family);
    const int search = ld_by_labeling_search(family);
    t.check("ld-recursion-vs-labeling", recursion == search, [&] {
      return with(family_json(family), field("recursion", recursion), field("labelingSearch", search));
    });
  }
  auto checks = t.take();
  return std::move(checks.front());
}

int ld_by_labeling_search(const SetFamily& family) {
  if (family.empty()) return -1;
  const std::size_t k = family.universe_size();
  const int top = std::bit_width(family.size()) - 1;  // 2^d members are needed
  for (int d = top; d > 0; --d) {
    const int nodes = (1 << d) - 1;
    double total = 1;
    for (int i = 0; i < nodes; ++i) total *= static_cast<double>(k);
    if (total > 1e7) throw std::invalid_argument("ld_by_labeling_search: too many labelings");
    const std::uint64_t count = ipow(k, nodes);
    const std::size_t full = std::size_t{1} << d;
    for (std::uint64_t index = 0; index < count; ++index) {
      if (chi_labeling(family, labeling_from_index(k, d, index)).size() == full) return d;
    }
  }
  return 0;
}

LeafSet random_leaf_set(int m, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution keep(p);
  const std::uint64_t capacity = leaf_capacity(m, n);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < capacity; ++code) {
    if (keep(rng)) codes.push_back(code);
  }
  return LeafSet::from_codes(m, n, std::move(codes));
}

SetFamily random_family(std::size_t max_universe, std::uint64_t seed) {
  if (max_universe > 16) throw std::invalid_argument("random_family: universe too large");
  std::mt19937_64 rng(seed);
  const auto k = static_cast<std::size_t>(rng() % (max_universe + 1));
  const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution keep(p);
  std::vector<Subset> members;
  for (Subset s = 0; s < (Subset{1} << k); ++s) {
    if (keep(rng)) members.push_back(s);
  }
  return SetFamily::over(k, std::move(members));
}

}  // namespace treedim::verification
