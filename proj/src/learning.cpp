#include "treedim/learning.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace treedim {

SetFamily::SetFamily(std::vector<std::string> universe, std::vector<Subset> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (universe_.size() > kMaxUniverse) throw std::invalid_argument("universe larger than 64 elements");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (universe_[i] == universe_[j]) throw std::invalid_argument("duplicate universe element '" + universe_[i] + "'");
    }
  }
  const Subset all = universe_mask();
  for (Subset s : members_) {
    if ((s & ~all) != 0) throw std::invalid_argument("family member is not a subset of the universe");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::over(std::size_t universe_size, std::vector<Subset> members) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < universe_size; ++i) names.push_back("x" + std::to_string(i));
  return SetFamily(std::move(names), std::move(members));
}

SetFamily SetFamily::powerset(std::vector<std::string> universe) {
  if (universe.size() > 20) throw std::invalid_argument("powerset of more than 20 elements");
  std::vector<Subset> members(std::size_t{1} << universe.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  return SetFamily(std::move(universe), std::move(members));
}

Subset SetFamily::universe_mask() const {
  return universe_.size() == 64 ? ~Subset{0} : ((Subset{1} << universe_.size()) - 1);
}

std::size_t SetFamily::index_of(const std::string& element) const {
  auto it = std::find(universe_.begin(), universe_.end(), element);
  if (it == universe_.end()) throw std::invalid_argument("unknown universe element '" + element + "'");
  return static_cast<std::size_t>(it - universe_.begin());
}

std::size_t Labeling::label(const Node& s) const {
  if (s.arity() != 2 || s.size() >= static_cast<std::size_t>(height)) {
    throw std::invalid_argument("labeling is defined on binary nodes shorter than its height");
  }
  std::size_t index = (std::size_t{1} << s.size()) - 1;
  std::size_t value = 0;
  for (Digit d : s.digits()) value = value * 2 + d;
  return labels.at(index + value);
}

std::size_t trace_count(const SetFamily& family, Subset a) {
  std::vector<Subset> traces;
  traces.reserve(family.size());
  for (Subset f : family.members()) traces.push_back(f & a);
  std::sort(traces.begin(), traces.end());
  return static_cast<std::size_t>(std::unique(traces.begin(), traces.end()) - traces.begin());
}

bool shatters(const SetFamily& family, Subset a) {
  if ((a & ~family.universe_mask()) != 0) throw std::invalid_argument("shatters: set is not inside the universe");
  const int k = std::popcount(a);
  if (k >= 63 || family.size() < (std::size_t{1} << k)) return false;
  return trace_count(family, a) == (std::size_t{1} << k);
}

namespace {

// Calls fn on each k-element subset of {0..n-1}; stops early when fn returns true.
template <typename Fn>
bool any_subset_of_size(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Subset s = 0;
    for (std::size_t i : pick) s |= Subset{1} << i;
    if (fn(s)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

int vc_dim(const SetFamily& family) {
  if (family.empty()) return -1;
  int best = 0;
  const int limit = std::min<int>(static_cast<int>(family.universe_size()), std::bit_width(family.size()) - 1);
  for (int k = 1; k <= limit; ++k) {
    const bool found = any_subset_of_size(family.universe_size(), static_cast<std::size_t>(k),
                                          [&](Subset a) { return shatters(family, a); });
    if (!found) break;
    best = k;
  }
  return best;
}

LeafSet chi_tuple(const SetFamily& family, std::span<const std::size_t> tuple) {
  const int n = static_cast<int>(tuple.size());
  for (std::size_t x : tuple) {
    if (x >= family.universe_size()) throw std::invalid_argument("tuple element outside the universe");
  }
  std::vector<std::uint64_t> codes;
  codes.reserve(family.size());
  for (Subset f : family.members()) {
    std::uint64_t code = 0;
    for (std::size_t x : tuple) code = code * 2 + ((f >> x) & 1U);
    codes.push_back(code);
  }
  return LeafSet::from_codes(2, n, std::move(codes));
}

LeafSet chi_labeling(const SetFamily& family, const Labeling& labeling) {
  const int n = labeling.height;
  if (n < 0) throw std::invalid_argument("labeling height must be nonnegative");
  if (labeling.labels.size() != (std::size_t{1} << n) - 1) {
    throw std::invalid_argument("labeling must label every node of length < n");
  }
  for (std::size_t x : labeling.labels) {
    if (x >= family.universe_size()) throw std::invalid_argument("label outside the universe");
  }
  std::vector<std::uint64_t> codes;
  codes.reserve(family.size());
  for (Subset f : family.members()) {
    std::uint64_t code = 0;
    for (int depth = 0; depth < n; ++depth) {
      const std::size_t index = (std::size_t{1} << depth) - 1 + code;
      code = code * 2 + ((f >> labeling.labels[index]) & 1U);
    }
    codes.push_back(code);
  }
  return LeafSet::from_codes(2, n, std::move(codes));
}

namespace {

class LittlestoneSolver {
 public:
  explicit LittlestoneSolver(std::size_t universe_size) : universe_size_(universe_size) {}

  int solve(const std::vector<Subset>& members) {
    if (members.empty()) return -1;
    if (members.size() == 1) return 0;
    if (auto it = memo_.find(members); it != memo_.end()) return it->second;
    // A complete mistake tree of depth d needs 2^d distinct members.
    const int ceiling = std::bit_width(members.size()) - 1;
    int best = 0;
    std::vector<Subset> with;
    std::vector<Subset> without;
    for (std::size_t x = 0; x < universe_size_ && best < ceiling; ++x) {
      with.clear();
      without.clear();
      for (Subset f : members) ((f >> x) & 1U ? with : without).push_back(f);
      if (with.empty() || without.empty()) continue;
      if (std::min(with.size(), without.size()) < (std::size_t{1} << best)) continue;
      const int lo = std::min(solve(with), solve(without));
      best = std::max(best, lo + 1);
    }
    memo_.emplace(members, best);
    return best;
  }

 private:
  std::size_t universe_size_;
  std::map<std::vector<Subset>, int> memo_;
};

}  // namespace

int littlestone_dim(const SetFamily& family) {
  return LittlestoneSolver(family.universe_size()).solve(family.members());
}

}  // namespace treedim
