#include "treedim/leaf_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedim {

std::uint64_t leaf_capacity(int arity, int height) {
  if (height < 0) throw std::invalid_argument("height must be nonnegative");
  std::uint64_t cap = 1;
  for (int i = 0; i < height; ++i) {
    if (cap > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(arity)) {
      throw std::invalid_argument("m^n exceeds 2^62; tree too large");
    }
    cap *= static_cast<std::uint64_t>(arity);
  }
  return cap;
}

LeafSet::LeafSet(int arity, int height)
    : arity_(arity), height_(height), capacity_(0) {
  Node probe(arity);  // validates arity
  capacity_ = leaf_capacity(arity, height);
}

LeafSet::LeafSet(int arity, int height, std::vector<std::uint64_t> sorted_codes, bool)
    : LeafSet(arity, height) {
  codes_ = std::move(sorted_codes);
}

LeafSet::LeafSet(int arity, int height, const std::vector<Node>& leaves) : LeafSet(arity, height) {
  codes_.reserve(leaves.size());
  for (const Node& b : leaves) codes_.push_back(code_of(b));
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

LeafSet LeafSet::from_codes(int arity, int height, std::vector<std::uint64_t> codes) {
  LeafSet out(arity, height);
  for (std::uint64_t c : codes) {
    if (c >= out.capacity_) throw std::invalid_argument("leaf code out of range");
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  out.codes_ = std::move(codes);
  return out;
}

LeafSet LeafSet::from_mask(int height, std::uint64_t mask) {
  if (height > kMaxMaskHeight) throw std::invalid_argument("mask view needs height <= 6");
  LeafSet out(2, height);
  if (height < kMaxMaskHeight && (mask >> out.capacity_) != 0) {
    throw std::invalid_argument("mask has bits beyond 2^n");
  }
  for (std::uint64_t i = 0; i < out.capacity_; ++i) {
    if ((mask >> i) & 1U) out.codes_.push_back(i);
  }
  return out;
}

LeafSet LeafSet::full(int arity, int height) {
  LeafSet out(arity, height);
  out.codes_.resize(out.capacity_);
  for (std::uint64_t i = 0; i < out.capacity_; ++i) out.codes_[i] = i;
  return out;
}

std::vector<Node> LeafSet::leaves() const {
  std::vector<Node> out;
  out.reserve(codes_.size());
  for (std::uint64_t c : codes_) out.push_back(leaf(c));
  return out;
}

Node LeafSet::leaf(std::uint64_t code) const {
  if (code >= capacity_) throw std::invalid_argument("leaf code out of range");
  std::vector<Digit> digits(static_cast<std::size_t>(height_));
  for (int p = height_ - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<Digit>(code % static_cast<std::uint64_t>(arity_));
    code /= static_cast<std::uint64_t>(arity_);
  }
  return Node(arity_, std::move(digits));
}

std::uint64_t LeafSet::code_of(const Node& b) const {
  if (b.arity() != arity_) throw std::invalid_argument("leaf arity mismatch");
  if (b.size() != static_cast<std::size_t>(height_)) {
    throw std::invalid_argument("leaf '" + b.str() + "' does not have length " + std::to_string(height_));
  }
  std::uint64_t code = 0;
  for (Digit d : b.digits()) code = code * static_cast<std::uint64_t>(arity_) + d;
  return code;
}

bool LeafSet::contains(const Node& b) const {
  return b.arity() == arity_ && b.size() == static_cast<std::size_t>(height_) && contains_code(code_of(b));
}

bool LeafSet::contains_code(std::uint64_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

LeafSet LeafSet::with_code(std::uint64_t code) const {
  if (code >= capacity_) throw std::invalid_argument("leaf code out of range");
  std::vector<std::uint64_t> codes = codes_;
  auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) codes.insert(it, code);
  return LeafSet(arity_, height_, std::move(codes), true);
}

std::uint64_t LeafSet::mask() const {
  if (!has_mask_view()) throw std::invalid_argument("mask view needs arity 2 and height <= 6");
  std::uint64_t mask = 0;
  for (std::uint64_t c : codes_) mask |= std::uint64_t{1} << c;
  return mask;
}

std::vector<Node> branch_nodes(const LeafSet& leaves) {
  std::vector<Node> out;
  for (const Node& b : leaves.leaves()) {
    for (std::size_t len = 0; len <= b.size(); ++len) out.push_back(b.prefix(len));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int set_norm(std::span<const Node> nodes, int ell) {
  int best = -1;
  for (const Node& a : nodes) best = std::max(best, norm_ell(a, ell));
  return best;
}

int set_norm(const LeafSet& leaves, int ell) {
  check_ell(ell, leaves.arity());
  int best = -1;
  for (std::uint64_t code : leaves.codes()) {
    int count = 0;
    for (int p = 0; p < leaves.height(); ++p) {
      if (code % static_cast<std::uint64_t>(leaves.arity()) >= static_cast<std::uint64_t>(ell - 1)) ++count;
      code /= static_cast<std::uint64_t>(leaves.arity());
    }
    best = std::max(best, count);
  }
  return best;
}

std::vector<Node> restrict(std::span<const Node> nodes, const Node& a) {
  std::vector<Node> out;
  for (const Node& x : nodes) {
    if (a.is_prefix_of(x)) out.push_back(x);
  }
  return out;
}

namespace {

// Range [lo, hi) of leaf codes lying below prefix `a`.
std::pair<std::uint64_t, std::uint64_t> code_range(const LeafSet& leaves, const Node& a) {
  if (a.arity() != leaves.arity()) throw std::invalid_argument("prefix arity mismatch");
  if (a.size() > static_cast<std::size_t>(leaves.height())) return {0, 0};
  std::uint64_t lo = 0;
  for (Digit d : a.digits()) lo = lo * static_cast<std::uint64_t>(leaves.arity()) + d;
  const std::uint64_t span = leaf_capacity(leaves.arity(), leaves.height() - static_cast<int>(a.size()));
  return {lo * span, lo * span + span};
}

}  // namespace

LeafSet restrict(const LeafSet& leaves, const Node& a) {
  const auto [lo, hi] = code_range(leaves, a);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t c : leaves.codes()) {
    if (c >= lo && c < hi) codes.push_back(c);
  }
  return LeafSet::from_codes(leaves.arity(), leaves.height(), std::move(codes));
}

LeafSet apply_swap(const LeafSet& leaves, const Node& a, int k) {
  if (a.size() >= static_cast<std::size_t>(leaves.height())) {
    throw std::invalid_argument("swap prefix must be shorter than the height");
  }
  if (k < 0 || k >= leaves.arity() - 1) throw std::invalid_argument("swap index k must satisfy 0 <= k < m-1");
  const auto [lo, hi] = code_range(leaves, a);
  const std::uint64_t block = (hi - lo) / static_cast<std::uint64_t>(leaves.arity());
  const std::uint64_t first = lo + block * static_cast<std::uint64_t>(k);
  const std::uint64_t second = first + block;
  std::vector<std::uint64_t> codes;
  codes.reserve(leaves.size());
  for (std::uint64_t c : leaves.codes()) {
    if (c >= first && c < second) {
      codes.push_back(c + block);
    } else if (c >= second && c < second + block) {
      codes.push_back(c - block);
    } else {
      codes.push_back(c);
    }
  }
  return LeafSet::from_codes(leaves.arity(), leaves.height(), std::move(codes));
}

SplitProjection split_projection(const LeafSet& leaves, int ell) {
  if (leaves.height() == 0) throw std::invalid_argument("split_projection needs height >= 1");
  check_ell(ell, leaves.arity());
  const auto m = static_cast<std::uint64_t>(leaves.arity());
  std::vector<std::uint64_t> prefixes;
  std::vector<std::uint64_t> branching;
  auto codes = leaves.codes();
  for (std::size_t i = 0; i < codes.size();) {
    const std::uint64_t parent = codes[i] / m;
    std::size_t j = i;
    while (j < codes.size() && codes[j] / m == parent) ++j;
    prefixes.push_back(parent);
    if (j - i >= static_cast<std::size_t>(ell)) branching.push_back(parent);
    i = j;
  }
  return {LeafSet::from_codes(leaves.arity(), leaves.height() - 1, std::move(prefixes)),
          LeafSet::from_codes(leaves.arity(), leaves.height() - 1, std::move(branching))};
}

}  // namespace treedim
