#include "treedim/embedding.hpp"

#include <stdexcept>

namespace treedim {

std::string_view to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::kPlain:
      return "plain";
    case EmbeddingKind::kMeeted:
      return "meeted";
    case EmbeddingKind::kLeveled:
      return "leveled";
  }
  return "?";
}

EmbeddingKind parse_embedding_kind(std::string_view text) {
  if (text == "plain" || text == "td") return EmbeddingKind::kPlain;
  if (text == "meeted" || text == "mtd") return EmbeddingKind::kMeeted;
  if (text == "leveled" || text == "ltd") return EmbeddingKind::kLeveled;
  throw std::invalid_argument("unknown embedding kind '" + std::string(text) + "'");
}

PatternTree::PatternTree(int height, int ell) : height_(height), ell_(ell), size_(0) {
  if (height < 0) throw std::invalid_argument("pattern height must be nonnegative");
  if (ell < 2) throw std::invalid_argument("pattern arity must be at least 2");
  std::size_t width = 1;
  for (int k = 0; k <= height; ++k) {
    level_begin_.push_back(size_);
    size_ += width;
    width *= static_cast<std::size_t>(ell);
  }
  level_begin_.push_back(size_);
  depth_.resize(size_);
  for (int k = 0; k <= height; ++k) {
    for (std::size_t i = level_begin_[static_cast<std::size_t>(k)]; i < level_begin_[static_cast<std::size_t>(k) + 1]; ++i) {
      depth_[i] = k;
    }
  }
  constexpr std::size_t kMaxTabulated = 1024;
  if (size_ <= kMaxTabulated) {
    std::vector<std::uint32_t> table(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) table[i * size_ + j] = static_cast<std::uint32_t>(meet(i, j));
    }
    meet_table_ = std::move(table);
  }
}

std::size_t PatternTree::meet(std::size_t i, std::size_t j) const {
  if (!meet_table_.empty()) return meet_table_[i * size_ + j];
  int di = depth(i);
  int dj = depth(j);
  for (; di > dj; --di) i = parent(i);
  for (; dj > di; --dj) j = parent(j);
  while (i != j) {
    i = parent(i);
    j = parent(j);
  }
  return i;
}

bool PatternTree::precedes(std::size_t i, std::size_t j) const {
  return depth(i) < depth(j) && meet(i, j) == i;
}

Node PatternTree::node(std::size_t i) const {
  std::vector<Digit> digits(static_cast<std::size_t>(depth(i)));
  for (std::size_t k = digits.size(); k > 0; --k) {
    digits[k - 1] = static_cast<Digit>((i - 1) % static_cast<std::size_t>(ell_));
    i = parent(i);
  }
  return Node(ell_, std::move(digits));
}

std::size_t PatternTree::index_of(const Node& a) const {
  if (a.size() > static_cast<std::size_t>(height_)) throw std::invalid_argument("node deeper than pattern");
  std::size_t i = 0;
  for (Digit d : a.digits()) {
    if (d >= ell_) throw std::invalid_argument("pattern digit out of range");
    i = first_child(i) + d;
  }
  return i;
}

std::vector<std::pair<Node, Node>> EmbeddingWitness::pairs() const {
  PatternTree pattern(height, ell);
  std::vector<std::pair<Node, Node>> out;
  for (std::size_t i = 0; i < image.size(); ++i) out.emplace_back(pattern.node(i), image[i]);
  return out;
}

namespace {

// Pairwise compatibility of pattern nodes (i, j) mapped to target ids (u, v).
bool compatible(const PatternTree& pattern, const BranchTrie& target, EmbeddingKind kind, std::size_t i,
                std::size_t j, BranchTrie::Id u, BranchTrie::Id v, BranchTrie::Id meet_image) {
  if (u == v) return false;
  const bool target_uv = target.depth(u) < target.depth(v) && target.is_prefix(u, v);
  const bool target_vu = target.depth(v) < target.depth(u) && target.is_prefix(v, u);
  if (pattern.precedes(i, j) != target_uv) return false;
  if (pattern.precedes(j, i) != target_vu) return false;
  if (kind == EmbeddingKind::kPlain) return true;
  if (target.meet(u, v) != meet_image) return false;
  if (kind == EmbeddingKind::kMeeted) return true;
  return (pattern.depth(i) == pattern.depth(j)) == (target.depth(u) == target.depth(v));
}

class Search {
 public:
  Search(const PatternTree& pattern, const BranchTrie& target, EmbeddingKind kind)
      : pattern_(pattern), target_(target), kind_(kind), image_(pattern.size(), BranchTrie::kNone) {
    depth_of_.reserve(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) depth_of_.push_back(pattern.depth(i));
  }

  // Empty `levels` leaves image depths unconstrained.
  bool run(std::vector<int> levels) {
    levels_ = std::move(levels);
    return assign(0);
  }

  const std::vector<BranchTrie::Id>& image() const { return image_; }

 private:
  bool assign(std::size_t i) {
    if (i == pattern_.size()) return true;
    const int need = pattern_.height() - depth_of_[i];
    int lo_depth = 0;
    BranchTrie::Id anchor = BranchTrie::kNone;
    if (i > 0) {
      anchor = image_[pattern_.parent(i)];
      lo_depth = target_.depth(anchor) + 1;
    }
    int hi_depth = target_.height() - need;
    if (!levels_.empty()) {
      lo_depth = std::max(lo_depth, levels_[static_cast<std::size_t>(depth_of_[i])]);
      hi_depth = std::min(hi_depth, levels_[static_cast<std::size_t>(depth_of_[i])]);
    }
    // Siblings are interchangeable in the pattern; fix their images in
    // increasing canonical order.
    BranchTrie::Id floor = BranchTrie::kNone;
    if (i > 0 && i != pattern_.first_child(pattern_.parent(i))) floor = image_[i - 1];

    for (int k = lo_depth; k <= hi_depth; ++k) {
      for (BranchTrie::Id v = std::max(target_.level_begin(k), floor + 1); v < target_.level_begin(k + 1); ++v) {
        if (target_.subtree_height(v) < need) continue;
        if (anchor != BranchTrie::kNone && !target_.is_prefix(anchor, v)) continue;
        if (!consistent(i, v)) continue;
        image_[i] = v;
        if (assign(i + 1)) return true;
      }
    }
    image_[i] = BranchTrie::kNone;
    return false;
  }

  bool consistent(std::size_t i, BranchTrie::Id v) const {
    for (std::size_t j = 0; j < i; ++j) {
      const BranchTrie::Id meet_image = kind_ == EmbeddingKind::kPlain ? BranchTrie::kNone
                                                                        : image_[pattern_.meet(i, j)];
      if (!compatible(pattern_, target_, kind_, i, j, v, image_[j], meet_image)) return false;
    }
    return true;
  }

  const PatternTree& pattern_;
  const BranchTrie& target_;
  EmbeddingKind kind_;
  std::vector<BranchTrie::Id> image_;
  std::vector<int> depth_of_;
  std::vector<int> levels_;
};

// Calls fn on every strictly increasing vector of `count` values in [0, top].
template <typename Fn>
bool for_each_level_vector(int count, int top, Fn&& fn) {
  std::vector<int> levels(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) levels[static_cast<std::size_t>(i)] = i;
  if (count > top + 1) return false;
  while (true) {
    if (fn(levels)) return true;
    int i = count - 1;
    while (i >= 0 && levels[static_cast<std::size_t>(i)] == top - (count - 1 - i)) --i;
    if (i < 0) return false;
    ++levels[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < count; ++j) levels[static_cast<std::size_t>(j)] = levels[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace

bool is_embedding(const EmbeddingWitness& witness, EmbeddingKind kind, const BranchTrie& target) {
  PatternTree pattern(witness.height, witness.ell);
  if (witness.image.size() != pattern.size()) {
    throw std::invalid_argument("witness does not cover the pattern tree");
  }
  std::vector<BranchTrie::Id> ids;
  ids.reserve(witness.image.size());
  for (const Node& a : witness.image) {
    const BranchTrie::Id v = target.find(a);
    if (v == BranchTrie::kNone) {
      throw std::invalid_argument("witness image '" + a.str() + "' is not a node of the target");
    }
    ids.push_back(v);
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j) continue;
      if (!compatible(pattern, target, kind, i, j, ids[i], ids[j], ids[pattern.meet(i, j)])) return false;
    }
  }
  return true;
}

std::optional<EmbeddingWitness> embed_exists(int d, int ell, EmbeddingKind kind, const BranchTrie& target) {
  if (d < 0) throw std::invalid_argument("pattern height must be nonnegative");
  check_ell(ell, target.arity());
  if (target.empty() || d > target.height()) return std::nullopt;

  PatternTree pattern(d, ell);
  Search search(pattern, target, kind);
  bool found = false;
  if (kind == EmbeddingKind::kLeveled) {
    found = for_each_level_vector(d + 1, target.height(),
                                  [&](const std::vector<int>& levels) { return search.run(levels); });
  } else {
    found = search.run({});
  }
  if (!found) return std::nullopt;

  EmbeddingWitness witness{d, ell, {}};
  witness.image.reserve(pattern.size());
  for (BranchTrie::Id v : search.image()) witness.image.push_back(target.node(v));
  return witness;
}

std::pair<int, std::optional<EmbeddingWitness>> brute_dimension_with_witness(const LeafSet& leaves, int ell,
                                                                            EmbeddingKind kind) {
  check_ell(ell, leaves.arity());
  if (leaves.empty()) return {-1, std::nullopt};
  const BranchTrie trie(leaves);
  std::optional<EmbeddingWitness> best;
  int d = 0;
  for (; d <= leaves.height(); ++d) {
    auto w = embed_exists(d, ell, kind, trie);
    if (!w) break;
    best = std::move(w);
  }
  return {d - 1, std::move(best)};
}

int brute_dimension(const LeafSet& leaves, int ell, EmbeddingKind kind) {
  return brute_dimension_with_witness(leaves, ell, kind).first;
}

}  // namespace treedim
