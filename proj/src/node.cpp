#include "treedim/node.hpp"

#include <algorithm>
#include <stdexcept>

namespace treedim {

namespace {

void check_arity(int arity) {
  if (arity < 2 || arity > kMaxArity) {
    throw std::invalid_argument("arity must be in [2, " + std::to_string(kMaxArity) + "], got " +
                                std::to_string(arity));
  }
}

}  // namespace

void check_ell(int ell, int arity) {
  if (ell < 2 || ell > arity) {
    throw std::invalid_argument("ell must satisfy 2 <= ell <= m (m = " + std::to_string(arity) +
                                "), got " + std::to_string(ell));
  }
}

Node::Node(int arity) : arity_(arity) { check_arity(arity); }

Node::Node(int arity, std::vector<Digit> digits) : arity_(arity), digits_(std::move(digits)) {
  check_arity(arity);
  for (Digit d : digits_) {
    if (d >= arity) {
      throw std::invalid_argument("digit " + std::to_string(d) + " out of range for arity " +
                                  std::to_string(arity));
    }
  }
}

Node Node::parse(std::string_view text, int arity) {
  if (text == "-") text = {};
  std::vector<Digit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a digit: '" + std::string(1, c) + "'");
    }
    digits.push_back(static_cast<Digit>(c - '0'));
  }
  return Node(arity, std::move(digits));
}

Node Node::child(int digit) const {
  if (digit < 0 || digit >= arity_) throw std::invalid_argument("child digit out of range");
  Node out = *this;
  out.digits_.push_back(static_cast<Digit>(digit));
  return out;
}

Node Node::prefix(std::size_t length) const {
  Node out(arity_);
  out.digits_.assign(digits_.begin(), digits_.begin() + std::min(length, digits_.size()));
  return out;
}

bool Node::is_prefix_of(const Node& other) const {
  return size() <= other.size() && std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

bool Node::precedes(const Node& other) const { return size() < other.size() && is_prefix_of(other); }

std::string Node::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (Digit d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

std::strong_ordering operator<=>(const Node& a, const Node& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.digits_ <=> b.digits_; c != 0) return c;
  return a.arity_ <=> b.arity_;
}

Node meet(const Node& a, const Node& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("meet of nodes with different arity");
  std::size_t len = 0;
  const std::size_t limit = std::min(a.size(), b.size());
  while (len < limit && a[len] == b[len]) ++len;
  return a.prefix(len);
}

int norm(const Node& a) {
  if (a.arity() != 2) throw std::invalid_argument("norm is defined for binary nodes; use norm_ell");
  int sum = 0;
  for (Digit d : a.digits()) sum += d;
  return sum;
}

int norm_ell(const Node& a, int ell) {
  check_ell(ell, a.arity());
  return static_cast<int>(
      std::count_if(a.digits().begin(), a.digits().end(), [ell](Digit d) { return d >= ell - 1; }));
}

Node swap(const Node& a, int k, const Node& x) {
  if (a.arity() != x.arity()) throw std::invalid_argument("swap of nodes with different arity");
  if (k < 0 || k >= a.arity() - 1) throw std::invalid_argument("swap index k must satisfy 0 <= k < m-1");
  if (x.size() <= a.size() || !a.is_prefix_of(x)) return x;
  const Digit at = x[a.size()];
  if (at != k && at != k + 1) return x;
  std::vector<Digit> digits(x.digits().begin(), x.digits().end());
  digits[a.size()] = static_cast<Digit>(at == k ? k + 1 : k);
  return Node(x.arity(), std::move(digits));
}

}  // namespace treedim
