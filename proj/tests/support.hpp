#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "treedim/leaf_set.hpp"
#include "treedim/node.hpp"

namespace support {

inline treedim::Node node(std::string_view text, int m = 2) { return treedim::Node::parse(text, m); }

inline std::vector<treedim::Node> nodes(std::initializer_list<std::string_view> texts, int m = 2) {
  std::vector<treedim::Node> out;
  for (auto t : texts) out.push_back(node(t, m));
  return out;
}

inline treedim::LeafSet leaves(int m, int n, std::initializer_list<std::string_view> texts) {
  return treedim::LeafSet(m, n, nodes(texts, m));
}

inline oracle::Strings strings(const treedim::LeafSet& b) {
  oracle::Strings out;
  for (const auto& x : b.leaves()) out.insert(x.str());
  return out;
}

inline oracle::Strings strings(const std::vector<treedim::Node>& xs) {
  oracle::Strings out;
  for (const auto& x : xs) out.insert(x.str());
  return out;
}

inline treedim::LeafSet from_strings(int m, int n, const oracle::Strings& s) {
  std::vector<treedim::Node> xs;
  for (const auto& t : s) xs.push_back(node(t, m));
  return treedim::LeafSet(m, n, xs);
}

// Each leaf kept with probability p, p uniform.
inline treedim::LeafSet random_set(std::mt19937_64& rng, int m, int n) {
  const double p = std::uniform_real_distribution<double>(0, 1)(rng);
  std::bernoulli_distribution keep(p);
  std::vector<std::uint64_t> codes;
  for (std::uint64_t c = 0; c < treedim::leaf_capacity(m, n); ++c) {
    if (keep(rng)) codes.push_back(c);
  }
  return treedim::LeafSet::from_codes(m, n, std::move(codes));
}

inline treedim::Node random_node(std::mt19937_64& rng, int m, int max_len) {
  const auto len = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_len + 1));
  std::vector<treedim::Digit> digits(len);
  for (auto& d : digits) d = static_cast<treedim::Digit>(rng() % static_cast<std::uint64_t>(m));
  return treedim::Node(m, std::move(digits));
}

// Four leaves of 2^3 with LTD 1 and TD 2.
inline treedim::LeafSet small_binary() { return leaves(2, 3, {"000", "010", "100", "101"}); }

// A ternary set of height 5 with LTD_3 = 1, MTD_3 = 2 and TD_3 = 3.
inline treedim::LeafSet ternary_gap() {
  std::vector<std::string> texts;
  for (std::string x : {"000", "001", "002", "100", "110", "120", "200", "201", "202"}) {
    for (std::string tail : {"00", "10", "11"}) texts.push_back(x + tail);
  }
  std::vector<treedim::Node> xs;
  for (const auto& t : texts) xs.push_back(node(t, 3));
  return treedim::LeafSet(3, 5, xs);
}

}  // namespace support
