#include <doctest.h>

#include <random>

#include "support.hpp"
#include "treedim/dimension.hpp"
#include "treedim/maximal.hpp"
#include "treedim/normalization.hpp"

using namespace treedim;
using support::leaves;
using support::node;

TEST_CASE("binary normalization examples") {
  const auto t = normalize_binary(leaves(2, 2, {"01", "10"}));
  CHECK(t.final == leaves(2, 2, {"00", "10"}));
  CHECK(t.final_norm == 1);
  CHECK(td(t.initial) == 1);
  REQUIRE(t.swaps.size() == 1);
  CHECK(t.swaps[0].prefix == node("0"));
  CHECK(t.swaps[0].k == 0);
  CHECK(t.replays());

  const auto single = normalize_binary(leaves(2, 2, {"00"}));
  CHECK(single.final == leaves(2, 2, {"00"}));
  CHECK(single.swaps.empty());

  for (int n = 0; n <= 5; ++n) {
    const auto full = normalize_binary(LeafSet::full(2, n));
    CHECK(full.final == LeafSet::full(2, n));
    CHECK(full.final_norm == n);
  }
  const auto empty = normalize_binary(LeafSet(2, 3));
  CHECK(empty.final.empty());
  CHECK(empty.final_norm == -1);
  CHECK_THROWS_AS(normalize_binary(LeafSet(3, 2)), std::invalid_argument);
}

TEST_CASE("ell-ary normalization examples") {
  for (int ell : {2, 3}) {
    for (int n = 0; n <= 3; ++n) {
      const auto full = normalize_mary(LeafSet::full(3, n), ell);
      CHECK(full.final == LeafSet::full(3, n));
      CHECK(full.final_norm == n);
    }
  }
  const auto t = normalize_mary(leaves(3, 1, {"2"}), 3);
  CHECK(t.final == leaves(3, 1, {"0"}));
  CHECK(t.final_norm == 0);
  CHECK(t.replays());
  CHECK_THROWS_AS(normalize_mary(leaves(3, 1, {"2"}), 4), std::invalid_argument);
}

TEST_CASE("visiting order") {
  const auto order = internal_node_order(2, 3, TieBreak::kLexicographic);
  REQUIRE(order.size() == 7);
  CHECK(order.front() == node("00"));
  CHECK(order[3] == node("11"));
  CHECK(order[4] == node("0"));
  CHECK(order.back().is_root());
  const auto reversed = internal_node_order(2, 3, TieBreak::kReverseLexicographic);
  CHECK(reversed.front() == node("11"));
  CHECK(reversed[4] == node("1"));
  CHECK(internal_node_order(3, 2, TieBreak::kLexicographic).size() == 4);
}

TEST_CASE("binary normalization matches the string replay") {
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1U << n)); ++mask) {
      const LeafSet b = LeafSet::from_mask(n, mask);
      REQUIRE(support::strings(normalize_binary(b).final) == oracle::normalize_binary(support::strings(b), n));
    }
  }
  std::mt19937_64 rng(73);
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const LeafSet b = support::random_set(rng, 2, n);
    REQUIRE(support::strings(normalize_binary(b).final) == oracle::normalize_binary(support::strings(b), n));
  }
}

TEST_CASE("norm of the normalization is the tree dimension") {
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1U << n)); ++mask) {
      const LeafSet b = LeafSet::from_mask(n, mask);
      REQUIRE(normalize_binary(b).final_norm == oracle::plain_dimension(support::strings(b), 2));
    }
  }
  std::mt19937_64 rng(79);
  for (int i = 0; i < 800; ++i) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const LeafSet b = support::random_set(rng, 2, n);
    const auto t = normalize_binary(b);
    REQUIRE(t.final_norm == oracle::plain_dimension(support::strings(b), 2));
    REQUIRE(t.final.size() == b.size());
    REQUIRE(t.replays());
    REQUIRE(oracle::isomorphic_closures(support::strings(b), support::strings(t.final)));
    REQUIRE(normalize_binary(b, TieBreak::kReverseLexicographic).final_norm == t.final_norm);
    REQUIRE(normalize_mary(b, 2).final_norm == t.final_norm);
    REQUIRE(set_norm(normalize_binary(t.final).final, 2) == t.final_norm);
  }
}

TEST_CASE("norm of the ell-ary normalization is the meeted dimension") {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 800; ++i) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const LeafSet b = support::random_set(rng, 3, n);
    for (int ell : {2, 3}) {
      const auto t = normalize_mary(b, ell);
      REQUIRE(t.final_norm == oracle::meeted_dimension(support::strings(b), ell));
      REQUIRE(t.final_norm == set_norm(t.final, ell));
      REQUIRE(t.final.size() == b.size());
      REQUIRE(t.replays());
      REQUIRE(oracle::isomorphic_closures(support::strings(b), support::strings(t.final)));
      REQUIRE(normalize_mary(b, ell, TieBreak::kReverseLexicographic).final_norm == t.final_norm);
      REQUIRE(normalize_mary(t.final, ell).final_norm == t.final_norm);
    }
  }
}

TEST_CASE("a tampered trace does not replay") {
  auto t = normalize_binary(leaves(2, 2, {"01", "10"}));
  t.swaps.clear();
  CHECK_FALSE(t.replays());
}
