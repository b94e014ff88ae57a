#include <doctest.h>

#include <random>

#include "support.hpp"
#include "treedim/dimension.hpp"
#include "treedim/learning.hpp"
#include "treedim/suites.hpp"

using namespace treedim;
using support::leaves;

namespace {

// Bit 0 is x, bit 1 is y.
SetFamily xy(std::vector<Subset> members) { return SetFamily({"x", "y"}, std::move(members)); }

oracle::Family to_oracle(const SetFamily& f) {
  oracle::Family out;
  for (Subset s : f.members()) {
    oracle::Member m;
    for (std::size_t i = 0; i < f.universe_size(); ++i) {
      if ((s >> i) & 1U) m.insert(static_cast<int>(i));
    }
    out.insert(m);
  }
  return out;
}

SetFamily family_from_index(std::size_t k, std::uint64_t index) {
  std::vector<Subset> members;
  for (Subset s = 0; s < (Subset{1} << k); ++s) {
    if ((index >> s) & 1U) members.push_back(s);
  }
  return SetFamily::over(k, members);
}

}  // namespace

TEST_CASE("families") {
  const SetFamily f = xy({3, 0, 1, 0});
  CHECK(f.members() == std::vector<Subset>{0, 1, 3});
  CHECK(f.index_of("y") == 1);
  CHECK_THROWS_AS(f.index_of("z"), std::invalid_argument);
  CHECK_THROWS_AS(xy({4}), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily({"x", "x"}, {}), std::invalid_argument);
  CHECK(SetFamily::powerset({"a", "b", "c"}).size() == 8);
  CHECK(SetFamily::over(3, {}).universe()[2] == "x2");
}

TEST_CASE("shattering examples") {
  const SetFamily f = xy({0, 1, 3});
  CHECK(shatters(f, 0b10));
  CHECK_FALSE(shatters(f, 0b11));
  CHECK(shatters(f, 0));
  CHECK_FALSE(shatters(xy({}), 0));
  CHECK(trace_count(f, 0b11) == 3);
  CHECK_THROWS_AS(shatters(f, 0b100), std::invalid_argument);
}

TEST_CASE("VC dimension examples") {
  CHECK(vc_dim(SetFamily::powerset({"x", "y"})) == 2);
  CHECK(vc_dim(xy({})) == -1);
  CHECK(vc_dim(xy({0, 1, 2})) == 1);
  CHECK(vc_dim(xy({0})) == 0);
}

TEST_CASE("characteristic images") {
  const SetFamily f = xy({0, 1});
  const std::vector<std::size_t> tuple{0, 1};
  CHECK(chi_tuple(f, tuple) == leaves(2, 2, {"00", "10"}));
  CHECK(ltd(chi_tuple(f, tuple)) == 1);
  CHECK(chi_tuple(xy({}), tuple).empty());
  const std::vector<std::size_t> constant{0, 0};
  for (const Node& b : chi_tuple(SetFamily::powerset({"x", "y"}), constant).leaves()) CHECK(b[0] == b[1]);
  const std::vector<std::size_t> outside{2};
  CHECK_THROWS_AS(chi_tuple(f, outside), std::invalid_argument);
  CHECK(chi_tuple(f, std::vector<std::size_t>{}).size() == 1);

  const SetFamily g = xy({0, 1, 3});
  const Labeling alpha{2, {0, 1, 1}};
  CHECK(alpha.label(support::node("1")) == 1);
  CHECK(chi_labeling(g, alpha) == leaves(2, 2, {"00", "10", "11"}));
  CHECK(chi_labeling(xy({}), alpha).empty());
  CHECK(chi_labeling(SetFamily::powerset({"x", "y"}), alpha) == LeafSet::full(2, 2));
  CHECK_THROWS_AS(chi_labeling(g, Labeling{2, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(chi_labeling(g, Labeling{1, {5}}), std::invalid_argument);
}

TEST_CASE("Littlestone dimension examples") {
  CHECK(littlestone_dim(SetFamily::powerset({"x", "y"})) == 2);
  CHECK(littlestone_dim(xy({0})) == 0);
  CHECK(littlestone_dim(xy({})) == -1);
  CHECK(verification::ld_by_labeling_search(SetFamily::powerset({"x", "y"})) == 2);
  CHECK(verification::ld_by_labeling_search(xy({0})) == 0);
  CHECK(verification::ld_by_labeling_search(xy({})) == -1);
  // Thresholds on a line: VC 1, LD grows like log of the size.
  CHECK(littlestone_dim(SetFamily::over(3, {0b000, 0b001, 0b011, 0b111})) == 2);
  CHECK(vc_dim(SetFamily::over(3, {0b000, 0b001, 0b011, 0b111})) == 1);
}

TEST_CASE("VC and LD match the set oracles on every small family") {
  for (std::size_t k = 0; k <= 3; ++k) {
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << (1U << k)); ++index) {
      const SetFamily f = family_from_index(k, index);
      const auto o = to_oracle(f);
      REQUIRE(vc_dim(f) == oracle::vc(o, static_cast<int>(k)));
      REQUIRE(littlestone_dim(f) == oracle::littlestone(o, static_cast<int>(k)));
      REQUIRE(littlestone_dim(f) == verification::ld_by_labeling_search(f));
      for (Subset a = 0; a < (Subset{1} << k); ++a) {
        oracle::Member am;
        for (std::size_t i = 0; i < k; ++i) {
          if ((a >> i) & 1U) am.insert(static_cast<int>(i));
        }
        REQUIRE(shatters(f, a) == (!o.empty() && oracle::shatters(o, am)));
      }
    }
  }
}

TEST_CASE("VC and LD match the set oracles on random families") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 200; ++i) {
    const SetFamily f = verification::random_family(5, rng());
    const auto o = to_oracle(f);
    const int k = static_cast<int>(f.universe_size());
    REQUIRE(vc_dim(f) == oracle::vc(o, k));
    REQUIRE(littlestone_dim(f) == oracle::littlestone(o, k));
    REQUIRE(vc_dim(f) <= littlestone_dim(f));
  }
}

TEST_CASE("chi images respect VC and LD") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 300; ++i) {
    const SetFamily f = verification::random_family(5, rng());
    const std::size_t k = f.universe_size();
    if (k == 0) continue;
    const int vc = vc_dim(f);
    const int ld = littlestone_dim(f);
    for (int rep = 0; rep < 10; ++rep) {
      const int n = static_cast<int>(rng() % 6);
      std::vector<std::size_t> tuple(static_cast<std::size_t>(n));
      for (auto& x : tuple) x = rng() % k;
      const LeafSet image = chi_tuple(f, tuple);
      REQUIRE(ltd(image) <= vc);
      REQUIRE(image.size() <= oracle::sum_bound(n, ltd(image), 2, 2));

      Labeling alpha{n, std::vector<std::size_t>((std::size_t{1} << n) - 1)};
      for (auto& x : alpha.labels) x = rng() % k;
      const LeafSet thicket = chi_labeling(f, alpha);
      REQUIRE(ltd(thicket) <= td(thicket));
      REQUIRE(td(thicket) <= ld);
      REQUIRE(thicket.size() <= oracle::sum_bound(n, ld, 2, 2));
    }
  }
}
