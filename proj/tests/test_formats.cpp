#include <doctest.h>

#include <random>

#include "support.hpp"
#include "treedim/embedding.hpp"
#include "treedim/formats.hpp"
#include "treedim/maximal.hpp"
#include "treedim/report.hpp"

using namespace treedim;
using support::leaves;

namespace {

std::size_t error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

const char* kSmallBinary = "# small example\n2 3\n000\n010\n100\n101\n";

}  // namespace

TEST_CASE("leaf set files") {
  CHECK(parse_leaf_set(kSmallBinary) == support::small_binary());
  CHECK(parse_leaf_set("  3 2 \n\n# x\n 21\n00\n") == leaves(3, 2, {"00", "21"}));
  CHECK(parse_leaf_set("2 0\n-\n") == leaves(2, 0, {""}));
  CHECK(parse_leaf_set("2 3\n").empty());
  CHECK(render_leaf_set(support::small_binary()) == "2 3\n000\n010\n100\n101\n");
  CHECK(render_leaf_set(leaves(2, 0, {""})) == "2 0\n-\n");
}

TEST_CASE("leaf set file errors carry line numbers") {
  CHECK(error_line([] { parse_leaf_set("2 3\n000\n\n000\n"); }) == 4);
  CHECK(error_line([] { parse_leaf_set("# c\n2 3\n020\n"); }) == 3);
  CHECK(error_line([] { parse_leaf_set("2 3\n00\n"); }) == 2);
  CHECK(error_line([] { parse_leaf_set("# only a comment\n"); }) == 0);
  CHECK(error_line([] { parse_leaf_set("\n1 3\n"); }) == 2);
  CHECK(error_line([] { parse_leaf_set("2 x\n"); }) == 1);
  CHECK(error_line([] { parse_leaf_set("2 3 4\n"); }) == 1);
  CHECK(error_line([] { parse_leaf_set("10 40\n"); }) == 1);
  try {
    parse_leaf_set("2 3\n000\n000\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("leaf set round trip") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 300; ++i) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const LeafSet b = support::random_set(rng, m, static_cast<int>(rng() % 4));
    REQUIRE(parse_leaf_set(render_leaf_set(b)) == b);
  }
}

TEST_CASE("family files") {
  const SetFamily f = parse_family("universe 2 x y\n00\n10\n11\n");
  CHECK(f.universe() == std::vector<std::string>{"x", "y"});
  CHECK(f.members() == std::vector<Subset>{0, 1, 3});
  CHECK(parse_family("universe 3\n").universe()[1] == "x1");
  CHECK(parse_family("universe 0\n-\n").size() == 1);
  CHECK(render_family(f) == "universe 2 x y\n00\n10\n11\n");
  CHECK(error_line([] { parse_family("universe 2\n10\n10\n"); }) == 3);
  CHECK(error_line([] { parse_family("universe 2\n1\n"); }) == 2);
  CHECK(error_line([] { parse_family("universe 2\n12\n"); }) == 2);
  CHECK(error_line([] { parse_family("universe 2 a\n"); }) == 1);
  CHECK(error_line([] { parse_family("family 2\n"); }) == 1);
  CHECK(error_line([] { parse_family("universe 2 a a\n"); }) == 1);
  std::mt19937_64 rng(109);
  for (int i = 0; i < 200; ++i) {
    const auto k = static_cast<std::size_t>(rng() % 6);
    std::vector<Subset> members;
    for (Subset s = 0; s < (Subset{1} << k); ++s) {
      if (rng() % 2) members.push_back(s);
    }
    const SetFamily g = SetFamily::over(k, members);
    REQUIRE(parse_family(render_family(g)) == g);
  }
}

TEST_CASE("labeling files") {
  const SetFamily f = parse_family("universe 2 x y\n00\n10\n11\n");
  const Labeling alpha = parse_labeling("labeling 2\n1 y\n- x\n0 y\n", f);
  CHECK(alpha.labels == std::vector<std::size_t>{0, 1, 1});
  CHECK(render_labeling(alpha, f) == "labeling 2\n- x\n0 y\n1 y\n");
  CHECK(parse_labeling(render_labeling(alpha, f), f).labels == alpha.labels);
  CHECK(parse_labeling("labeling 0\n", f).labels.empty());
  CHECK(error_line([&] { parse_labeling("labeling 2\n- x\n0 z\n1 y\n", f); }) == 3);
  CHECK(error_line([&] { parse_labeling("labeling 2\n- x\n- y\n", f); }) == 3);
  CHECK(error_line([&] { parse_labeling("labeling 2\n- x\n00 y\n", f); }) == 3);
  CHECK(error_line([&] { parse_labeling("labeling 2\n- x\n0 y\n", f); }) == 0);
}

TEST_CASE("digests and numbers") {
  CHECK(input_digest("abc") == "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(to_json(BigInt(22)) == Json(22));
  CHECK(to_json(binomial_bound(100, 100)) == Json("1267650600228229401496703205376"));
}

TEST_CASE("dims documents") {
  const Json fig = dims_document(kSmallBinary, {});
  CHECK(fig["command"] == "dims");
  CHECK(fig["inputDigest"] == input_digest(kSmallBinary));
  CHECK(fig["m"] == 2);
  CHECK(fig["n"] == 3);
  CHECK(fig["ltd"] == 1);
  CHECK(fig["td"] == 2);
  CHECK(fig["oracleChecked"] == false);
  CHECK_FALSE(fig.contains("witnesses"));

  const Json empty = dims_document("2 3\n", {2, true, true});
  CHECK(empty["ltd"] == -1);
  CHECK(empty["mtd"] == -1);
  CHECK(empty["td"] == -1);
  CHECK(empty["bound"] == 0);
  CHECK(empty["witnesses"]["plain"].is_null());

  const Json ball = dims_document(render_leaf_set(canonical_ball(3, 1, 2, 2)), {2, false, true});
  CHECK(ball["ltd"] == 1);
  CHECK(ball["bound"] == 4);
  CHECK(ball["boundTight"] == true);
  CHECK(ball["oracleChecked"] == true);

  CHECK(dump(fig) == dump(dims_document(kSmallBinary, {})));
  CHECK_THROWS_AS(dims_document("2 3\n000\n000\n", {}), ParseError);
  CHECK_THROWS_AS(dims_document(kSmallBinary, {3, false, false}), std::invalid_argument);
}

TEST_CASE("witnesses re-verify from their serialized pairs") {
  const std::string text = render_leaf_set(support::ternary_gap());
  const Json doc = dims_document(text, {3, true, false});
  const BranchTrie target(support::ternary_gap());
  for (const char* kind : {"plain", "meeted", "leveled"}) {
    const Json& w = doc["witnesses"][kind];
    EmbeddingWitness rebuilt{w["d"].get<int>(), w["ell"].get<int>(), {}};
    for (const auto& pair : w["pairs"]) rebuilt.image.push_back(Node::parse(pair[1].get<std::string>(), 3));
    CHECK(is_embedding(rebuilt, parse_embedding_kind(kind), target));
    CHECK(rebuilt.pairs().size() == w["pairs"].size());
  }
  CHECK(doc["witnesses"]["plain"]["d"] == 3);
  CHECK(doc["witnesses"]["meeted"]["d"] == 2);
  CHECK(doc["witnesses"]["leveled"]["d"] == 1);
  CHECK(doc["witnesses"]["plain"]["pairs"][0][0] == "-");
}

TEST_CASE("normalize documents") {
  const Json doc = normalize_document("2 2\n01\n10\n", {2, true});
  CHECK(doc["normalized"] == Json::array({"00", "10"}));
  CHECK(doc["norm"] == 1);
  CHECK(doc["mtd"] == 1);
  CHECK(doc["normEqualsMtd"] == true);
  CHECK(doc["swaps"].size() == 1);
  CHECK(doc["swaps"][0]["prefix"] == "0");
  const Json full = normalize_document("2 1\n0\n1\n", {});
  CHECK(full["normalized"] == Json::array({"0", "1"}));
  CHECK_FALSE(full.contains("swaps"));
  const Json ternary = normalize_document(render_leaf_set(support::ternary_gap()), {3, false});
  CHECK(ternary["norm"] == 2);
  CHECK(ternary["normEqualsMtd"] == true);
}

TEST_CASE("family documents") {
  const std::string powerset = "universe 2 x y\n00\n10\n01\n11\n";
  const Json p = family_document(powerset, {});
  CHECK(p["vc"] == 2);
  CHECK(p["ld"] == 2);
  CHECK_FALSE(p.contains("chi"));
  const Json e = family_document("universe 2 x y\n", {});
  CHECK(e["vc"] == -1);
  CHECK(e["ld"] == -1);
  const Json t = family_document("universe 2 x y\n00\n10\n", {{"x", "y"}, std::nullopt});
  CHECK(t["chi"]["leaves"] == Json::array({"00", "10"}));
  CHECK(t["chi"]["ltd"] == 1);
  CHECK(parse_leaf_set(t["chi"]["leafSetFile"].get<std::string>()) == leaves(2, 2, {"00", "10"}));
  const Json l = family_document("universe 2 x y\n00\n10\n11\n", {{}, std::string("labeling 2\n- x\n0 y\n1 y\n")});
  CHECK(l["chi"]["leaves"] == Json::array({"00", "10", "11"}));
  CHECK_THROWS_AS(family_document(powerset, {{"x", "z"}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(family_document(powerset, {{"x"}, std::string("labeling 0\n")}), std::invalid_argument);
}
