#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treedim/learning.hpp"
#include "treedim/leaf_set.hpp"
#include "treedim/report.hpp"

namespace treedim::verification {

struct SuiteOptions {
  // Largest height swept exhaustively. Binary sweeps stop at 4 and ternary
  // ones at 2 whatever the value.
  int max_n = 4;
  // Random instances per randomized phase.
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct CheckTally {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  // The offending instance with the lowest index.
  std::optional<Json> first_failure;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<CheckTally> checks;
  Json details;  // suite-specific extras, null when absent

  bool passed() const;
  const CheckTally* find(std::string_view check) const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

// Deterministic: carries the options except the job count, and no timings.
Json suite_document(const SuiteReport& report);

// Canonical balls reach the bound with equality and have the expected leveled
// dimension, for (m, ell) in {(2,2), (3,2), (3,3)}, heights 0..max_n and
// d in -1..n.
CheckTally tightness_check(int max_n);

// The recursion-based Littlestone dimension agrees with the labeling search
// on every family over a universe of the given size.
CheckTally ld_agreement_check(std::size_t universe_size);

// Littlestone dimension straight from the definition: the largest d such that
// some labeling of the height-d tree maps the family onto all of 2^d. Throws
// std::invalid_argument when more than 10^7 labelings would be needed.
int ld_by_labeling_search(const SetFamily& family);

// Each leaf of m^n is kept with probability p, p itself uniform in [0, 1].
LeafSet random_leaf_set(int m, int n, std::uint64_t seed);

// Universe size uniform in [0, max_universe], members kept with probability
// p, p uniform in [0, 1].
SetFamily random_family(std::size_t max_universe, std::uint64_t seed);

}  // namespace treedim::verification
