#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treedim/dimension.hpp"
#include "treedim/formats.hpp"
#include "treedim/parallel.hpp"
#include "treedim/report.hpp"
#include "treedim/suites.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kOracleMismatch = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace treedim;

  CLI::App app{"Tree dimensions of leaf sets"};
  app.require_subcommand(1);

  std::string file;
  int ell = 2;

  auto* dims = app.add_subcommand("dims", "Dimensions of a leaf set file");
  bool witness = false;
  bool oracle = false;
  dims->add_option("file", file, "Leaf set file")->required();
  dims->add_option("--ell", ell, "Branching of the pattern tree")->check(CLI::Range(2, kMaxArity));
  dims->add_flag("--witness", witness, "Include an embedding witness per dimension");
  dims->add_flag("--oracle", oracle, "Cross-check against the brute-force embedding search");

  auto* normalize = app.add_subcommand("normalize", "Normalize a leaf set file");
  bool trace = false;
  normalize->add_option("file", file, "Leaf set file")->required();
  normalize->add_option("--ell", ell, "Branching used for the norm")->check(CLI::Range(2, kMaxArity));
  normalize->add_flag("--trace", trace, "Include the applied swaps");

  auto* bound = app.add_subcommand("bound", "Print the size bound for height n and dimension d");
  int n = 0;
  int d = 0;
  int m = 2;
  int bound_ell = 2;
  bound->add_option("n", n)->required();
  bound->add_option("d", d)->required();
  bound->add_option("m", m)->required();
  bound->add_option("ell", bound_ell)->required();

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::string suite;
  verification::SuiteOptions suite_options;
  suite_options.jobs = default_jobs();
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verification::suite_names()));
  verify->add_option("--max-n", suite_options.max_n, "Largest height swept exhaustively");
  verify->add_option("--samples", suite_options.samples, "Random instances per randomized phase");
  verify->add_option("--seed", suite_options.seed, "Seed of every randomized phase");
  verify->add_option("--jobs", suite_options.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* family = app.add_subcommand("family", "VC and Littlestone dimensions of a family file");
  std::vector<std::string> tuple;
  std::string labeling_file;
  family->add_option("file", file, "Family file")->required();
  auto* tuple_opt = family->add_option("--tuple", tuple, "Elements a1 .. an for the characteristic image");
  auto* labeling_opt = family->add_option("--labeling", labeling_file, "Labeling file for the characteristic image");
  tuple_opt->excludes(labeling_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kBadInput;
  }

  try {
    if (*dims) {
      std::cout << dump(dims_document(read_file(file), {ell, witness, oracle}));
      return kOk;
    }
    if (*normalize) {
      const Json doc = normalize_document(read_file(file), {ell, trace});
      std::cout << dump(doc);
      return doc["normEqualsMtd"].get<bool>() ? kOk : kCheckFailed;
    }
    if (*bound) {
      std::cout << mary_bound(n, d, m, bound_ell) << "\n";
      return kOk;
    }
    if (*verify) {
      const auto report = verification::run_suite(suite, suite_options);
      std::cout << dump(verification::suite_document(report));
      return report.passed() ? kOk : kCheckFailed;
    }
    if (*family) {
      FamilyOptions options;
      options.tuple = tuple;
      if (*labeling_opt) options.labeling_text = read_file(labeling_file);
      std::cout << dump(family_document(read_file(file), options));
      return kOk;
    }
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n" << render_leaf_set(e.leaves());
    return kOracleMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
