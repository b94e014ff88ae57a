#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "treedim/dimension.hpp"
#include "treedim/embedding.hpp"
#include "treedim/normalization.hpp"

namespace treedim {

using Json = nlohmann::ordered_json;

// "sha256:<hex>" of the bytes.
std::string input_digest(std::string_view bytes);

// Pretty-printed with a trailing newline; field order is insertion order.
std::string dump(const Json& doc);

// Arbitrary-precision integers are written as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise.
Json to_json(const BigInt& value);

Json to_json(const EmbeddingWitness& witness);
Json to_json(const NormalizationTrace& trace);
Json to_json(const DimensionReport& report);
std::vector<std::string> leaf_strings(const LeafSet& leaves);

struct DimsOptions {
  int ell = 2;
  bool witness = false;
  bool oracle = false;
};

// Dimensions of the leaf set in `file_text`. Throws ParseError for bad input
// and OracleMismatch when `oracle` is set and a fast path disagrees.
Json dims_document(std::string_view file_text, const DimsOptions& options);

struct NormalizeOptions {
  int ell = 2;
  bool trace = false;
};

// Normalization of the leaf set in `file_text`. Binary sets with ell = 2 use
// the binary procedure, everything else the ell-ary one. The document carries
// "normEqualsMtd"; callers treat false as a failure.
Json normalize_document(std::string_view file_text, const NormalizeOptions& options);

struct FamilyOptions {
  std::vector<std::string> tuple;
  std::optional<std::string> labeling_text;
};

// VC and Littlestone dimensions of the family in `file_text`, plus the
// characteristic image for a tuple or labeling when one is given.
Json family_document(std::string_view file_text, const FamilyOptions& options);

}  // namespace treedim
