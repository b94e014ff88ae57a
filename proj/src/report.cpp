#include "treedim/report.hpp"

#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <openssl/evp.h>

#include "treedim/formats.hpp"
#include "treedim/learning.hpp"

namespace treedim {

std::string input_digest(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    std::array<char, 3> hex{};
    std::snprintf(hex.data(), hex.size(), "%02x", md[i]);
    out += hex.data();
  }
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

namespace {

std::string node_text(const Node& a) { return a.is_root() ? "-" : a.str(); }

}  // namespace

std::vector<std::string> leaf_strings(const LeafSet& leaves) {
  std::vector<std::string> out;
  for (const Node& b : leaves.leaves()) out.push_back(node_text(b));
  return out;
}

Json to_json(const EmbeddingWitness& witness) {
  Json pairs = Json::array();
  for (const auto& [pattern, image] : witness.pairs()) pairs.push_back({node_text(pattern), node_text(image)});
  Json out;
  out["d"] = witness.height;
  out["ell"] = witness.ell;
  out["pairs"] = std::move(pairs);
  return out;
}

Json to_json(const NormalizationTrace& trace) {
  Json swaps = Json::array();
  for (const AppliedSwap& s : trace.swaps) {
    Json entry;
    entry["prefix"] = node_text(s.prefix);
    entry["k"] = s.k;
    swaps.push_back(std::move(entry));
  }
  return swaps;
}

Json to_json(const DimensionReport& report) {
  Json out;
  out["m"] = report.arity;
  out["n"] = report.height;
  out["ell"] = report.ell;
  out["size"] = report.size;
  out["td"] = report.td;
  out["mtd"] = report.mtd;
  out["ltd"] = report.ltd;
  out["bound"] = to_json(report.bound);
  out["boundTight"] = report.bound_tight;
  return out;
}

Json dims_document(std::string_view file_text, const DimsOptions& options) {
  const LeafSet leaves = parse_leaf_set(file_text);
  const DimensionReport report = options.oracle ? cross_check(leaves, options.ell) : analyze(leaves, options.ell);
  Json doc;
  doc["command"] = "dims";
  doc["inputDigest"] = input_digest(file_text);
  const Json fields = to_json(report);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  doc["oracleChecked"] = options.oracle;
  if (options.witness) {
    Json witnesses;
    for (EmbeddingKind kind : {EmbeddingKind::kPlain, EmbeddingKind::kMeeted, EmbeddingKind::kLeveled}) {
      auto [d, witness] = brute_dimension_with_witness(leaves, options.ell, kind);
      witnesses[std::string(to_string(kind))] = witness ? to_json(*witness) : Json(nullptr);
    }
    doc["witnesses"] = std::move(witnesses);
  }
  return doc;
}

Json normalize_document(std::string_view file_text, const NormalizeOptions& options) {
  const LeafSet leaves = parse_leaf_set(file_text);
  check_ell(options.ell, leaves.arity());
  const bool binary = leaves.arity() == 2;
  const NormalizationTrace trace = binary ? normalize_binary(leaves) : normalize_mary(leaves, options.ell);
  const int mtd = mtd_ell(leaves, options.ell);
  Json doc;
  doc["command"] = "normalize";
  doc["inputDigest"] = input_digest(file_text);
  doc["m"] = leaves.arity();
  doc["n"] = leaves.height();
  doc["ell"] = options.ell;
  doc["procedure"] = binary ? "binary" : "ell-ary";
  doc["size"] = leaves.size();
  doc["normalized"] = leaf_strings(trace.final);
  doc["norm"] = trace.final_norm;
  doc["mtd"] = mtd;
  doc["normEqualsMtd"] = trace.final_norm == mtd;
  if (options.trace) doc["swaps"] = to_json(trace);
  return doc;
}

Json family_document(std::string_view file_text, const FamilyOptions& options) {
  const SetFamily family = parse_family(file_text);
  if (!options.tuple.empty() && options.labeling_text) {
    throw std::invalid_argument("give either a tuple or a labeling, not both");
  }
  Json doc;
  doc["command"] = "family";
  doc["inputDigest"] = input_digest(file_text);
  doc["universe"] = family.universe();
  doc["size"] = family.size();
  doc["vc"] = vc_dim(family);
  doc["ld"] = littlestone_dim(family);

  std::optional<LeafSet> image;
  Json chi;
  if (!options.tuple.empty()) {
    std::vector<std::size_t> tuple;
    for (const auto& name : options.tuple) tuple.push_back(family.index_of(name));
    image = chi_tuple(family, tuple);
    chi["kind"] = "tuple";
    chi["tuple"] = options.tuple;
  } else if (options.labeling_text) {
    const Labeling labeling = parse_labeling(*options.labeling_text, family);
    image = chi_labeling(family, labeling);
    chi["kind"] = "labeling";
    chi["labelingDigest"] = input_digest(*options.labeling_text);
  }
  if (image) {
    chi["leaves"] = leaf_strings(*image);
    chi["leafSetFile"] = render_leaf_set(*image);
    chi["ltd"] = ltd(*image, 2);
    chi["td"] = td(*image);
    doc["chi"] = std::move(chi);
  }
  return doc;
}

}  // namespace treedim
