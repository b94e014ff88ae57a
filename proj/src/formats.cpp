#include "treedim/formats.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace treedim {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Non-blank, non-comment lines, trimmed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    std::string line = trim(raw);
    if (!line.empty() && line.front() != '#') out.push_back({number, std::move(line)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

int parse_int(const std::string& word, std::size_t line, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + word + "'");
  }
}

}  // namespace

LeafSet parse_leaf_set(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header \"m n\"");
  const auto header = split_words(lines[0].text);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be \"m n\"");
  const int m = parse_int(header[0], lines[0].number, "m");
  const int n = parse_int(header[1], lines[0].number, "n");
  if (m < 2 || m > kMaxArity) throw ParseError(lines[0].number, "m must be in [2, 10]");
  if (n < 0) throw ParseError(lines[0].number, "n must be nonnegative");

  // Rejects heights whose capacity overflows before any leaf is read.
  [[maybe_unused]] const LeafSet probe = [&] {
    try {
      return LeafSet(m, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lines[0].number, e.what());
    }
  }();
  std::vector<std::uint64_t> codes;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string digits = line.text == "-" ? std::string() : line.text;
    if (digits.size() != static_cast<std::size_t>(n)) {
      throw ParseError(line.number, "leaf '" + line.text + "' does not have length " + std::to_string(n));
    }
    std::uint64_t code = 0;
    for (char c : digits) {
      if (c < '0' || c >= '0' + m) throw ParseError(line.number, "invalid digit '" + std::string(1, c) + "'");
      code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(c - '0');
    }
    if (std::find(codes.begin(), codes.end(), code) != codes.end()) {
      throw ParseError(line.number, "duplicate leaf '" + line.text + "'");
    }
    codes.push_back(code);
  }
  return LeafSet::from_codes(m, n, std::move(codes));
}

std::string render_leaf_set(const LeafSet& leaves) {
  std::string out = std::to_string(leaves.arity()) + " " + std::to_string(leaves.height()) + "\n";
  for (const Node& b : leaves.leaves()) out += (b.is_root() ? std::string("-") : b.str()) + "\n";
  return out;
}

SetFamily parse_family(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header \"universe k\"");
  const auto header = split_words(lines[0].text);
  if (header.size() < 2 || header[0] != "universe") throw ParseError(lines[0].number, "header must be \"universe k [names...]\"");
  const int k = parse_int(header[1], lines[0].number, "k");
  if (k < 0 || k > static_cast<int>(kMaxUniverse)) throw ParseError(lines[0].number, "k must be in [0, 64]");
  std::vector<std::string> names;
  if (header.size() == 2) {
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i));
  } else if (header.size() == static_cast<std::size_t>(k) + 2) {
    names.assign(header.begin() + 2, header.end());
  } else {
    throw ParseError(lines[0].number, "expected " + std::to_string(k) + " element names");
  }

  std::vector<Subset> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string bits = line.text == "-" ? std::string() : line.text;
    if (bits.size() != static_cast<std::size_t>(k)) {
      throw ParseError(line.number, "member '" + line.text + "' does not have " + std::to_string(k) + " bits");
    }
    Subset s = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (bits[j] == '1') {
        s |= Subset{1} << j;
      } else if (bits[j] != '0') {
        throw ParseError(line.number, "invalid bit '" + std::string(1, bits[j]) + "'");
      }
    }
    if (std::find(members.begin(), members.end(), s) != members.end()) {
      throw ParseError(line.number, "duplicate member '" + line.text + "'");
    }
    members.push_back(s);
  }
  try {
    return SetFamily(std::move(names), std::move(members));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].number, e.what());
  }
}

std::string render_family(const SetFamily& family) {
  std::string out = "universe " + std::to_string(family.universe_size());
  for (const auto& name : family.universe()) out += " " + name;
  out += "\n";
  for (Subset s : family.members()) {
    if (family.universe_size() == 0) {
      out += "-\n";
      continue;
    }
    for (std::size_t j = 0; j < family.universe_size(); ++j) out.push_back(((s >> j) & 1U) ? '1' : '0');
    out += "\n";
  }
  return out;
}

Labeling parse_labeling(std::string_view text, const SetFamily& family) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header \"labeling n\"");
  const auto header = split_words(lines[0].text);
  if (header.size() != 2 || header[0] != "labeling") throw ParseError(lines[0].number, "header must be \"labeling n\"");
  const int n = parse_int(header[1], lines[0].number, "n");
  if (n < 0 || n > 20) throw ParseError(lines[0].number, "labeling height must be in [0, 20]");
  const std::size_t count = (std::size_t{1} << n) - 1;
  Labeling labeling{n, std::vector<std::size_t>(count, 0)};
  std::vector<bool> seen(count, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto words = split_words(line.text);
    if (words.size() != 2) throw ParseError(line.number, "expected \"node element\"");
    const std::string node = words[0] == "-" ? std::string() : words[0];
    if (node.size() >= static_cast<std::size_t>(n)) throw ParseError(line.number, "node '" + words[0] + "' is too long");
    std::size_t value = 0;
    for (char c : node) {
      if (c != '0' && c != '1') throw ParseError(line.number, "labeling nodes are binary");
      value = value * 2 + static_cast<std::size_t>(c - '0');
    }
    const std::size_t index = (std::size_t{1} << node.size()) - 1 + value;
    if (seen[index]) throw ParseError(line.number, "node '" + words[0] + "' labeled twice");
    seen[index] = true;
    try {
      labeling.labels[index] = family.index_of(words[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ParseError(0, "labeling does not cover every node of length < " + std::to_string(n));
  }
  return labeling;
}

std::string render_labeling(const Labeling& labeling, const SetFamily& family) {
  std::string out = "labeling " + std::to_string(labeling.height) + "\n";
  for (int len = 0; len < labeling.height; ++len) {
    for (std::size_t value = 0; value < (std::size_t{1} << len); ++value) {
      std::string node;
      for (int p = len - 1; p >= 0; --p) node.push_back(((value >> p) & 1U) ? '1' : '0');
      const std::size_t index = (std::size_t{1} << len) - 1 + value;
      out += (node.empty() ? std::string("-") : node) + " " + family.universe()[labeling.labels[index]] + "\n";
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace treedim
