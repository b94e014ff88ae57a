#pragma once

// Reference implementations used only by the tests. They work on plain digit
// strings and sets of strings, and share no code with the library beyond the
// types needed to hand results back.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Strings = std::set<std::string>;

// Pascal's triangle, 64-bit.
inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

inline std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

inline std::uint64_t sum_bound(int n, int d, int m, int ell) {
  std::uint64_t total = 0;
  for (int i = 0; i <= std::min(d, n); ++i) {
    total += choose(n, i) * power(static_cast<std::uint64_t>(m - ell + 1), i) * power(static_cast<std::uint64_t>(ell - 1), n - i);
  }
  return total;
}

inline int digit_norm(const std::string& a, int ell) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [&](char c) { return c - '0' >= ell - 1; }));
}

inline int set_norm(const Strings& a, int ell) {
  int best = -1;
  for (const auto& s : a) best = std::max(best, digit_norm(s, ell));
  return best;
}

inline Strings closure(const Strings& leaves) {
  Strings out;
  for (const auto& b : leaves) {
    for (std::size_t k = 0; k <= b.size(); ++k) out.insert(b.substr(0, k));
  }
  return out;
}

inline bool strictly_below(const std::string& a, const std::string& b) {
  return a.size() < b.size() && b.compare(0, a.size(), a) == 0;
}

inline bool comparable(const std::string& a, const std::string& b) {
  return a == b || strictly_below(a, b) || strictly_below(b, a);
}

// Does some ell-element subset of `items` satisfy `pairwise` on every pair?
inline bool has_clique(const std::vector<std::string>& items, int ell,
                       const std::function<bool(const std::string&, const std::string&)>& pairwise) {
  std::vector<std::string> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == ell) return true;
    for (std::size_t i = from; i < items.size(); ++i) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](const std::string& c) { return pairwise(c, items[i]); })) {
        chosen.push_back(items[i]);
        if (go(i + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  return go(0);
}

// Plain: the complete ell-ary tree of height h order-embeds with its root at
// v iff v has ell pairwise incomparable strict descendants, each hosting a
// height h-1 copy.
inline int plain_dimension(const Strings& leaves, int ell) {
  if (leaves.empty()) return -1;
  const Strings nodes = closure(leaves);
  std::map<std::pair<std::string, int>, bool> memo;
  std::function<bool(const std::string&, int)> hosts = [&](const std::string& v, int h) -> bool {
    if (h == 0) return true;
    auto key = std::make_pair(v, h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::string> good;
    for (const auto& w : nodes) {
      if (strictly_below(v, w) && hosts(w, h - 1)) good.push_back(w);
    }
    const bool ok = has_clique(good, ell, [](const std::string& a, const std::string& b) { return !comparable(a, b); });
    return memo[key] = ok;
  };
  int d = 0;
  while (std::any_of(nodes.begin(), nodes.end(), [&](const std::string& v) { return hosts(v, d + 1); })) ++d;
  return d;
}

// Meeted: as plain, but the ell images below v must leave v through ell
// distinct children, so that their pairwise meets are v itself.
inline int meeted_dimension(const Strings& leaves, int ell) {
  if (leaves.empty()) return -1;
  const Strings nodes = closure(leaves);
  std::map<std::pair<std::string, int>, bool> memo;
  std::function<bool(const std::string&, int)> hosts = [&](const std::string& v, int h) -> bool {
    if (h == 0) return true;
    auto key = std::make_pair(v, h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::set<char> digits;
    for (const auto& w : nodes) {
      if (strictly_below(v, w) && hosts(w, h - 1)) digits.insert(w[v.size()]);
    }
    return memo[key] = static_cast<int>(digits.size()) >= ell;
  };
  int d = 0;
  while (std::any_of(nodes.begin(), nodes.end(), [&](const std::string& v) { return hosts(v, d + 1); })) ++d;
  return d;
}

// Leveled: pattern depth j lands on a fixed length t_j, t_0 < ... < t_d.
// Every strictly increasing length vector is tried.
inline int leveled_dimension(const Strings& leaves, int ell) {
  if (leaves.empty()) return -1;
  const Strings nodes = closure(leaves);
  const int n = static_cast<int>(leaves.begin()->size());
  auto embeds = [&](const std::vector<int>& t) {
    std::function<bool(const std::string&, std::size_t)> hosts = [&](const std::string& v, std::size_t j) -> bool {
      if (j + 1 == t.size()) return true;
      std::set<char> digits;
      for (const auto& w : nodes) {
        if (static_cast<int>(w.size()) == t[j + 1] && strictly_below(v, w) && hosts(w, j + 1)) digits.insert(w[v.size()]);
      }
      return static_cast<int>(digits.size()) >= ell;
    };
    for (const auto& v : nodes) {
      if (static_cast<int>(v.size()) == t[0] && hosts(v, 0)) return true;
    }
    return false;
  };
  int best = 0;
  std::vector<int> t;
  std::function<void(int, int)> choose_levels = [&](int from, int remaining) {
    if (remaining == 0) {
      if (embeds(t)) best = std::max(best, static_cast<int>(t.size()) - 1);
      return;
    }
    for (int level = from; level <= n; ++level) {
      t.push_back(level);
      choose_levels(level + 1, remaining - 1);
      t.pop_back();
    }
  };
  for (int d = 1; d <= n; ++d) choose_levels(0, d + 1);
  return best;
}

// Rooted-tree isomorphism by trying every matching of children.
inline bool isomorphic(const Strings& a, const std::string& u, const Strings& b, const std::string& v) {
  auto kids = [](const Strings& s, const std::string& x) {
    std::vector<std::string> out;
    for (const auto& y : s) {
      if (y.size() == x.size() + 1 && y.compare(0, x.size(), x) == 0) out.push_back(y);
    }
    return out;
  };
  auto ka = kids(a, u);
  auto kb = kids(b, v);
  if (ka.size() != kb.size()) return false;
  std::sort(kb.begin(), kb.end());
  do {
    bool all = true;
    for (std::size_t i = 0; i < ka.size() && all; ++i) all = isomorphic(a, ka[i], b, kb[i]);
    if (all) return true;
  } while (std::next_permutation(kb.begin(), kb.end()));
  return false;
}

inline bool isomorphic_closures(const Strings& leaves_a, const Strings& leaves_b) {
  if (leaves_a.empty() || leaves_b.empty()) return leaves_a.empty() == leaves_b.empty();
  return isomorphic(closure(leaves_a), "", closure(leaves_b), "");
}

// Binary normalization replayed on strings: nodes longest first, each length
// in ascending order; swap below a when that strictly lowers the norm.
inline Strings normalize_binary(Strings b, int n) {
  for (int len = n - 1; len >= 0; --len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string a;
      for (int p = len - 1; p >= 0; --p) a.push_back(((v >> p) & 1U) ? '1' : '0');
      Strings below;
      Strings swapped;
      for (const auto& x : b) {
        if (x.compare(0, a.size(), a) != 0) continue;
        below.insert(x);
        std::string y = x;
        y[a.size()] = y[a.size()] == '0' ? '1' : '0';
        swapped.insert(y);
      }
      if (set_norm(below, 2) > set_norm(swapped, 2)) {
        for (const auto& x : below) b.erase(x);
        b.insert(swapped.begin(), swapped.end());
      }
    }
  }
  return b;
}

// Families as sets of sorted element lists.
using Member = std::set<int>;
using Family = std::set<Member>;

inline bool shatters(const Family& f, const Member& a) {
  std::set<Member> traces;
  for (const auto& m : f) {
    Member t;
    std::set_intersection(m.begin(), m.end(), a.begin(), a.end(), std::inserter(t, t.end()));
    traces.insert(t);
  }
  return traces.size() == (std::size_t{1} << a.size());
}

inline int vc(const Family& f, int universe) {
  if (f.empty()) return -1;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
    Member a;
    for (int i = 0; i < universe; ++i) {
      if ((mask >> i) & 1U) a.insert(i);
    }
    if (shatters(f, a)) best = std::max(best, static_cast<int>(a.size()));
  }
  return best;
}

// Mistake-tree recursion without memoization.
inline int littlestone(const Family& f, int universe) {
  if (f.empty()) return -1;
  int best = 0;
  for (int x = 0; x < universe; ++x) {
    Family with;
    Family without;
    for (const auto& m : f) (m.count(x) ? with : without).insert(m);
    if (with.empty() || without.empty()) continue;
    best = std::max(best, 1 + std::min(littlestone(with, universe), littlestone(without, universe)));
  }
  return best;
}

}  // namespace oracle
