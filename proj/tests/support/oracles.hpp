#pragma once

// Reference implementations used only by the tests.  They are written
// directly from the definitions, without sharing code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "monopath/core/coloring.hpp"
#include "monopath/core/random.hpp"

namespace oracle {

using monopath::Coloring;
using monopath::Rng;

inline std::vector<std::vector<int>> all_subsets_colex(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  // colex: compare reversed sequences lexicographically
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Color of an edge, looked up by scanning the colex list.
class EdgeColors {
 public:
  explicit EdgeColors(const Coloring& c) : k_(c.k()) {
    const auto edges = all_subsets_colex(c.N(), c.k());
    for (std::size_t i = 0; i < edges.size(); ++i) map_[edges[i]] = c.color(i);
  }
  int operator()(const std::vector<int>& edge) const { return map_.at(edge); }
  int k() const { return k_; }

 private:
  int k_;
  std::map<std::vector<int>, int> map_;
};

inline Coloring random_coloring(int k, int N, int r, Rng& rng) {
  std::vector<std::uint8_t> colors(binom(N, k));
  for (auto& c : colors) c = static_cast<std::uint8_t>(1 + monopath::uniform_below(rng, static_cast<std::uint64_t>(r)));
  return Coloring(k, N, r, std::move(colors));
}

/// Longest S-colored tight path (edges) ending at `tuple`, by recursion on
/// the predecessor vertex.
inline int longest_ending_at(const EdgeColors& color, unsigned mask, const std::vector<int>& tuple) {
  int best = 0;
  for (int u = 1; u < tuple.front(); ++u) {
    std::vector<int> edge{u};
    edge.insert(edge.end(), tuple.begin(), tuple.end());
    const int c = color(edge);
    if (((mask >> (c - 1)) & 1U) == 0) continue;
    std::vector<int> prev(edge.begin(), edge.end() - 1);
    best = std::max(best, 1 + longest_ending_at(color, mask, prev));
  }
  return best;
}

/// Every vertex chain of n+k-1 vertices with the color set of its n edges.
inline std::vector<std::pair<std::vector<int>, unsigned>> all_paths(const Coloring& c, int n) {
  std::vector<std::pair<std::vector<int>, unsigned>> out;
  const EdgeColors color(c);
  const int len = n + c.k() - 1;
  if (len > c.N()) return out;
  for (const auto& chain : all_subsets_colex(c.N(), len)) {
    unsigned mask = 0;
    for (int i = 0; i < n; ++i) {
      std::vector<int> edge(chain.begin() + i, chain.begin() + i + c.k());
      mask |= 1U << (color(edge) - 1);
    }
    out.emplace_back(chain, mask);
  }
  return out;
}

inline bool is_good(const Coloring& c, int n, int s) {
  for (const auto& [chain, mask] : all_paths(c, n))
    if (__builtin_popcount(mask) <= s) return false;
  return true;
}

/// Every coloring of [N]^(k) with r colors, as flat color arrays.
inline void for_each_coloring(int k, int N, int r, const std::function<void(const Coloring&)>& fn) {
  const auto m = binom(N, k);
  std::vector<std::uint8_t> colors(m, 1);
  while (true) {
    fn(Coloring(k, N, r, colors));
    std::size_t i = 0;
    while (i < m && colors[i] == r) colors[i++] = 1;
    if (i == m) return;
    ++colors[i];
  }
}

/// Minimum dominating set size over all subsets; dom(u, v) means u -> v.
inline int min_dominating_bruteforce(int n, const std::function<bool(int, int)>& dom) {
  int best = n;
  for (unsigned subset = 1; subset < (1U << n); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size >= best) continue;
    bool ok = true;
    for (int y = 0; y < n && ok; ++y) {
      if ((subset >> y) & 1U) continue;
      bool hit = false;
      for (int x = 0; x < n && !hit; ++x) hit = ((subset >> x) & 1U) && dom(x, y);
      ok = hit;
    }
    if (ok) best = size;
  }
  return n == 0 ? 0 : best;
}

}  // namespace oracle
