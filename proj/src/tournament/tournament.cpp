#include "monopath/tournament/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "monopath/errors.hpp"

namespace monopath::tournament {

int compare_cyclic_lex(std::span<const std::uint16_t> x, std::span<const std::uint16_t> y, int start) {
  if (x.size() != y.size()) throw InvalidArgument("compare_cyclic_lex: length mismatch");
  const std::size_t C = x.size();
  if (start < 1 || static_cast<std::size_t>(start) > C) throw InvalidArgument("compare_cyclic_lex: start out of range");
  std::size_t i = static_cast<std::size_t>(start - 1);
  for (std::size_t step = 0; step < C; ++step) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    if (++i == C) i = 0;
  }
  return 0;
}

int compare_reverse_lex(std::span<const std::uint16_t> x, std::span<const std::uint16_t> y) {
  if (x.size() != y.size()) throw InvalidArgument("compare_reverse_lex: length mismatch");
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  return 0;
}

Tournament Tournament::from_predicate(std::size_t size, Predicate dominates, bool materialize) {
  Tournament t;
  t.size_ = size;
  t.words_ = (size + 63) / 64;
  t.all_.assign(t.words_, ~std::uint64_t{0});
  if (size % 64 != 0 && t.words_ > 0) t.all_.back() = (std::uint64_t{1} << (size % 64)) - 1;
  if (materialize) {
    t.rows_.assign(size * t.words_, 0);
    for (std::size_t u = 0; u < size; ++u) {
      std::uint64_t* row = t.rows_.data() + u * t.words_;
      row[u >> 6] |= std::uint64_t{1} << (u & 63);
      for (std::size_t v = u + 1; v < size; ++v) {
        if (dominates(u, v))
          row[v >> 6] |= std::uint64_t{1} << (v & 63);
        else
          t.rows_[v * t.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
      }
    }
  } else {
    t.predicate_ = std::move(dominates);
  }
  return t;
}

Tournament Tournament::from_orders(const std::vector<std::vector<int>>& orders) {
  if (orders.empty() || orders.size() % 2 == 0)
    throw InvalidArgument("from_orders: need an odd, positive number of orders");
  const std::size_t size = orders.front().size();
  std::vector<std::vector<std::size_t>> rank(orders.size(), std::vector<std::size_t>(size));
  for (std::size_t o = 0; o < orders.size(); ++o) {
    if (orders[o].size() != size) throw InvalidArgument("from_orders: orders differ in size");
    std::vector<bool> seen(size, false);
    for (std::size_t pos = 0; pos < size; ++pos) {
      const int v = orders[o][pos];
      if (v < 0 || static_cast<std::size_t>(v) >= size || seen[static_cast<std::size_t>(v)])
        throw InvalidArgument("from_orders: each order must be a permutation of 0..size-1");
      seen[static_cast<std::size_t>(v)] = true;
      rank[o][static_cast<std::size_t>(v)] = pos;
    }
  }
  const std::size_t majority = orders.size() / 2 + 1;
  return from_predicate(
      size,
      [rank, majority](std::size_t u, std::size_t v) {
        std::size_t wins = 0;
        for (const auto& r : rank) wins += r[v] < r[u];
        return wins >= majority;
      },
      true);
}

Tournament Tournament::random(std::size_t size, Rng& rng) {
  std::vector<std::uint8_t> coins(size * size, 0);
  for (std::size_t u = 0; u < size; ++u)
    for (std::size_t v = u + 1; v < size; ++v) coins[u * size + v] = coin(rng) ? 1 : 0;
  return from_predicate(
      size, [coins = std::move(coins), size](std::size_t u, std::size_t v) { return coins[u * size + v] != 0; },
      true);
}

bool Tournament::dominates(std::size_t u, std::size_t v) const {
  if (u == v) return false;
  if (!rows_.empty()) return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  return u < v ? predicate_(u, v) : !predicate_(v, u);
}

const std::uint64_t* Tournament::closed_row(std::size_t u, std::uint64_t* scratch) const {
  if (!rows_.empty()) return rows_.data() + u * words_;
  std::fill(scratch, scratch + words_, 0);
  scratch[u >> 6] |= std::uint64_t{1} << (u & 63);
  for (std::size_t v = 0; v < size_; ++v)
    if (v != u && dominates(u, v)) scratch[v >> 6] |= std::uint64_t{1} << (v & 63);
  return scratch;
}

int majority_threshold(std::size_t coordinates) {
  if (coordinates == 0) throw InvalidArgument("majority_threshold: no coordinates");
  return coordinates % 2 == 1 ? static_cast<int>((coordinates + 1) / 2) : static_cast<int>(coordinates / 2 + 1);
}

int MajorityTournament::wins(std::size_t u, std::size_t v) const {
  int count = 0;
  for (const auto& r : ranks) count += r[v] < r[u];
  return count;
}

MajorityTournament build_majority_tournament(std::vector<Point> vectors, std::size_t coordinates, ExtraOrder extra,
                                             std::size_t materialize_limit) {
  for (const auto& v : vectors)
    if (v.size() != coordinates)
      throw InvalidArgument("build_tournament: vectors must have " + std::to_string(coordinates) + " entries");
  {
    std::set<Point> distinct(vectors.begin(), vectors.end());
    if (distinct.size() != vectors.size()) throw InvalidArgument("build_tournament: duplicate vectors");
  }
  MajorityTournament t;
  t.coordinates = coordinates;
  t.K = majority_threshold(coordinates);
  t.has_extra_order = coordinates % 2 == 0;
  t.vertices = std::move(vectors);

  const std::size_t n = t.vertices.size();
  auto add_order = [&](auto&& less) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return less(t.vertices[a], t.vertices[b]); });
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    t.ranks.push_back(std::move(rank));
  };
  for (std::size_t i = 1; i <= coordinates; ++i)
    add_order([i](const Point& a, const Point& b) { return compare_cyclic_lex(a, b, static_cast<int>(i)) < 0; });
  if (t.has_extra_order) {
    if (extra == ExtraOrder::reverse_lex)
      add_order([](const Point& a, const Point& b) { return compare_reverse_lex(a, b) < 0; });
    else
      add_order([](const Point& a, const Point& b) { return a < b; });
  }

  const auto ranks = t.ranks;
  const int K = t.K;
  t.graph = Tournament::from_predicate(
      n,
      [ranks, K](std::size_t u, std::size_t v) {
        int count = 0;
        for (const auto& r : ranks) count += r[v] < r[u];
        return count >= K;
      },
      n <= materialize_limit);
  return t;
}

MajorityTournament build_tournament(std::vector<Point> vectors, int r, int s, ExtraOrder extra,
                                    std::size_t materialize_limit) {
  if (s < 1 || s >= r) throw InvalidArgument("build_tournament: need 1 <= s < r");
  if (2 * s <= r)
    throw UnsupportedRegime("build_tournament: majority domination needs s > r/2 (got r=" + std::to_string(r) +
                            ", s=" + std::to_string(s) + ")");
  return build_majority_tournament(std::move(vectors), binomial(r, s), extra, materialize_limit);
}

int ceil_log2(std::size_t n) {
  int bits = 0;
  std::size_t value = 1;
  while (value < n) {
    value <<= 1;
    ++bits;
  }
  return bits;
}

bool is_dominating(const Tournament& t, std::span<const int> members) {
  std::vector<bool> in_set(t.size(), false);
  for (int m : members) {
    if (m < 0 || static_cast<std::size_t>(m) >= t.size()) return false;
    in_set[static_cast<std::size_t>(m)] = true;
  }
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (in_set[y]) continue;
    bool covered = false;
    for (int x : members)
      if (t.dominates(static_cast<std::size_t>(x), y)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace monopath::tournament
