#include <algorithm>
#include <string>

#include "monopath/errors.hpp"
#include "monopath/extremal/sequences.hpp"
#include "monopath/simd/kernels.hpp"

namespace monopath::extremal {

Nested Nested::leaf(Point p) {
  Nested item;
  item.vector = std::move(p);
  return item;
}

Nested Nested::set(int depth, std::vector<Nested> members) {
  if (depth < 1) throw InvalidArgument("Nested::set: depth must be at least 1");
  for (const auto& m : members)
    if (m.depth != depth - 1) throw InvalidArgument("Nested::set: member depth mismatch");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Nested item;
  item.depth = depth;
  item.members = std::move(members);
  return item;
}

bool operator==(const Nested& a, const Nested& b) {
  return a.depth == b.depth && a.vector == b.vector && a.members == b.members;
}

bool operator<(const Nested& a, const Nested& b) {
  if (a.depth != b.depth) return a.depth < b.depth;
  if (a.vector != b.vector) return a.vector < b.vector;
  return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end());
}

std::string to_string(const Nested& item) {
  if (item.depth == 0) {
    std::string out = "(";
    for (std::size_t i = 0; i < item.vector.size(); ++i) out += (i ? "," : "") + std::to_string(item.vector[i]);
    return out + ")";
  }
  std::string out = "{";
  for (std::size_t i = 0; i < item.members.size(); ++i) out += (i ? "," : "") + to_string(item.members[i]);
  return out + "}";
}

bool s_less(std::span<const std::uint16_t> x, std::span<const std::uint16_t> y, int S) {
  if (x.size() != y.size()) throw InvalidArgument("s_less: vectors differ in length");
  int strict = 0;
  for (std::size_t i = 0; i < x.size(); ++i) strict += x[i] < y[i];
  return strict >= S;
}

std::optional<std::size_t> s_less_k(const Nested& a, const Nested& b, int S) {
  if (a.depth != b.depth) throw InvalidArgument("s_less_k: payload depths differ");
  if (a.depth == 0) {
    if (s_less(a.vector, b.vector, S)) return std::size_t{0};
    return std::nullopt;
  }
  for (std::size_t w = 0; w < b.members.size(); ++w) {
    bool above_all = true;
    for (const auto& f : a.members)
      if (!s_less_k(f, b.members[w], S)) {
        above_all = false;
        break;
      }
    if (above_all) return w;
  }
  return std::nullopt;
}

namespace {

std::string check_shape(const Nested& item, int depth, int n, int R) {
  if (item.depth != depth) return "wrong nesting depth";
  if (depth == 0) {
    if (static_cast<int>(item.vector.size()) != R) return "vector length is not R";
    for (auto x : item.vector)
      if (x < 1 || x > n) return "entry outside [n]";
    return {};
  }
  if (!std::is_sorted(item.members.begin(), item.members.end()) ||
      std::adjacent_find(item.members.begin(), item.members.end()) != item.members.end())
    return "set members not canonical";
  for (const auto& m : item.members)
    if (auto why = check_shape(m, depth - 1, n, R); !why.empty()) return why;
  return {};
}

void check_parameters(int n, int R, int S) {
  if (n < 1 || R < 1 || S < 1 || S > R)
    throw InvalidArgument("S-increasing: need n >= 1 and 1 <= S <= R (got n=" + std::to_string(n) +
                          ", R=" + std::to_string(R) + ", S=" + std::to_string(S) + ")");
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_violation(const SIncreasingSequence& seq) {
  for (std::size_t j = 0; j < seq.items.size(); ++j) {
    if (!check_shape(seq.items[j], seq.level - 2, seq.n, seq.R).empty()) return std::make_pair(j, j);
    for (std::size_t i = 0; i < j; ++i)
      if (!s_less_k(seq.items[i], seq.items[j], seq.S)) return std::make_pair(i, j);
  }
  return std::nullopt;
}

void certify(SIncreasingSequence& seq) {
  check_parameters(seq.n, seq.R, seq.S);
  if (seq.level < 2) throw InvalidArgument("certify: level must be at least 2");
  seq.witnesses.assign(seq.items.size(), {});
  for (std::size_t j = 0; j < seq.items.size(); ++j) {
    if (auto why = check_shape(seq.items[j], seq.level - 2, seq.n, seq.R); !why.empty())
      throw InvalidArgument("certify: item " + std::to_string(j + 1) + ": " + why);
    for (std::size_t i = 0; i < j; ++i) {
      const auto w = s_less_k(seq.items[i], seq.items[j], seq.S);
      if (!w)
        throw InvalidArgument("certify: item " + std::to_string(i + 1) + " is not S-less than item " +
                              std::to_string(j + 1));
      if (seq.level >= 3) seq.witnesses[j].push_back(*w);
    }
  }
}

namespace {

class ChainSearch {
 public:
  ChainSearch(const std::vector<Bitset>& rel, std::uint64_t budget)
      : rel_(rel), size_(rel.size()), budget_(budget), kern_(simd::kernels()) {
    adj_.assign(size_, Bitset(size_));
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j)
        if (i != j && (rel_[i].test(j) || rel_[j].test(i))) adj_[i].set(j);
  }

  ChainResult run() {
    Bitset all(size_);
    for (std::size_t i = 0; i < size_; ++i)
      if (!rel_[i].test(i)) all.set(i);
    std::vector<int> chain;
    dfs(chain, all);
    ChainResult result;
    result.chain = best_;
    result.exact = !aborted_;
    result.nodes = nodes_;
    return result;
  }

 private:
  // Greedy colouring of the comparability graph on P; any chain inside P is a
  // clique there, so the colour count bounds its length.
  std::size_t colour_bound(const Bitset& P, std::size_t stop) const {
    std::vector<Bitset> classes;
    for (std::size_t v = P.find_first(); v < size_; v = P.find_next(v + 1)) {
      bool placed = false;
      for (auto& cls : classes)
        if (kern_.and_popcount(cls.words().data(), adj_[v].words().data(), cls.word_count()) == 0) {
          cls.set(v);
          placed = true;
          break;
        }
      if (!placed) {
        if (classes.size() >= stop) return stop + 1;
        classes.emplace_back(size_);
        classes.back().set(v);
      }
    }
    return classes.size();
  }

  void dfs(std::vector<int>& chain, const Bitset& P) {
    if (aborted_ || best_.size() == size_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (chain.size() > best_.size()) best_ = chain;
    if (P.none()) return;
    const std::size_t need = best_.size() - chain.size();  // extension must exceed this
    if (colour_bound(P, need) <= need) return;
    for (std::size_t c = P.find_first(); c < size_; c = P.find_next(c + 1)) {
      Bitset next = P;
      next &= rel_[c];
      chain.push_back(static_cast<int>(c));
      dfs(chain, next);
      chain.pop_back();
      if (aborted_) return;
    }
  }

  const std::vector<Bitset>& rel_;
  std::size_t size_;
  std::uint64_t budget_;
  const simd::Kernels& kern_;
  std::vector<Bitset> adj_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ChainResult longest_chain(const std::vector<Bitset>& rel, std::uint64_t node_budget) {
  for (const auto& row : rel)
    if (row.size() != rel.size()) throw InvalidArgument("longest_chain: relation must be square");
  return ChainSearch(rel, node_budget).run();
}

std::vector<Point> grid_points(int n, int R) {
  std::vector<Point> out;
  Point p(static_cast<std::size_t>(R), 1);
  if (R == 0) return {p};
  while (true) {
    out.push_back(p);
    int i = R - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == n) p[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return out;
    ++p[static_cast<std::size_t>(i)];
  }
}

namespace {

constexpr std::uint64_t kMaxLevel2Universe = 4096;

std::uint64_t power(int n, int R) {
  std::uint64_t out = 1;
  for (int i = 0; i < R; ++i) {
    out *= static_cast<std::uint64_t>(n);
    if (out > (std::uint64_t{1} << 40)) return out;
  }
  return out;
}

std::vector<Bitset> relation(const std::vector<Nested>& universe, int S) {
  std::vector<Bitset> rel(universe.size(), Bitset(universe.size()));
  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = 0; j < universe.size(); ++j)
      if (i != j && s_less_k(universe[i], universe[j], S)) rel[i].set(j);
  return rel;
}

SequenceResult finish(int level, int n, int R, int S, const std::vector<Nested>& universe, const ChainResult& chain) {
  SequenceResult out;
  out.exact = chain.exact;
  out.nodes = chain.nodes;
  out.witness.level = level;
  out.witness.n = n;
  out.witness.R = R;
  out.witness.S = S;
  for (int i : chain.chain) out.witness.items.push_back(universe[static_cast<std::size_t>(i)]);
  certify(out.witness);
  out.value = out.witness.length();
  return out;
}

}  // namespace

SequenceResult longest_s_increasing(int n, int R, int S, std::uint64_t budget, bool require_exact) {
  check_parameters(n, R, S);
  const auto size = power(n, R);
  if (size > kMaxLevel2Universe)
    throw ResourceLimit("longest_s_increasing: [n]^R has " + std::to_string(size) + " points, above the limit of " +
                        std::to_string(kMaxLevel2Universe));
  std::vector<Nested> universe;
  for (auto& p : grid_points(n, R)) universe.push_back(Nested::leaf(std::move(p)));
  const auto chain = longest_chain(relation(universe, S), budget);
  if (!chain.exact && require_exact)
    throw ResourceLimit("longest_s_increasing: node budget of " + std::to_string(budget) + " exhausted");
  return finish(2, n, R, S, universe, chain);
}

namespace {

// The empty set followed by the singletons of a level-2 witness.
SequenceResult singleton_lift(int n, int R, int S, std::uint64_t budget) {
  const auto base = longest_s_increasing(n, R, S, budget);
  SequenceResult out;
  out.exact = false;
  out.nodes = base.nodes;
  out.witness.level = 3;
  out.witness.n = n;
  out.witness.R = R;
  out.witness.S = S;
  out.witness.items.push_back(Nested::set(1, {}));
  for (const auto& item : base.witness.items) out.witness.items.push_back(Nested::set(1, {item}));
  certify(out.witness);
  out.value = out.witness.length();
  return out;
}

}  // namespace

SequenceResult longest_m3(int n, int R, int S, std::uint64_t budget) {
  check_parameters(n, R, S);
  if (power(n, R) > kMaxLevel3Universe) return singleton_lift(n, R, S, budget);
  const auto grid = grid_points(n, R);
  std::vector<Nested> universe;
  for (std::uint32_t mask = 0; mask < (1U << grid.size()); ++mask) {
    std::vector<Nested> members;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if ((mask >> i) & 1U) members.push_back(Nested::leaf(grid[i]));
    universe.push_back(Nested::set(1, std::move(members)));
  }
  std::sort(universe.begin(), universe.end());
  auto out = finish(3, n, R, S, universe, longest_chain(relation(universe, S), budget));
  if (out.exact) return out;
  auto lift = singleton_lift(n, R, S, budget);
  if (lift.value > out.value) {
    lift.nodes += out.nodes;
    return lift;
  }
  return out;
}

}  // namespace monopath::extremal
