#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <set>

#include "../support/oracles.hpp"
#include "monopath/errors.hpp"
#include "monopath/extremal/construct.hpp"
#include "monopath/extremal/search.hpp"
#include "monopath/extremal/sequences.hpp"
#include "monopath/paths/paths.hpp"

using namespace monopath;
using namespace monopath::extremal;

namespace {

Point P(std::initializer_list<int> xs) {
  Point p;
  for (int x : xs) p.push_back(static_cast<std::uint16_t>(x));
  return p;
}

Nested set_of(std::initializer_list<Point> pts) {
  std::vector<Nested> members;
  for (const auto& p : pts) members.push_back(Nested::leaf(p));
  return Nested::set(1, std::move(members));
}

// Longest sequence with rel(a, b) for all earlier a and later b, by plain
// recursion over the next element.
template <typename T, typename Rel>
std::size_t longest_bruteforce(const std::vector<T>& universe, Rel rel) {
  std::size_t best = 0;
  std::function<void(std::size_t, const std::vector<std::size_t>&)> rec = [&](std::size_t len,
                                                                            const std::vector<std::size_t>& cand) {
    best = std::max(best, len);
    for (auto c : cand) {
      std::vector<std::size_t> next;
      for (auto d : cand)
        if (rel(universe[c], universe[d])) next.push_back(d);
      rec(len + 1, next);
    }
  };
  std::vector<std::size_t> all(universe.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  rec(0, all);
  return best;
}

bool strictly_less_in(const Point& x, const Point& y, int S) {
  int strict = 0;
  for (std::size_t i = 0; i < x.size(); ++i) strict += x[i] < y[i];
  return strict >= S;
}

bool canonical(const Coloring& c) {
  int max_used = 0;
  for (auto col : c.colors()) {
    if (col > max_used + 1) return false;
    max_used = std::max<int>(max_used, col);
  }
  return true;
}

SearchParams params(int k, int N, int n, int r, int s) {
  SearchParams p;
  p.k = k;
  p.N = N;
  p.n = n;
  p.r = r;
  p.s = s;
  return p;
}

}  // namespace

TEST(SLess, Examples) {
  EXPECT_FALSE(s_less(P({1, 2}), P({1, 2}), 1));
  EXPECT_TRUE(s_less(P({1, 1, 1}), P({2, 2, 1}), 2));
  EXPECT_TRUE(s_less(P({1, 2}), P({2, 1}), 1));
  EXPECT_TRUE(s_less(P({2, 1}), P({1, 2}), 1));
  EXPECT_THROW(s_less(P({1}), P({1, 2}), 1), InvalidArgument);
}

TEST(SLess, AntisymmetricWhenTwiceSExceedsR) {
  Rng rng(81);
  for (int trial = 0; trial < 20000; ++trial) {
    const int R = static_cast<int>(uniform_int(rng, 1, 6));
    const int S = static_cast<int>(uniform_int(rng, R / 2 + 1, R));
    Point x(static_cast<std::size_t>(R)), y(static_cast<std::size_t>(R));
    for (int i = 0; i < R; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(uniform_int(rng, 1, 4));
      y[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(uniform_int(rng, 1, 4));
    }
    ASSERT_FALSE(s_less(x, y, S) && s_less(y, x, S));
  }
}

TEST(SLessK, Examples) {
  const auto empty = Nested::set(1, {});
  const auto other = set_of({P({2, 2}), P({3, 1})});
  EXPECT_EQ(s_less_k(empty, other, 2), std::optional<std::size_t>(0));
  EXPECT_FALSE(s_less_k(other, empty, 1));
  const auto w = s_less_k(set_of({P({1, 1})}), set_of({P({2, 2})}), 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, 0u);
  EXPECT_FALSE(s_less_k(set_of({P({1, 2}), P({2, 1})}), other, 2));
  // least witness in canonical order
  const auto two = s_less_k(set_of({P({1, 1})}), set_of({P({1, 2}), P({2, 2})}), 1);
  EXPECT_EQ(two, std::optional<std::size_t>(0));
  EXPECT_THROW(s_less_k(empty, Nested::leaf(P({1})), 1), InvalidArgument);
}

TEST(Nested, CanonicalSets) {
  const auto a = set_of({P({2, 1}), P({1, 2}), P({2, 1})});
  EXPECT_EQ(a.members.size(), 2u);
  EXPECT_EQ(a, set_of({P({1, 2}), P({2, 1})}));
  EXPECT_EQ(to_string(a), "{(1,2),(2,1)}");
  EXPECT_THROW(Nested::set(2, {Nested::leaf(P({1}))}), InvalidArgument);
}

TEST(LongestSIncreasing, Examples) {
  const auto a = longest_s_increasing(2, 2, 1);
  EXPECT_EQ(a.value, 4u);
  EXPECT_TRUE(a.exact);
  std::set<Point> used;
  for (const auto& item : a.witness.items) used.insert(item.vector);
  EXPECT_EQ(used, (std::set<Point>{P({1, 1}), P({1, 2}), P({2, 1}), P({2, 2})}));
  EXPECT_EQ(longest_s_increasing(2, 3, 2).value, 2u);
  EXPECT_EQ(longest_s_increasing(1, 5, 2).value, 1u);
  EXPECT_EQ(longest_s_increasing(3, 2, 1).value, 9u);
  EXPECT_THROW(longest_s_increasing(2, 2, 3), InvalidArgument);
}

TEST(LongestSIncreasing, MatchesBruteForce) {
  const int cases[][3] = {{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}, {2, 4, 2}, {3, 3, 2}, {2, 4, 3}, {3, 3, 3}};
  for (const auto& c : cases) {
    const auto grid = grid_points(c[0], c[1]);
    const auto expected = longest_bruteforce(grid, [&](const Point& x, const Point& y) { return strictly_less_in(x, y, c[2]); });
    const auto got = longest_s_increasing(c[0], c[1], c[2]);
    EXPECT_EQ(got.value, expected) << c[0] << " " << c[1] << " " << c[2];
    EXPECT_TRUE(got.exact);
  }
}

TEST(LongestSIncreasing, BudgetFlagsLowerBound) {
  const auto partial = longest_s_increasing(4, 3, 2, 5);
  EXPECT_FALSE(partial.exact);
  EXPECT_LE(partial.value, 8u);
  EXPECT_THROW(longest_s_increasing(4, 3, 2, 5, true), ResourceLimit);
}

TEST(LongestM3, Examples) {
  // the empty family precedes the single point of [1]^R
  const auto one = longest_m3(1, 3, 2);
  EXPECT_EQ(one.value, 2u);
  EXPECT_TRUE(one.exact);
  const auto a = longest_m3(2, 2, 1);
  EXPECT_TRUE(a.exact);
  EXPECT_GE(a.value, longest_s_increasing(2, 2, 1).value);
  EXPECT_EQ(a.value, 6u);
  const auto lift = longest_m3(3, 3, 2);
  EXPECT_FALSE(lift.exact);
  EXPECT_EQ(lift.value, longest_s_increasing(3, 3, 2).value + 1);
}

TEST(LongestM3, MatchesBruteForceOnTinyGrids) {
  const int cases[][3] = {{2, 2, 1}, {2, 2, 2}, {1, 2, 1}};
  for (const auto& c : cases) {
    const auto grid = grid_points(c[0], c[1]);
    std::vector<Nested> universe;
    for (unsigned mask = 0; mask < (1U << grid.size()); ++mask) {
      std::vector<Nested> members;
      for (std::size_t i = 0; i < grid.size(); ++i)
        if ((mask >> i) & 1U) members.push_back(Nested::leaf(grid[i]));
      universe.push_back(Nested::set(1, members));
    }
    const int S = c[2];
    const auto expected = longest_bruteforce(universe, [&](const Nested& F, const Nested& G) {
      for (const auto& g : G.members) {
        bool all = true;
        for (const auto& f : F.members) all = all && strictly_less_in(f.vector, g.vector, S);
        if (all) return true;
      }
      return false;
    });
    EXPECT_EQ(longest_m3(c[0], c[1], c[2]).value, expected);
  }
}

TEST(Certify, RejectsBadSequences) {
  SIncreasingSequence seq;
  seq.level = 2;
  seq.n = 2;
  seq.R = 2;
  seq.S = 1;
  seq.items = {Nested::leaf(P({2, 2})), Nested::leaf(P({1, 1}))};
  EXPECT_THROW(certify(seq), InvalidArgument);
  EXPECT_EQ(find_violation(seq), std::make_optional(std::make_pair(std::size_t{0}, std::size_t{1})));
  seq.items = {Nested::leaf(P({1, 3}))};
  EXPECT_THROW(certify(seq), InvalidArgument);
  seq.level = 3;
  seq.items = {Nested::set(1, {}), set_of({P({1, 1})}), set_of({P({1, 2}), P({2, 2})})};
  certify(seq);
  ASSERT_EQ(seq.witnesses.size(), 3u);
  EXPECT_EQ(seq.witnesses[2], (std::vector<std::size_t>{0, 0}));
}

TEST(Search, Examples) {
  const auto good = exists_good_coloring(params(2, 4, 2, 2, 1));
  ASSERT_EQ(good.outcome, Outcome::good_coloring);
  EXPECT_TRUE(paths::verify_good(*good.coloring, 2, 1).good);
  EXPECT_EQ(exists_good_coloring(params(2, 5, 2, 2, 1)).outcome, Outcome::exhausted);
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(exists_good_coloring(params(3, 3, n, 2, 1)).outcome, Outcome::good_coloring);
  EXPECT_EQ(exists_good_coloring(params(2, 1, 1, 2, 1)).outcome, Outcome::good_coloring);
}

TEST(Search, AgreesWithFullEnumeration) {
  const int cases[][5] = {
      {2, 4, 2, 2, 1}, {2, 5, 2, 2, 1}, {2, 4, 2, 3, 2}, {2, 3, 2, 3, 2}, {2, 5, 3, 3, 2}, {2, 5, 2, 3, 1},
      {3, 5, 2, 2, 1}, {3, 6, 2, 2, 1}, {3, 5, 3, 3, 2}, {3, 4, 2, 3, 2}, {2, 5, 3, 2, 2}, {4, 6, 2, 2, 1},
  };
  for (const auto& c : cases) {
    bool any = false;
    std::uint64_t canonical_good = 0;
    oracle::for_each_coloring(c[0], c[1], c[3], [&](const Coloring& col) {
      if (oracle::is_good(col, c[2], c[4])) {
        any = true;
        canonical_good += canonical(col);
      }
    });
    const auto p = params(c[0], c[1], c[2], c[3], c[4]);
    const auto cert = exists_good_coloring(p);
    EXPECT_EQ(cert.outcome, any ? Outcome::good_coloring : Outcome::exhausted);
    std::uint64_t visited = 0;
    const auto e = for_each_good_coloring(p, [&](const Coloring& col) {
      EXPECT_TRUE(canonical(col));
      ++visited;
      return true;
    });
    EXPECT_TRUE(e.complete);
    EXPECT_EQ(visited, canonical_good) << c[0] << " " << c[1] << " " << c[2] << " " << c[3] << " " << c[4];
  }
}

TEST(Search, ParallelAndSeededOrders) {
  auto p = params(2, 9, 3, 2, 1);
  const auto serial = exists_good_coloring(p);
  p.jobs = 4;
  const auto parallel = exists_good_coloring(p);
  ASSERT_EQ(parallel.outcome, Outcome::good_coloring);
  EXPECT_EQ(*parallel.coloring, *serial.coloring);
  p.jobs = 1;
  p.value_order_seed = 3;
  const auto seeded = exists_good_coloring(p);
  ASSERT_EQ(seeded.outcome, Outcome::good_coloring);
  EXPECT_TRUE(paths::verify_good(*seeded.coloring, 3, 1).good);
  auto q = params(2, 10, 3, 2, 1);
  q.jobs = 3;
  EXPECT_EQ(exists_good_coloring(q).outcome, Outcome::exhausted);
}

TEST(Search, BudgetGivesIndeterminate) {
  auto p = params(2, 10, 3, 2, 1);
  p.node_budget = 100;
  const auto cert = exists_good_coloring(p);
  EXPECT_EQ(cert.outcome, Outcome::indeterminate);
  EXPECT_FALSE(cert.coloring);
}

TEST(Search, RestrictionStaysGood) {
  for (int N = 4; N <= 9; ++N) {
    const auto cert = exists_good_coloring(params(2, N, 3, 2, 1));
    ASSERT_EQ(cert.outcome, Outcome::good_coloring);
    for (int M = 0; M <= N; ++M) EXPECT_TRUE(paths::verify_good(cert.coloring->restricted(M), 3, 1).good);
  }
}

TEST(ExactValue, SmallValues) {
  ExactParams p;
  p.kind = Kind::ms;
  p.k = 2;
  p.n = 2;
  p.r = 2;
  auto v = exact_value(p);
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(v.value, 5);
  ASSERT_TRUE(v.good);
  EXPECT_EQ(v.good->params.N, 4);
  EXPECT_EQ(v.exhausted->outcome, Outcome::exhausted);

  p.kind = Kind::a;
  p.r = 3;
  p.s = 2;
  v = exact_value(p);
  EXPECT_EQ(v.value, 3);

  p.kind = Kind::ms;
  p.n = 3;
  p.r = 2;
  v = exact_value(p);
  EXPECT_EQ(v.value, 10);
}

TEST(ExactValue, TwoOracleIdentities) {
  for (int n = 1; n <= 3; ++n) {
    ExactParams p;
    p.kind = Kind::ms;
    p.k = 2;
    p.n = n;
    p.r = 2;
    EXPECT_EQ(static_cast<std::size_t>(exact_value(p).value), longest_s_increasing(n, 2, 1).value + 1);
    p.kind = Kind::a;
    p.r = 3;
    p.s = 2;
    const auto a = exact_value(p);
    EXPECT_EQ(static_cast<std::size_t>(a.value), longest_s_increasing(n, 3, 2).value + 1);
    EXPECT_LE(static_cast<std::uint64_t>(a.value), static_cast<std::uint64_t>(n * n + 1));
  }
  ExactParams p;
  p.kind = Kind::ms;
  p.k = 3;
  p.n = 2;
  p.r = 2;
  EXPECT_EQ(static_cast<std::size_t>(exact_value(p).value), longest_m3(2, 2, 1).value + 1);
}

TEST(ExactValue, BracketsOnBudget) {
  ExactParams p;
  p.kind = Kind::a;
  p.k = 3;
  p.n = 50;
  p.r = 3;
  p.s = 2;
  p.node_budget = 100000;
  const auto v = exact_value(p);
  EXPECT_FALSE(v.exact);
  EXPECT_GE(v.lo, 52);
  ASSERT_TRUE(v.hi);
  EXPECT_GT(*v.hi, static_cast<std::uint64_t>(v.lo));
}

TEST(UpperBound, Defaults) {
  EXPECT_EQ(default_upper_bound(Kind::ms, 2, 3, 2, 1), std::optional<std::uint64_t>(10));
  EXPECT_EQ(default_upper_bound(Kind::a, 2, 3, 3, 2), std::optional<std::uint64_t>(10));
  EXPECT_EQ(default_upper_bound(Kind::ms, 3, 2, 2, 1), std::optional<std::uint64_t>(7));
  EXPECT_EQ(default_upper_bound(Kind::a, 3, 2, 3, 2), std::optional<std::uint64_t>(1 + 8 + 28 + 56 + 1));
  EXPECT_FALSE(default_upper_bound(Kind::a, 4, 2, 3, 2));
}

TEST(Construct, S1FromMaximalWitnesses) {
  const auto w = longest_s_increasing(2, 2, 1).witness;
  const auto c = construct_coloring_s1(w, 2, 2);
  EXPECT_EQ(c.N(), 4);
  EXPECT_TRUE(oracle::is_good(c, 2, 1));
  const auto w3 = longest_s_increasing(3, 2, 1).witness;
  const auto c3 = construct_coloring_s1(w3, 2, 2);
  EXPECT_EQ(c3.N(), 9);
  EXPECT_TRUE(paths::verify_good(c3, 3, 1).good);
  const auto m3 = longest_m3(2, 2, 1).witness;
  const auto t = construct_coloring_s1(m3, 3, 2);
  EXPECT_EQ(t.N(), 6);
  EXPECT_TRUE(oracle::is_good(t, 2, 1));
  SIncreasingSequence single = w;
  single.items.resize(1);
  EXPECT_EQ(construct_coloring_s1(single, 2, 2).edge_count(), 0u);
}

TEST(Construct, SRm1) {
  const auto w = longest_s_increasing(2, 3, 2).witness;
  const auto c = construct_coloring_s_rm1(w, 2, 3);
  EXPECT_EQ(c.edge_count(), 1u);
  EXPECT_TRUE(paths::verify_good(c, 2, 2).good);
  for (int n = 2; n <= 4; ++n) {
    const auto wn = longest_s_increasing(n, 3, 2).witness;
    EXPECT_TRUE(oracle::is_good(construct_coloring_s_rm1(wn, 2, 3), n, 2));
    const auto w4 = longest_s_increasing(n, 4, 3).witness;
    EXPECT_TRUE(paths::verify_good(construct_coloring_s_rm1(w4, 2, 4), n, 3).good);
  }
  const auto m3 = longest_m3(2, 3, 2).witness;
  EXPECT_TRUE(oracle::is_good(construct_coloring_s_rm1(m3, 3, 3), 2, 2));
}

TEST(Construct, RejectsInvalidWitness) {
  auto w = longest_s_increasing(2, 2, 1).witness;
  std::swap(w.items[0], w.items[3]);
  EXPECT_THROW(construct_coloring_s1(w, 2, 2), InvalidArgument);
  EXPECT_THROW(construct_coloring_s1(longest_s_increasing(2, 2, 1).witness, 3, 2), InvalidArgument);
  EXPECT_THROW(construct_coloring_s_rm1(longest_s_increasing(2, 2, 1).witness, 2, 3), InvalidArgument);
}

TEST(UpperChain, GoodColoringsGiveIncreasingSequences) {
  Rng rng(91);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 60; ++trial) {
    const int k = 2 + trial % 3;
    const int r = 2 + trial % 2;
    const int s = r == 2 ? 1 : 1 + static_cast<int>(uniform_below(rng, 2));
    const int n = 2 + static_cast<int>(uniform_below(rng, 2));
    const int N = static_cast<int>(uniform_int(rng, k, k + 4));
    const auto c = oracle::random_coloring(k, N, r, rng);
    if (!oracle::is_good(c, n, s)) continue;
    const auto chain = theorem53_upper_chain(c, n, r, s);
    ASSERT_TRUE(chain.valid);
    EXPECT_EQ(chain.sequence.length(), static_cast<std::size_t>(N));
    EXPECT_EQ(chain.sequence.level, k);
    ++checked;
  }
  EXPECT_GE(checked, 30);
  const auto one = theorem53_upper_chain(Coloring(3, 1, 3, {}), 2, 3, 2);
  EXPECT_TRUE(one.valid);
  EXPECT_EQ(one.sequence.length(), 1u);
  EXPECT_THROW(theorem53_upper_chain(Coloring::uniform(2, 5, 2, 1), 2, 2, 1), PreconditionViolation);
}

TEST(UpperChain, SearchWitnessesAtLevelThree) {
  auto p = params(3, 6, 3, 3, 2);
  int count = 0;
  for_each_good_coloring(p, [&](const Coloring& c) {
    const auto chain = theorem53_upper_chain(c, 3, 3, 2);
    EXPECT_TRUE(chain.valid);
    return ++count < 20;
  });
  EXPECT_EQ(count, 20);
}

TEST(ExactValue, FrozenRegressionValues) {
  auto value = [](Kind kind, int k, int n, int r, int s) {
    ExactParams p;
    p.kind = kind;
    p.k = k;
    p.n = n;
    p.r = r;
    p.s = s;
    const auto v = exact_value(p);
    EXPECT_TRUE(v.exact);
    return v.value;
  };
  EXPECT_EQ(value(Kind::a, 2, 1, 3, 2), 2);
  EXPECT_EQ(value(Kind::a, 2, 4, 3, 2), 9);
  EXPECT_EQ(value(Kind::a, 3, 2, 3, 2), 4);
  EXPECT_EQ(value(Kind::a, 3, 3, 3, 2), 7);
  EXPECT_EQ(value(Kind::ms, 3, 2, 2, 1), 7);
  EXPECT_EQ(longest_s_increasing(4, 3, 2).value, 8u);
  EXPECT_EQ(longest_m3(3, 2, 1).value, 20u);
  EXPECT_TRUE(longest_m3(3, 2, 1).exact);
}

TEST(ExactValue, A2Of3ByEnumeration) {
  // every 3-coloring of [5]^(2) has a 3-edge path with at most 2 colors
  std::uint64_t good5 = 0, good4 = 0;
  oracle::for_each_coloring(2, 5, 3, [&](const Coloring& c) { good5 += oracle::is_good(c, 3, 2); });
  oracle::for_each_coloring(2, 4, 3, [&](const Coloring& c) { good4 += oracle::is_good(c, 3, 2); });
  EXPECT_EQ(good5, 0u);
  EXPECT_GT(good4, 0u);
}

TEST(UpperChain, LevelThreeChainPinsM3) {
  // a good coloring of [6] for A_3(3;3,2) gives a valid level-3 sequence of length 6
  const auto cert = exists_good_coloring(params(3, 6, 3, 3, 2));
  ASSERT_EQ(cert.outcome, Outcome::good_coloring);
  const auto chain = theorem53_upper_chain(*cert.coloring, 3, 3, 2);
  EXPECT_TRUE(chain.valid);
  EXPECT_EQ(chain.sequence.length(), 6u);
  EXPECT_EQ(exists_good_coloring(params(3, 7, 3, 3, 2)).outcome, Outcome::exhausted);
}
