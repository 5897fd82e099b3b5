#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "monopath/errors.hpp"
#include "monopath/paths/paths.hpp"

using namespace monopath;
using paths::Path;

namespace {

Coloring k2_three_vertices() {
  // colex order of pairs in [3]: {1,2}, {1,3}, {2,3}
  return Coloring(2, 3, 2, {1, 2, 1});
}

std::vector<ColorSet> all_nonempty_sets(int r) {
  std::vector<ColorSet> out;
  for (ColorSet m = 1; m < (ColorSet{1} << r); ++m) out.push_back(m);
  return out;
}

}  // namespace

TEST(RestrictedLengths, MonochromaticTriples) {
  const auto c = Coloring::uniform(3, 4, 1, 1);
  const auto t = paths::restricted_lengths(c, 0b1);
  EXPECT_EQ(t.at(std::vector<int>{3, 4}), 2);
  EXPECT_EQ(t.at(std::vector<int>{2, 3}), 1);
  EXPECT_EQ(t.at(std::vector<int>{1, 2}), 0);
}

TEST(RestrictedLengths, MissingColorGivesZeros) {
  const auto c = Coloring::uniform(3, 6, 2, 1);
  const auto t = paths::restricted_lengths(c, 0b10);
  for (auto v : t.lengths()) EXPECT_EQ(v, 0);
}

TEST(RestrictedLengths, GraphExample) {
  const auto t = paths::restricted_lengths(k2_three_vertices(), 0b1);
  EXPECT_EQ(t.at(std::vector<int>{2}), 1);
  EXPECT_EQ(t.at(std::vector<int>{3}), 2);
}

TEST(RestrictedLengths, AgreesWithRecursiveDefinition) {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const int N = static_cast<int>(uniform_int(rng, k, 8));
    const int r = static_cast<int>(uniform_int(rng, 1, 4));
    const auto c = oracle::random_coloring(k, N, r, rng);
    const oracle::EdgeColors color(c);
    const auto tuples = oracle::all_subsets_colex(N, k - 1);
    for (ColorSet S : all_nonempty_sets(r)) {
      const auto t = paths::restricted_lengths(c, S);
      for (std::size_t i = 0; i < tuples.size(); ++i)
        ASSERT_EQ(t.at_rank(i), oracle::longest_ending_at(color, S, tuples[i]));
    }
  }
}

TEST(RestrictedLengths, MultiTableMatchesSingleTables) {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const auto c = oracle::random_coloring(k, 9, 4, rng);
    const auto sets = all_nonempty_sets(4);
    const paths::MultiLengthTable multi(c, sets);
    for (std::size_t lane = 0; lane < sets.size(); ++lane) {
      const auto single = paths::restricted_lengths(c, sets[lane]);
      ASSERT_EQ(multi.table(lane).lengths(), single.lengths());
      ASSERT_EQ(multi.max_length(lane), single.max_length());
    }
  }
}

TEST(RestrictedLengths, ExtensionInequalityAndMonotonicity) {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const int N = static_cast<int>(uniform_int(rng, k, 9));
    const auto c = oracle::random_coloring(k, N, 3, rng);
    const auto edges = oracle::all_subsets_colex(N, k);
    for (ColorSet S : all_nonempty_sets(3)) {
      const auto t = paths::restricted_lengths(c, S);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (((S >> (c.color(e) - 1)) & 1U) == 0) continue;
        std::vector<int> prefix(edges[e].begin(), edges[e].end() - 1), suffix(edges[e].begin() + 1, edges[e].end());
        ASSERT_GE(t.at(suffix), 1 + t.at(prefix));
      }
      for (ColorSet T : all_nonempty_sets(3)) {
        if ((S & T) != S) continue;
        const auto big = paths::restricted_lengths(c, T);
        for (std::size_t i = 0; i < t.size(); ++i) ASSERT_LE(t.at_rank(i), big.at_rank(i));
      }
    }
  }
}

TEST(RestrictedLengths, CacheIsKeyedByFingerprint) {
  paths::clear_length_cache();
  const auto c = Coloring::uniform(3, 6, 2, 1);
  const auto a = paths::cached_restricted_lengths(c, 0b1);
  const auto b = paths::cached_restricted_lengths(c, 0b1);
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(paths::length_cache_size(), 1u);
  paths::cached_restricted_lengths(c, 0b10);
  EXPECT_EQ(paths::length_cache_size(), 2u);
  paths::clear_length_cache();
  EXPECT_EQ(paths::length_cache_size(), 0u);
}

TEST(TracePath, ProducesValidLongestPaths) {
  Rng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const auto c = oracle::random_coloring(k, 8, 2, rng);
    const ColorSet S = 0b01;
    const auto t = paths::restricted_lengths(c, S);
    for (std::size_t rank = 0; rank < t.size(); ++rank) {
      const int len = t.at_rank(rank);
      if (len == 0) continue;
      const auto p = paths::trace_path(c, S, [&](std::size_t i) { return t.at_rank(i); }, rank, len);
      ASSERT_EQ(p.length(), len);
      ASSERT_EQ(p.color_set(), S);
      const auto end = colex_unrank(rank, k - 1);
      ASSERT_TRUE(std::equal(end.begin(), end.end(), p.vertices.end() - (k - 1)));
      ASSERT_EQ(paths::make_path(c, p.vertices), p);
    }
  }
}

TEST(PVector, NoPredecessorsGivesOnes) {
  const auto c = Coloring::uniform(3, 5, 3, 2);
  const auto p = paths::p_vector(c, 2, std::vector<int>{1, 2});
  EXPECT_EQ(p.entries, (Point{1, 1, 1}));
}

TEST(PVector, MonochromaticFollowsSubsetOrder) {
  // subset order {1,2}, {1,3}, {2,3}; only the sets containing color 1 see the path
  const auto c = Coloring::uniform(3, 4, 3, 1);
  const auto p = paths::p_vector(c, 2, std::vector<int>{3, 4});
  EXPECT_EQ(p.entries, (Point{3, 3, 1}));
}

TEST(PVector, RedBlueGraphVector) {
  const auto p = paths::p_vector(k2_three_vertices(), 1, std::vector<int>{3});
  // red path 1-2-3 has two edges, the single blue edge {1,3} has one
  EXPECT_EQ(p.entries, (Point{3, 2}));
}

TEST(PVector, ArityChecked) {
  const auto c = Coloring::uniform(3, 5, 3, 1);
  EXPECT_THROW(paths::p_vector(c, 2, std::vector<int>{1, 2, 3}), InvalidArgument);
}

TEST(PVector, StrictIncreaseOnSetsContainingEdgeColor) {
  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const auto c = oracle::random_coloring(k, 8, 4, rng);
    const paths::PVectorTable table(c, 2);
    const auto edges = oracle::all_subsets_colex(8, k);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::vector<int> prefix(edges[e].begin(), edges[e].end() - 1), suffix(edges[e].begin() + 1, edges[e].end());
      const auto a = table.at(prefix), b = table.at(suffix);
      int strict = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if ((table.index()[i] >> (c.color(e) - 1)) & 1U) {
          ASSERT_LT(a[i], b[i]);
          ++strict;
        }
      ASSERT_EQ(strict, 3);  // C(3,1) sets of size 2 contain a given color of [4]
    }
  }
}

TEST(MinColors, Examples) {
  const auto mono = Coloring::uniform(3, 7, 3, 2);
  const auto a = paths::min_colors_over_paths(mono, 3);
  EXPECT_TRUE(a.path_exists);
  EXPECT_EQ(a.min_colors, 1);
  const auto b = paths::min_colors_over_paths(Coloring(2, 3, 2, {1, 2, 2}), 2);
  EXPECT_EQ(b.min_colors, 2);
  EXPECT_EQ(b.witness->vertices, (std::vector<int>{1, 2, 3}));
  const auto none = paths::min_colors_over_paths(Coloring::uniform(3, 4, 2, 1), 3);
  EXPECT_FALSE(none.path_exists);
}

TEST(MinColors, AgreesWithEnumeration) {
  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const int N = static_cast<int>(uniform_int(rng, k, 8));
    const int r = static_cast<int>(uniform_int(rng, 1, 5));
    const int n = static_cast<int>(uniform_int(rng, 1, 4));
    const auto c = oracle::random_coloring(k, N, r, rng);
    const auto got = paths::min_colors_over_paths(c, n);
    const auto all = oracle::all_paths(c, n);
    ASSERT_EQ(got.path_exists, !all.empty());
    if (all.empty()) continue;
    int best = 99;
    for (const auto& [chain, mask] : all) best = std::min(best, __builtin_popcount(mask));
    ASSERT_EQ(got.min_colors, best);
    ASSERT_EQ(got.witness->distinct_colors(), best);
    ASSERT_EQ(got.witness->length(), n);
    ASSERT_EQ(paths::make_path(c, got.witness->vertices), *got.witness);
    // a tiny DP budget forces the enumeration fallback
    ASSERT_EQ(paths::min_colors_over_paths(c, n, 1).min_colors, best);
  }
}

TEST(VerifyGood, Examples) {
  const auto mono = Coloring::uniform(3, 4, 1, 1);
  const auto v = paths::verify_good(mono, 2, 1);
  EXPECT_FALSE(v.good);
  EXPECT_EQ(v.violation->vertices, (std::vector<int>{1, 2, 3, 4}));
  const auto vacuous = paths::verify_good(Coloring::uniform(3, 4, 2, 1), 3, 1);
  EXPECT_TRUE(vacuous.good);
  EXPECT_TRUE(vacuous.vacuous);
  Rng rng(2);
  const auto few = oracle::random_coloring(2, 6, 2, rng);
  EXPECT_FALSE(paths::verify_good(few, 3, 2).good);
  EXPECT_TRUE(paths::verify_good(Coloring(2, 1, 2, {}), 1, 1).vacuous);
}

TEST(VerifyGood, AgreesWithEnumeration) {
  Rng rng(27);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const int N = static_cast<int>(uniform_int(rng, 1, 8));
    const int r = static_cast<int>(uniform_int(rng, 1, 4));
    const int n = static_cast<int>(uniform_int(rng, 1, 3));
    const int s = static_cast<int>(uniform_int(rng, 1, 3));
    const auto c = oracle::random_coloring(k, N, r, rng);
    const auto v = paths::verify_good(c, n, s);
    ASSERT_EQ(v.good, oracle::is_good(c, n, s));
    if (!v.good) {
      ASSERT_EQ(v.violation->length(), n);
      ASSERT_LE(v.violation->distinct_colors(), s);
      ASSERT_EQ(paths::make_path(c, v.violation->vertices), *v.violation);
    }
  }
}

TEST(Oracle, WindowCounts) {
  const auto c3 = Coloring::uniform(3, 5, 2, 1);
  int count = 0;
  paths::enumerate_paths_oracle(c3, 2, [&](const Path& p) {
    EXPECT_EQ(p.length(), 2);
    ++count;
    return true;
  });
  EXPECT_EQ(count, 5);
  count = 0;
  paths::enumerate_paths_oracle(Coloring::uniform(2, 4, 2, 1), 3, [&](const Path&) { return ++count, true; });
  EXPECT_EQ(count, 1);
  count = 0;
  paths::enumerate_paths_oracle(Coloring::uniform(2, 4, 2, 1), 4, [&](const Path&) { return ++count, true; });
  EXPECT_EQ(count, 0);
}

TEST(Oracle, BudgetGuard) {
  const auto c = Coloring::uniform(2, 30, 2, 1);
  EXPECT_THROW(paths::enumerate_paths_oracle(c, 10, [](const Path&) { return true; }, 1000), ResourceLimit);
}

TEST(Oracle, LongestRestrictedPathMatchesDp) {
  Rng rng(28);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const int N = static_cast<int>(uniform_int(rng, k, 8));
    const int r = static_cast<int>(uniform_int(rng, 1, 4));
    const auto c = oracle::random_coloring(k, N, r, rng);
    for (ColorSet S : all_nonempty_sets(r)) {
      int longest = 0;
      for (int n = 1; n + k - 1 <= N; ++n) {
        bool found = false;
        paths::enumerate_paths_oracle(c, n, [&](const Path& p) {
          found = (p.color_set() & ~S) == 0;
          return !found;
        });
        if (found) longest = n;
      }
      ASSERT_EQ(paths::restricted_lengths(c, S).max_length(), longest);
    }
  }
}
