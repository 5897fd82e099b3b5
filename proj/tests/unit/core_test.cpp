#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "../support/oracles.hpp"
#include "monopath/core/coloring.hpp"
#include "monopath/core/combinatorics.hpp"
#include "monopath/core/tower.hpp"
#include "monopath/errors.hpp"

using namespace monopath;

namespace {

std::uint64_t rank_of(std::vector<int> s) { return colex_rank(s); }

}  // namespace

TEST(Colex, RankExamples) {
  EXPECT_EQ(rank_of({1, 2, 3}), 0u);
  EXPECT_EQ(rank_of({1, 2, 4}), 1u);
  EXPECT_EQ(rank_of({2, 3, 4}), 3u);
}

TEST(Colex, UnrankExamples) {
  EXPECT_EQ(colex_unrank(0, 3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(colex_unrank(3, 3), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(colex_unrank(1, 2), (std::vector<int>{1, 3}));
}

TEST(Colex, RejectsUnsortedInput) {
  EXPECT_THROW(rank_of({2, 1}), InvalidArgument);
  EXPECT_THROW(rank_of({1, 1, 2}), InvalidArgument);
  EXPECT_THROW(rank_of({0, 2}), InvalidArgument);
}

TEST(Colex, MatchesReferenceEnumeration) {
  for (int k = 1; k <= 5; ++k)
    for (int N = k; N <= 12; ++N) {
      const auto subsets = oracle::all_subsets_colex(N, k);
      ASSERT_EQ(subsets.size(), binomial(N, k));
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        ASSERT_EQ(colex_rank(subsets[i]), i);
        ASSERT_EQ(colex_unrank(i, k), subsets[i]);
      }
      std::size_t visited = 0;
      for_each_subset(N, k, [&](std::span<const int> s) {
        ASSERT_EQ(std::vector<int>(s.begin(), s.end()), subsets[visited]);
        ++visited;
      });
      EXPECT_EQ(visited, subsets.size());
    }
}

TEST(Colex, OrderDecidedByLargestDifference) {
  for (int k = 1; k <= 4; ++k) {
    const auto subsets = oracle::all_subsets_colex(8, k);
    for (const auto& a : subsets)
      for (const auto& b : subsets) {
        if (a == b) continue;
        std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end()), diff;
        for (int x : sa)
          if (!sb.count(x)) diff.insert(x);
        for (int x : sb)
          if (!sa.count(x)) diff.insert(x);
        const bool b_has_max = sb.count(*diff.rbegin()) > 0;
        ASSERT_EQ(colex_rank(a) < colex_rank(b), b_has_max);
      }
  }
}

TEST(Binomial, SmallAndLarge) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_EQ(binomial(66, 33), 7219428434016265740ULL);
  EXPECT_EQ(binomial(100, 3), 161700u);
  EXPECT_THROW(binomial(200, 100), ResourceLimit);
}

TEST(Tower, Examples) {
  EXPECT_EQ(tower(0, 5), 5);
  EXPECT_EQ(tower(1, 3), 8);
  EXPECT_EQ(tower(2, 3), 256);
  EXPECT_EQ(tower(3, 2), 65536);
}

TEST(Tower, StrictlyIncreasing) {
  for (int h = 0; h <= 3; ++h)
    for (std::uint64_t m = 2; m <= 4; ++m) {
      if (h < 3) {
        EXPECT_LT(tower(h, m), tower(h + 1, m));
      }
      if (m < 4) {
        EXPECT_LT(tower(h, m), tower(h, m + 1));
      }
    }
}

TEST(Tower, DigitCap) {
  EXPECT_THROW(tower(3, 5, 1000), ResourceLimit);
  EXPECT_NO_THROW(tower(2, 5, 1000));
}

TEST(ColorSubsets, Examples) {
  const auto a = color_subsets(3, 2);
  EXPECT_EQ(a.masks(), (std::vector<ColorSet>{0b011, 0b101, 0b110}));
  const auto b = color_subsets(3, 1);
  EXPECT_EQ(b.masks(), (std::vector<ColorSet>{0b001, 0b010, 0b100}));
  const auto c = color_subsets(4, 3);
  EXPECT_EQ(c.size(), 4u);
  for (int color = 1; color <= 4; ++color) EXPECT_EQ(c.containing(color).size(), 3u);
  EXPECT_EQ(a.members(2), (std::vector<int>{2, 3}));
  EXPECT_EQ(a.index_of(0b101), 1);
  EXPECT_EQ(a.index_of(0b111), -1);
  EXPECT_THROW(color_subsets(3, 3), InvalidArgument);
  EXPECT_THROW(color_subsets(3, 0), InvalidArgument);
}

TEST(ColorSubsets, EachColorCount) {
  for (int r = 2; r <= 7; ++r)
    for (int s = 1; s < r; ++s) {
      const auto idx = color_subsets(r, s);
      ASSERT_EQ(idx.size(), binomial(r, s));
      std::set<ColorSet> distinct(idx.masks().begin(), idx.masks().end());
      EXPECT_EQ(distinct.size(), idx.size());
      EXPECT_TRUE(std::is_sorted(idx.masks().begin(), idx.masks().end()));
      for (int c = 1; c <= r; ++c) EXPECT_EQ(idx.containing(c).size(), binomial(r - 1, s - 1));
    }
}

TEST(Coloring, Basics) {
  const auto c = Coloring::uniform(3, 4, 2, 1);
  EXPECT_EQ(c.edge_count(), 4u);
  EXPECT_EQ(c.color_of(std::vector<int>{2, 3, 4}), 1);
  EXPECT_THROW(Coloring(2, 4, 2, std::vector<std::uint8_t>(5, 1)), InvalidArgument);
  EXPECT_THROW(Coloring(2, 3, 2, std::vector<std::uint8_t>{1, 3, 1}), InvalidArgument);
  EXPECT_EQ(Coloring(3, 2, 2, {}).edge_count(), 0u);
}

TEST(Coloring, RestrictionKeepsRanks) {
  Rng rng(5);
  const auto c = oracle::random_coloring(3, 8, 3, rng);
  const auto sub = c.restricted(6);
  ASSERT_EQ(sub.edge_count(), binomial(6, 3));
  for (std::size_t e = 0; e < sub.edge_count(); ++e) EXPECT_EQ(sub.color(e), c.color(e));
}

TEST(Hyc, LoadExample) {
  const auto c = coloring_from_string("HYC v1\nk=3 N=4 r=2\n1 2 2 1\n");
  EXPECT_EQ(c.edge_count(), 4u);
  EXPECT_EQ(c.color(1), 2);
}

TEST(Hyc, WrongCountNamesField) {
  try {
    coloring_from_string("HYC v1\nk=2 N=5 r=3\n1 1 1 1 1 1 1 1 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.field(), "colors");
  }
}

TEST(Hyc, RejectsMalformed) {
  const char* bad[] = {
      "HYC v2\nk=2 N=3 r=2\n1 1 1\n",   "HYC v1\nk=2  N=3 r=2\n1 1 1\n", "HYC v1\nN=3 k=2 r=2\n1 1 1\n",
      "HYC v1\nk=2 N=3 r=2\n1 1 3\n",   "HYC v1\nk=2 N=3 r=2\n1 1 1\nx\n", "HYC v1\nk=2 N=3 r=2\n1 1 1 \n",
      "HYC v1\nk=2 N=3 r=2\r\n1 1 1\n", "HYC v1\nk=2 N=3 r=2\n1 1 1\n\n",  "HYC v1\nk=2 N=3 r=2\n1 1 a\n",
  };
  for (const char* text : bad) EXPECT_THROW(coloring_from_string(text), ParseError) << text;
}

TEST(Hyc, RoundTripFuzz) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(uniform_int(rng, 2, 4));
    const int N = static_cast<int>(uniform_int(rng, 0, 9));
    const int r = static_cast<int>(uniform_int(rng, 1, 6));
    const auto c = oracle::random_coloring(k, N, r, rng);
    const auto text = coloring_to_string(c);
    const auto back = coloring_from_string(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(back.fingerprint(), c.fingerprint());
    EXPECT_EQ(coloring_to_string(back), text);
  }
}
