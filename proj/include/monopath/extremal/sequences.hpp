#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monopath/core/bitset.hpp"
#include "monopath/core/combinatorics.hpp"

namespace monopath::extremal {

/// Element of the iterated power set of [n]^R.  Depth 0 is a vector; depth d
/// is a set of depth-(d-1) elements, kept sorted and duplicate free so that
/// equal sets compare equal.
struct Nested {
  int depth = 0;
  Point vector;
  std::vector<Nested> members;

  static Nested leaf(Point p);
  /// All members must have depth `depth - 1`.
  static Nested set(int depth, std::vector<Nested> members);

  friend bool operator==(const Nested& a, const Nested& b);
  /// Canonical order: depth, then vector, then members lexicographically.
  friend bool operator<(const Nested& a, const Nested& b);
};

std::string to_string(const Nested& item);

/// x <_S y: x is strictly below y in at least S coordinates.
bool s_less(std::span<const std::uint16_t> x, std::span<const std::uint16_t> y, int S);

/// The level-(depth+2) relation.  For depth 0 this is s_less.  For sets, F < F'
/// iff some member of F' is above every member of F; the least such member's
/// index in F'.members is returned (0 for depth 0).
std::optional<std::size_t> s_less_k(const Nested& a, const Nested& b, int S);

struct SIncreasingSequence {
  int level = 2;
  int n = 0;
  int R = 0;
  int S = 0;
  std::vector<Nested> items;
  /// For level >= 3: witnesses[j][i] (i < j) indexes items[j].members.
  std::vector<std::vector<std::size_t>> witnesses;

  std::size_t length() const noexcept { return items.size(); }
};

/// Checks shape (depth, entries within [n]) and every pair; fills in the
/// witnesses.  Throws InvalidArgument naming the first bad pair.
void certify(SIncreasingSequence& sequence);

/// Non-throwing check; returns the first failing pair (i, j).
std::optional<std::pair<std::size_t, std::size_t>> find_violation(const SIncreasingSequence& sequence);

/// Longest sequence i_1, ..., i_m with rel[i_a].test(i_b) for all a < b.
struct ChainResult {
  std::vector<int> chain;
  bool exact = true;
  std::uint64_t nodes = 0;
};

ChainResult longest_chain(const std::vector<Bitset>& rel, std::uint64_t node_budget);

inline constexpr std::uint64_t kDefaultSequenceBudget = 50'000'000;

struct SequenceResult {
  std::size_t value = 0;
  bool exact = true;
  SIncreasingSequence witness;
  std::uint64_t nodes = 0;
};

/// m_2(n; R, S) with a witness.  With `require_exact`, an exhausted budget
/// throws ResourceLimit instead of returning a flagged lower bound.
SequenceResult longest_s_increasing(int n, int R, int S, std::uint64_t budget = kDefaultSequenceBudget,
                                    bool require_exact = false);

/// Largest n^R for which the level-3 search enumerates all subsets.
inline constexpr std::uint64_t kMaxLevel3Universe = 9;

/// m_3(n; R, S).  Exact when the subset universe is small and the search
/// finishes; otherwise a flagged lower bound from the singleton lift.
SequenceResult longest_m3(int n, int R, int S, std::uint64_t budget = kDefaultSequenceBudget);

/// All points of [n]^R in lexicographic order.
std::vector<Point> grid_points(int n, int R);

}  // namespace monopath::extremal
