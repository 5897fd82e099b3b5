#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "monopath/core/coloring.hpp"

namespace monopath::extremal {

enum class Outcome { good_coloring, exhausted, indeterminate };

const char* outcome_name(Outcome outcome);

struct SearchParams {
  int k = 2;
  int N = 0;
  int n = 2;
  int r = 2;
  int s = 1;
  std::uint64_t node_budget = 100'000'000;
  double time_budget_seconds = 600.0;
  int jobs = 1;
  /// Colors are tried in a seeded per-edge order instead of 1, 2, ...
  std::optional<std::uint64_t> value_order_seed;
};

inline constexpr std::size_t kMaxSearchEdges = 4096;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double seconds = 0.0;
};

/// Outcome of one search at a fixed N.  A good coloring is replayed through
/// verify_good before it is returned.
struct SearchCertificate {
  SearchParams params;
  Outcome outcome = Outcome::indeterminate;
  std::optional<Coloring> coloring;
  SearchStats stats;
  std::string note;
};

/// Depth-first assignment of colors to the edges of [N]^(k) in colex order,
/// with incremental l_S tables and first-occurrence color symmetry breaking.
SearchCertificate exists_good_coloring(const SearchParams& params);

struct EnumerationResult {
  std::uint64_t visited = 0;
  bool complete = false;  // the whole tree was explored
  SearchStats stats;
};

/// Visits good colorings in canonical form (colors first used in the order
/// 1, 2, ...) in search order until `visit` returns false.  Single-threaded.
EnumerationResult for_each_good_coloring(const SearchParams& params, const std::function<bool(const Coloring&)>& visit);

enum class Kind { ms, a };

const char* kind_name(Kind kind);

struct ExactParams {
  Kind kind = Kind::ms;
  int k = 2;
  int n = 2;
  int r = 2;
  int s = 1;  // ignored for Kind::ms
  /// First N to search; defaults to n + k - 2, the last N without a path.
  /// The caller vouches that good colorings exist below it.
  std::optional<int> start;
  std::uint64_t node_budget = 100'000'000;  // over the whole call
  double time_budget_seconds = 600.0;
  int jobs = 1;
};

struct ExactResult {
  bool exact = false;
  int value = 0;  // when exact
  int lo = 0;     // value >= lo
  std::optional<std::uint64_t> hi;
  std::optional<SearchCertificate> good;       // at value - 1 (or lo - 1)
  std::optional<SearchCertificate> exhausted;  // at value
  std::uint64_t total_nodes = 0;
  double seconds = 0.0;
};

/// Known upper bound usable when the search stops early: n^ceil(r/s) + 1 for
/// k = 2, the dominating-set count bound for (k, r, s) = (3, 3, 2).
std::optional<std::uint64_t> default_upper_bound(Kind kind, int k, int n, int r, int s);

/// Least N at which no good coloring exists, found by searching N = start,
/// start + 1, ... until the search exhausts.
ExactResult exact_value(const ExactParams& params);

}  // namespace monopath::extremal
