#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "monopath/core/coloring.hpp"
#include "monopath/core/combinatorics.hpp"

namespace monopath::paths {

/// A tight monotone path: vertices v_1 < ... < v_{n+k-1} and the colors of
/// its n consecutive edges.
struct Path {
  std::vector<int> vertices;
  std::vector<int> colors;

  int length() const noexcept { return static_cast<int>(colors.size()); }
  int distinct_colors() const;
  ColorSet color_set() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Colors of the consecutive k-windows of `vertices`.
Path make_path(const Coloring& coloring, std::vector<int> vertices);

/// l_S for one color set: longest S-colored tight monotone path (in edges)
/// ending at each (k-1)-tuple, indexed by the tuple's colex rank.
class PathLengthTable {
 public:
  PathLengthTable(int k, int N, int r, ColorSet colors, std::vector<std::uint16_t> lengths);

  int k() const noexcept { return k_; }
  int N() const noexcept { return N_; }
  int r() const noexcept { return r_; }
  ColorSet colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return lengths_.size(); }

  std::uint16_t at_rank(std::size_t rank) const { return lengths_[rank]; }
  std::uint16_t at(std::span<const int> tuple) const;
  std::uint16_t max_length() const;
  const std::vector<std::uint16_t>& lengths() const noexcept { return lengths_; }

 private:
  int k_;
  int N_;
  int r_;
  ColorSet colors_;
  std::vector<std::uint16_t> lengths_;
};

PathLengthTable restricted_lengths(const Coloring& coloring, ColorSet colors);

/// Same as restricted_lengths, memoised on (fingerprint, color set).  Safe to
/// call from several threads.
std::shared_ptr<const PathLengthTable> cached_restricted_lengths(const Coloring& coloring, ColorSet colors);
void clear_length_cache();
std::size_t length_cache_size();

/// l_S tables for many color sets at once.  Values are stored lane-interleaved
/// (one row of `stride()` lanes per tuple) so one edge relaxes every color set
/// with a single kernel call.
class MultiLengthTable {
 public:
  MultiLengthTable(const Coloring& coloring, std::vector<ColorSet> sets);

  std::size_t lanes() const noexcept { return sets_.size(); }
  std::size_t stride() const noexcept { return stride_; }
  std::size_t tuple_count() const noexcept { return tuples_; }
  const std::vector<ColorSet>& sets() const noexcept { return sets_; }

  std::uint16_t at_rank(std::size_t tuple_rank, std::size_t lane) const {
    return values_[tuple_rank * stride_ + lane];
  }
  std::span<const std::uint16_t> row(std::size_t tuple_rank) const {
    return {values_.data() + tuple_rank * stride_, sets_.size()};
  }
  std::uint16_t max_length(std::size_t lane) const;
  PathLengthTable table(std::size_t lane) const;

 private:
  int k_;
  int N_;
  int r_;
  std::vector<ColorSet> sets_;
  std::size_t stride_;
  std::size_t tuples_;
  std::vector<std::uint16_t> values_;
};

/// Walks back `edges` steps from the tuple at `end_rank` along argmax
/// predecessors of `lengths`, returning the last `edges` edges of a longest
/// S-colored path ending there.  Requires lengths(end_rank) >= edges.
Path trace_path(const Coloring& coloring, ColorSet colors,
                const std::function<std::uint16_t(std::size_t)>& lengths, std::size_t end_rank, int edges);

struct PVector {
  std::vector<int> tuple;
  Point entries;
};

/// <1 + l_S(tuple)> over the s-subsets S of [r] in colex order.
PVector p_vector(const Coloring& coloring, int s, std::span<const int> tuple);

/// P-vectors of every (k-1)-tuple, computed in one DP pass.
class PVectorTable {
 public:
  PVectorTable(const Coloring& coloring, int s);

  int s() const noexcept { return s_; }
  const ColorSubsetIndex& index() const noexcept { return index_; }
  std::size_t dimension() const noexcept { return index_.size(); }
  std::size_t tuple_count() const noexcept { return lengths_.tuple_count(); }

  Point at_rank(std::size_t tuple_rank) const;
  Point at(std::span<const int> tuple) const;
  /// Largest entry over all tuples
  int max_entry() const;

 private:
  int s_;
  ColorSubsetIndex index_;
  MultiLengthTable lengths_;
};

struct MinColorsResult {
  bool path_exists = false;
  int min_colors = 0;
  std::optional<Path> witness;
};

inline constexpr std::uint64_t kDefaultDpBudget = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 28;

/// Minimum number of distinct colors over all tight monotone paths with
/// exactly n edges.
MinColorsResult min_colors_over_paths(const Coloring& coloring, int n,
                                      std::uint64_t dp_budget = kDefaultDpBudget);

struct VerifyResult {
  bool good = true;
  bool vacuous = false;  // no path with n edges exists at all
  std::optional<Path> violation;
};

/// True iff every tight monotone path on n edges uses at least s+1 colors.
VerifyResult verify_good(const Coloring& coloring, int n, int s);

/// Work estimate (edges inspected) for enumerate_paths_oracle.
std::uint64_t oracle_work_estimate(const Coloring& coloring, int n);

/// Brute force: visits every window v_1 < ... < v_{n+k-1} once.  The visitor
/// returns false to stop early.  Throws ResourceLimit above `work_budget`.
void enumerate_paths_oracle(const Coloring& coloring, int n, const std::function<bool(const Path&)>& visit,
                            std::uint64_t work_budget = kDefaultOracleBudget);

}  // namespace monopath::paths
