#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "monopath/core/combinatorics.hpp"
#include "monopath/core/random.hpp"

namespace monopath::tournament {

/// Cyclic-lexicographic comparison: coordinates are scanned starting at
/// `start` (1-based) and wrapping around; the first strict difference
/// decides.  Returns -1 if x precedes y, 0 if equal, +1 otherwise.
int compare_cyclic_lex(std::span<const std::uint16_t> x, std::span<const std::uint16_t> y, int start);

/// Plain lexicographic comparison with coordinate priority C, C-1, ..., 1.
int compare_reverse_lex(std::span<const std::uint16_t> x, std::span<const std::uint16_t> y);

/// A tournament on vertices 0..size-1.  Rows hold the closed out-neighbourhood
/// {u} + {v : u -> v} as bitsets, materialised up front or produced on demand
/// from an edge predicate.
class Tournament {
 public:
  using Predicate = std::function<bool(std::size_t, std::size_t)>;

  Tournament() = default;

  /// `dominates(u, v)` must be antisymmetric and total on distinct vertices.
  static Tournament from_predicate(std::size_t size, Predicate dominates, bool materialize);

  /// Each order lists every vertex from lowest to highest; u -> v iff v is
  /// below u in a strict majority of the (odd number of) orders.
  static Tournament from_orders(const std::vector<std::vector<int>>& orders);

  /// Uniformly random tournament (independent fair coin per pair).
  static Tournament random(std::size_t size, Rng& rng);

  std::size_t size() const noexcept { return size_; }
  std::size_t words() const noexcept { return words_; }
  bool materialized() const noexcept { return !rows_.empty() || size_ == 0; }

  bool dominates(std::size_t u, std::size_t v) const;

  /// Closed row of u.  For lazy tournaments the row is built into `scratch`
  /// (which must hold words() words) and a pointer to it is returned.
  const std::uint64_t* closed_row(std::size_t u, std::uint64_t* scratch) const;

  /// Bitset with every vertex set.
  const std::vector<std::uint64_t>& all_vertices() const noexcept { return all_; }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> all_;
  Predicate predicate_;
};

/// Linear order added when the number of coordinates is even.
enum class ExtraOrder { reverse_lex, lex };

/// Majority threshold K for C coordinates: C = 2K-1 (odd) or C = 2K-2 (even).
int majority_threshold(std::size_t coordinates);

/// Tournament induced by the C cyclic-lex orders on distinct vectors of
/// length C (plus one extra order when C is even).
struct MajorityTournament {
  std::vector<Point> vertices;
  std::size_t coordinates = 0;
  int K = 0;
  bool has_extra_order = false;
  /// ranks[o][v]: position of vertex v in order o (0 = lowest)
  std::vector<std::vector<std::uint32_t>> ranks;
  Tournament graph;

  std::size_t order_count() const noexcept { return ranks.size(); }
  /// Number of orders in which v is below u
  int wins(std::size_t u, std::size_t v) const;
  bool dominates(std::size_t u, std::size_t v) const { return wins(u, v) >= K; }
};

inline constexpr std::size_t kMaterializeLimit = 512;

/// Tournament over P-vectors for r colors and s-subsets.  Requires s > r/2.
MajorityTournament build_tournament(std::vector<Point> vectors, int r, int s,
                                    ExtraOrder extra = ExtraOrder::reverse_lex,
                                    std::size_t materialize_limit = kMaterializeLimit);

/// Same construction for an arbitrary coordinate count, without the regime
/// check.
MajorityTournament build_majority_tournament(std::vector<Point> vectors, std::size_t coordinates,
                                             ExtraOrder extra = ExtraOrder::reverse_lex,
                                             std::size_t materialize_limit = kMaterializeLimit);

struct ExactLimits {
  std::size_t max_vertices_small_cap = 200;  // size_cap <= 3
  std::size_t max_vertices_uncapped = 60;
};

/// Smallest dominating set of size at most `size_cap` (<= 0: no cap), the
/// lexicographically least index list among those of minimum size.  Returns
/// nullopt if none exists within the cap.
std::optional<std::vector<int>> dominating_set_exact(const Tournament& t, int size_cap, int jobs = 1,
                                                     const ExactLimits& limits = {});

/// Greedy: repeatedly take the vertex covering the most undominated vertices
/// (lowest index on ties).
std::vector<int> dominating_set_greedy(const Tournament& t);

/// Replays the domination relation edge by edge.
bool is_dominating(const Tournament& t, std::span<const int> members);

/// ceil(log2 n) for n >= 1.
int ceil_log2(std::size_t n);

struct AuditConfig {
  std::uint64_t samples = 10000;
  int grid = 8;          // vectors drawn from [grid]^3
  int vectors_max = 120;
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct AuditViolation {
  std::uint64_t sample = 0;
  std::vector<Point> vectors;
};

struct AuditReport {
  AuditConfig config;
  std::map<int, std::uint64_t> f_histogram;
  std::vector<AuditViolation> violations;
};

/// Samples random sets of distinct vectors in [grid]^3, builds the 2-majority
/// tournament of the three cyclic-lex orders and records the exact domination
/// number (cap 3).  Any set needing more than 3 is a violation.
AuditReport domination_number_2majority_audit(const AuditConfig& config);

/// Exact domination number of one vector set under the 3-order tournament.
std::optional<int> two_majority_domination_number(std::vector<Point> vectors);

}  // namespace monopath::tournament
