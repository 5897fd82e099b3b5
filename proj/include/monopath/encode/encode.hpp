#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monopath/core/coloring.hpp"
#include "monopath/core/combinatorics.hpp"
#include "monopath/paths/paths.hpp"

namespace monopath::encode {

/// Down-closed subset of [n]^2, stored as its staircase profile:
/// profile[x - 1] is the height of column x (0 = empty column).
struct DownSet2D {
  int n = 0;
  std::vector<int> profile;

  bool contains(int x1, int x2) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  friend bool operator==(const DownSet2D&, const DownSet2D&) = default;
  friend auto operator<=>(const DownSet2D&, const DownSet2D&) = default;
};

/// Down-closure in [n]^2 of the red/blue vectors P(u, v), u < v, of a
/// 2-coloring of triples.  Throws PreconditionViolation if some P(u, v) leaves
/// the grid.
DownSet2D seidenberg_downset(const Coloring& coloring, int n, int v);

/// seidenberg_downset for v = 1..N (index v - 1).
std::vector<DownSet2D> seidenberg_map(const Coloring& coloring, int n);

/// Number of down-sets of [n]^2, counted by enumerating profiles.  n <= 14.
std::uint64_t count_downsets(int n);

inline constexpr int kMaxDownsetSide = 14;

/// {P(u, suffix) : u < suffix[0]} as a sorted list of distinct vectors.
struct PredecessorSet {
  std::vector<int> suffix;
  std::vector<Point> vectors;
};

/// Dominating subset of a predecessor set, sorted.  `exact` is false when the
/// exact solver was out of budget and the greedy set was used.
struct DominatorImage {
  std::vector<int> suffix;
  std::vector<Point> members;
  bool exact = true;
};

/// "a,b,c;d,e,f" with the vectors in sorted order.
std::string serialize_vectors(std::span<const Point> vectors);
std::string serialize(const DominatorImage& image);

/// Caches the P-vector table of one coloring and answers both maps for any
/// (k-2)-tuple.  Requires k >= 3 and r/2 < s < r.
class Encoder {
 public:
  Encoder(const Coloring& coloring, int s);

  const Coloring& coloring() const noexcept { return coloring_; }
  int s() const noexcept { return s_; }

  PredecessorSet theta1(std::span<const int> suffix) const;
  DominatorImage theta2(std::span<const int> suffix) const;

 private:
  void check_suffix(std::span<const int> suffix) const;

  const Coloring& coloring_;
  int s_;
  paths::PVectorTable table_;
};

PredecessorSet theta1(const Coloring& coloring, int s, std::span<const int> suffix);
DominatorImage theta2(const Coloring& coloring, int s, std::span<const int> suffix);

enum class Verdict { good_injective, bad, counterexample };

const char* verdict_name(Verdict verdict);

struct InjectivityReport {
  Verdict status = Verdict::good_injective;
  std::optional<paths::Path> witness_path;
  std::size_t image_count = 0;
  std::size_t max_image_size = 0;
  bool greedy_fallback = false;
  /// Consecutive tuples with equal image (only for status counterexample)
  std::optional<std::pair<std::vector<int>, std::vector<int>>> collision;
};

/// Checks the dominating-set encoding of a coloring.  Tuples compared are
/// consecutive (k-2)-tuples (v_1..v_{k-2}) and (v_2..v_{k-1}); for k = 3 that
/// is every pair of vertices, i.e. plain injectivity.
InjectivityReport injectivity_check(const Coloring& coloring, int n, int r, int s);

/// Coloring of [N]^(k-2) by dominator images.  labels[e] (1-based) indexes
/// palette, the sorted list of serialized images.
struct InducedColoring {
  int k = 0;
  int N = 0;
  std::vector<std::uint32_t> labels;
  std::vector<std::string> palette;
  bool greedy_fallback = false;

  std::size_t edge_count() const noexcept { return labels.size(); }
  /// As an ordinary coloring; needs k >= 2 and at most 255 labels.
  std::optional<Coloring> as_coloring() const;
};

/// Requires k >= 4 and a good coloring (throws PreconditionViolation with the
/// offending path otherwise).
InducedColoring theorem4_reduction(const Coloring& coloring, int n, int s);

/// Two consecutive edges of the induced coloring with the same label, if any.
std::optional<paths::Path> find_monochromatic_two_path(const InducedColoring& induced);

}  // namespace monopath::encode
