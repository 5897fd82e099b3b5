#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace monopath {

/// Integer point of a grid [n]^C; P-vectors, tournament vertices and
/// S-increasing sequence entries all use this representation.
using Point = std::vector<std::uint16_t>;

/// Set of colors as a bitmask: bit (c - 1) stands for color c.
using ColorSet = std::uint32_t;

inline constexpr int kMaxMaskColors = 16;

/// Exact binomial coefficient.  Throws ResourceLimit when the value does not
/// fit in 64 bits.  Returns 0 for k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Colex rank of a strictly increasing 1-based subset: sum of C(a_i - 1, i).
std::uint64_t colex_rank(std::span<const int> subset);

/// Inverse of colex_rank for subsets of size k.
std::vector<int> colex_unrank(std::uint64_t rank, int k);

/// Advances `subset` (sorted, 1-based, elements <= n) to its colex successor.
/// Returns false when `subset` was the last k-subset of [n].
bool next_colex(std::vector<int>& subset, int n);

/// Calls fn(subset) for every k-subset of [n] in colex order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
  do {
    fn(std::span<const int>(subset));
  } while (next_colex(subset, n));
}

/// Colex-ordered list of all s-subsets of [r] (as masks).  Colex order on
/// masks coincides with numeric order.
class ColorSubsetIndex {
 public:
  ColorSubsetIndex(int r, int s);

  int r() const noexcept { return r_; }
  int s() const noexcept { return s_; }
  std::size_t size() const noexcept { return masks_.size(); }
  ColorSet operator[](std::size_t i) const { return masks_[i]; }
  const std::vector<ColorSet>& masks() const noexcept { return masks_; }

  /// Position of `mask` in the list, or -1.
  int index_of(ColorSet mask) const;

  /// Indices of the subsets that contain color c (1-based).
  const std::vector<int>& containing(int c) const;

  /// Members of subset i as a sorted 1-based color list.
  std::vector<int> members(std::size_t i) const;

 private:
  int r_;
  int s_;
  std::vector<ColorSet> masks_;
  std::vector<std::vector<int>> containing_;
};

ColorSubsetIndex color_subsets(int r, int s);

inline int popcount(ColorSet mask) { return __builtin_popcount(mask); }

inline ColorSet color_bit(int color) { return ColorSet{1} << (color - 1); }

inline ColorSet all_colors(int r) {
  return r >= 32 ? ~ColorSet{0} : (ColorSet{1} << r) - 1;
}

}  // namespace monopath
