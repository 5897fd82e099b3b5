#include "monopath/core/combinatorics.hpp"

#include <array>
#include <string>

#include "monopath/errors.hpp"

namespace monopath {

namespace {

constexpr int kTableRows = 68;

struct BinomialTable {
  std::array<std::array<std::uint64_t, kTableRows>, kTableRows> values{};
  constexpr BinomialTable() {
    for (int n = 0; n < kTableRows; ++n) {
      values[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        values[n][k] = values[n - 1][k - 1] + (k < n ? values[n - 1][k] : 0);
    }
  }
};

constexpr BinomialTable kBinomials{};

__extension__ typedef unsigned __int128 Wide;

}  // namespace

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  if (n < kTableRows) return kBinomials.values[n][k];
  Wide acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * static_cast<Wide>(n - k + i) / static_cast<Wide>(i);
    if (acc > ~std::uint64_t{0})
      throw ResourceLimit("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(std::span<const int> subset) {
  std::uint64_t rank = 0;
  int previous = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const int a = subset[i];
    if (a <= previous)
      throw InvalidArgument("colex_rank: subset must be strictly increasing and 1-based");
    previous = a;
    rank += binomial(a - 1, static_cast<std::int64_t>(i) + 1);
  }
  return rank;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k) {
  if (k < 0) throw InvalidArgument("colex_unrank: negative size");
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    // Largest a with C(a - 1, i) <= rank; a >= i.
    std::int64_t lo = i, hi = i;
    while (binomial(hi, i) <= rank) hi *= 2;
    // invariant: C(lo - 1, i) <= rank < C(hi, i)
    while (lo < hi) {
      std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (binomial(mid - 1, i) <= rank)
        lo = mid;
      else
        hi = mid - 1;
    }
    subset[static_cast<std::size_t>(i - 1)] = static_cast<int>(lo);
    rank -= binomial(lo - 1, i);
  }
  return subset;
}

bool next_colex(std::vector<int>& subset, int n) {
  const std::size_t k = subset.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int bound = (i + 1 < k) ? subset[i + 1] : n + 1;
    if (subset[i] + 1 < bound) {
      ++subset[i];
      for (std::size_t j = 0; j < i; ++j) subset[j] = static_cast<int>(j) + 1;
      return true;
    }
  }
  return false;
}

ColorSubsetIndex::ColorSubsetIndex(int r, int s) : r_(r), s_(s) {
  if (s < 1 || s >= r)
    throw InvalidArgument("color_subsets: need 1 <= s < r (got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s) + ")");
  if (r > kMaxMaskColors)
    throw InvalidArgument("color_subsets: r > " + std::to_string(kMaxMaskColors) +
                          " is not supported");
  for (ColorSet mask = 1; mask < (ColorSet{1} << r); ++mask)
    if (popcount(mask) == s) masks_.push_back(mask);
  containing_.resize(static_cast<std::size_t>(r) + 1);
  for (std::size_t i = 0; i < masks_.size(); ++i)
    for (int c = 1; c <= r; ++c)
      if (masks_[i] & color_bit(c)) containing_[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
}

int ColorSubsetIndex::index_of(ColorSet mask) const {
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (masks_[i] == mask) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& ColorSubsetIndex::containing(int c) const {
  if (c < 1 || c > r_) throw InvalidArgument("color out of range");
  return containing_[static_cast<std::size_t>(c)];
}

std::vector<int> ColorSubsetIndex::members(std::size_t i) const {
  std::vector<int> out;
  for (int c = 1; c <= r_; ++c)
    if (masks_[i] & color_bit(c)) out.push_back(c);
  return out;
}

ColorSubsetIndex color_subsets(int r, int s) { return ColorSubsetIndex(r, s); }

}  // namespace monopath
