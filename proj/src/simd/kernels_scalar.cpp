#include "kernels_impl.hpp"

namespace monopath::simd::detail {

namespace {

void or_into(std::uint64_t* acc, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) acc[i] |= src[i];
}

bool covers(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* target,
            std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((target[i] & ~(a[i] | b[i])) != 0) return false;
  return true;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i)
    total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

void extend_lanes(std::uint16_t* dst, const std::uint16_t* src, const std::uint16_t* mask,
                  std::size_t lanes) {
  for (std::size_t i = 0; i < lanes; ++i) {
    const std::uint16_t bumped = src[i] == 0xffff ? std::uint16_t{0xffff}
                                                  : static_cast<std::uint16_t>(src[i] + 1);
    const std::uint16_t candidate = static_cast<std::uint16_t>(bumped & mask[i]);
    if (candidate > dst[i]) dst[i] = candidate;
  }
}

std::uint16_t masked_max(const std::uint16_t* src, const std::uint16_t* mask, std::size_t lanes) {
  std::uint16_t best = 0;
  for (std::size_t i = 0; i < lanes; ++i) {
    const auto v = static_cast<std::uint16_t>(src[i] & mask[i]);
    if (v > best) best = v;
  }
  return best;
}

}  // namespace

const Kernels kScalarKernels{Backend::scalar, or_into, covers, and_popcount, extend_lanes, masked_max};

}  // namespace monopath::simd::detail
