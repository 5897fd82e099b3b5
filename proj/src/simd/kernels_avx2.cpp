#if defined(MONOPATH_HAVE_AVX2)

#include <immintrin.h>

#include "kernels_impl.hpp"

#define MONOPATH_AVX2 __attribute__((target("avx2")))

namespace monopath::simd::detail {

namespace {

MONOPATH_AVX2 inline __m256i load(const void* p) {
  return _mm256_loadu_si256(static_cast<const __m256i*>(p));
}

MONOPATH_AVX2 void or_into(std::uint64_t* acc, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4)
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_or_si256(load(acc + i), load(src + i)));
  for (; i < words; ++i) acc[i] |= src[i];
}

MONOPATH_AVX2 bool covers(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* target,
                          std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i both = _mm256_or_si256(load(a + i), load(b + i));
    // andnot(x, y) = ~x & y: bits of target missing from a|b
    const __m256i missing = _mm256_andnot_si256(both, load(target + i));
    if (!_mm256_testz_si256(missing, missing)) return false;
  }
  for (; i < words; ++i)
    if ((target[i] & ~(a[i] | b[i])) != 0) return false;
  return true;
}

// Nibble lookup popcount (Mula); byte counts are folded with SAD.
MONOPATH_AVX2 inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

MONOPATH_AVX2 std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= words; i += 4) {
    const __m256i bytes = popcount_bytes(_mm256_and_si256(load(a + i), load(b + i)));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
  for (; i < words; ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
  return total;
}

MONOPATH_AVX2 void extend_lanes(std::uint16_t* dst, const std::uint16_t* src, const std::uint16_t* mask,
                                std::size_t lanes) {
  const __m256i one = _mm256_set1_epi16(1);
  std::size_t i = 0;
  for (; i + 16 <= lanes; i += 16) {
    const __m256i bumped = _mm256_adds_epu16(load(src + i), one);
    const __m256i candidate = _mm256_and_si256(bumped, load(mask + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_max_epu16(load(dst + i), candidate));
  }
  for (; i < lanes; ++i) {
    const std::uint16_t bumped = src[i] == 0xffff ? std::uint16_t{0xffff}
                                                  : static_cast<std::uint16_t>(src[i] + 1);
    const std::uint16_t candidate = static_cast<std::uint16_t>(bumped & mask[i]);
    if (candidate > dst[i]) dst[i] = candidate;
  }
}

MONOPATH_AVX2 std::uint16_t masked_max(const std::uint16_t* src, const std::uint16_t* mask, std::size_t lanes) {
  __m256i best = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 16 <= lanes; i += 16)
    best = _mm256_max_epu16(best, _mm256_and_si256(load(src + i), load(mask + i)));
  alignas(32) std::uint16_t tmp[16];
  _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), best);
  std::uint16_t result = 0;
  for (auto v : tmp)
    if (v > result) result = v;
  for (; i < lanes; ++i) {
    const auto v = static_cast<std::uint16_t>(src[i] & mask[i]);
    if (v > result) result = v;
  }
  return result;
}

}  // namespace

const Kernels kAvx2Kernels{Backend::avx2, or_into, covers, and_popcount, extend_lanes, masked_max};

}  // namespace monopath::simd::detail

#endif
