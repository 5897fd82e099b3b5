#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace monopath::simd {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend);

/// Table of data-parallel inner loops.  Every backend computes bit-identical
/// results; the scalar table is the reference the others are tested against.
struct Kernels {
  Backend backend;

  /// acc[i] |= src[i]
  void (*or_into)(std::uint64_t* acc, const std::uint64_t* src, std::size_t words);

  /// true iff every bit of `target` is set in (a | b).
  bool (*covers)(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* target,
                 std::size_t words);

  /// popcount(a & b) over all words.
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

  /// dst[i] = max(dst[i], mask[i] & sat16(src[i] + 1)); mask lanes are 0 or 0xffff.
  /// This is the path-extension step applied to many color sets at once.
  void (*extend_lanes)(std::uint16_t* dst, const std::uint16_t* src, const std::uint16_t* mask,
                       std::size_t lanes);

  /// max over lanes of src[i] & mask[i]
  std::uint16_t (*masked_max)(const std::uint16_t* src, const std::uint16_t* mask, std::size_t lanes);
};

const Kernels& scalar_kernels();

/// AVX2 table, or nullptr when it was not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels();

bool cpu_supports(Backend backend);

/// Currently selected table.  Defaults to the widest backend the CPU supports.
const Kernels& kernels();

/// Overrides the runtime choice; throws InvalidArgument if unsupported.
void select_backend(Backend backend);

Backend active_backend();

}  // namespace monopath::simd
