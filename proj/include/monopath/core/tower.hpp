#pragma once

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace monopath {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultTowerDigitCap = 1'000'000;

/// Iterated exponential: T_0(m) = m, T_{h+1}(m) = 2^{T_h(m)}.
/// Throws ResourceLimit if any intermediate value would need more than
/// `digit_cap` decimal digits.
BigInt tower(int height, std::uint64_t m,
             std::size_t digit_cap = kDefaultTowerDigitCap);

}  // namespace monopath
