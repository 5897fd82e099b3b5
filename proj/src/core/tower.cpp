#include "monopath/core/tower.hpp"

#include <string>

#include "monopath/errors.hpp"

namespace monopath {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

std::size_t decimal_digits(const BigInt& value) {
  return value == 0 ? 1 : value.str().size();
}

}  // namespace

BigInt tower(int height, std::uint64_t m, std::size_t digit_cap) {
  if (height < 0) throw InvalidArgument("tower: negative height");
  BigInt value = m;
  if (decimal_digits(value) > digit_cap)
    throw ResourceLimit("tower: argument exceeds digit cap");
  for (int h = 0; h < height; ++h) {
    // 2^x has floor(x log10 2) + 1 digits.
    const double digits = static_cast<double>(value) * kLog10Of2 + 1.0;
    if (digits > static_cast<double>(digit_cap))
      throw ResourceLimit("tower(" + std::to_string(height) + ", " + std::to_string(m) +
                          ") exceeds " + std::to_string(digit_cap) + " digits");
    BigInt next = 1;
    next <<= static_cast<unsigned>(value);
    value = std::move(next);
  }
  return value;
}

}  // namespace monopath
