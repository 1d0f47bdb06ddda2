#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#ifndef CIRCUIT_MAX_DIMENSION
#define CIRCUIT_MAX_DIMENSION 128
#endif

namespace circuit {

inline constexpr int kMaxDimension = CIRCUIT_MAX_DIMENSION;

/// Fixed-width vertex of the hypercube. Bit c (0-based) is coordinate c+1.
class BitVector {
public:
  static constexpr std::size_t kWords = (kMaxDimension + 63) / 64;

  constexpr BitVector() = default;

  void flip(int coord0) noexcept { words_[coord0 >> 6] ^= std::uint64_t{1} << (coord0 & 63); }
  bool test(int coord0) const noexcept { return (words_[coord0 >> 6] >> (coord0 & 63)) & 1u; }

  int popcount() const noexcept {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  friend int distance(const BitVector& a, const BitVector& b) noexcept {
    int n = 0;
    for (std::size_t i = 0; i < kWords; ++i) n += std::popcount(a.words_[i] ^ b.words_[i]);
    return n;
  }

  // Coordinate (0-based) of the lowest differing bit, or -1 when equal.
  friend int first_difference(const BitVector& a, const BitVector& b) noexcept {
    for (std::size_t i = 0; i < kWords; ++i) {
      if (auto x = a.words_[i] ^ b.words_[i]) return static_cast<int>(i * 64) + std::countr_zero(x);
    }
    return -1;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// Renders coordinates 1..width left to right, e.g. "110" for x1=1, x2=1, x3=0.
  std::string to_string(int width) const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int c = 0; c < width; ++c)
      if (test(c)) s[static_cast<std::size_t>(c)] = '1';
    return s;
  }

private:
  std::array<std::uint64_t, kWords> words_{};
};

} // namespace circuit
