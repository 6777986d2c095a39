#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace trivex {

// Fixed-capacity bit vector used for exponent vectors over F2. Capacity is
// a compile-time constant so that values live on the stack and copy cheaply
// during collection.
template <std::size_t Bits>
class FixedBits {
  static_assert(Bits % 64 == 0);

 public:
  static constexpr std::size_t kBits = Bits;
  static constexpr std::size_t kWords = Bits / 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  constexpr FixedBits() = default;

  [[nodiscard]] constexpr bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  constexpr void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  constexpr void flip(std::size_t i) { words_[i >> 6] ^= bit(i); }
  constexpr void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  [[nodiscard]] constexpr bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] constexpr bool any() const { return !none(); }

  [[nodiscard]] constexpr std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the first set bit at position >= from, or npos.
  [[nodiscard]] constexpr std::size_t find_from(std::size_t from) const {
    if (from >= Bits) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == kWords) return npos;
      w = words_[wi];
    }
  }
  [[nodiscard]] constexpr std::size_t find_first() const { return find_from(0); }

  // Keep bits [0, n), clear the rest.
  constexpr void truncate(std::size_t n) {
    for (std::size_t wi = 0; wi < kWords; ++wi) {
      const std::size_t lo = wi << 6;
      if (lo >= n) {
        words_[wi] = 0;
      } else if (n - lo < 64) {
        words_[wi] &= (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
  }

  // Bits strictly above position i (positions i+1 ...).
  [[nodiscard]] constexpr FixedBits above(std::size_t i) const {
    FixedBits r = *this;
    const std::size_t keep_from = i + 1;
    for (std::size_t wi = 0; wi < kWords; ++wi) {
      const std::size_t lo = wi << 6;
      if (lo + 64 <= keep_from) {
        r.words_[wi] = 0;
      } else if (lo < keep_from) {
        r.words_[wi] &= ~std::uint64_t{0} << (keep_from - lo);
      }
    }
    return r;
  }

  constexpr FixedBits& operator^=(const FixedBits& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  constexpr FixedBits& operator&=(const FixedBits& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr FixedBits& operator|=(const FixedBits& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend constexpr FixedBits operator^(FixedBits a, const FixedBits& b) { return a ^= b; }

  friend constexpr bool operator==(const FixedBits&, const FixedBits&) = default;

  [[nodiscard]] constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }
  constexpr void set_word(std::size_t i, std::uint64_t w) { words_[i] = w; }

  // Hex rendering of the integer sum(b_i 2^i) restricted to the first n bits,
  // most significant digit first, exactly ceil(n/4) digits (at least one).
  [[nodiscard]] std::string to_hex(std::size_t n) const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t digits = n == 0 ? 1 : (n + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
      unsigned v = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t pos = d * 4 + b;
        if (pos < n && test(pos)) v |= 1U << b;
      }
      out[digits - 1 - d] = kDigits[v];
    }
    return out;
  }

  // Inverse of to_hex. Returns false on malformed input or bits beyond n.
  static bool from_hex(std::string_view hex, std::size_t n, FixedBits& out) {
    out = FixedBits{};
    const std::size_t digits = hex.size();
    for (std::size_t d = 0; d < digits; ++d) {
      const char c = hex[digits - 1 - d];
      unsigned v;
      if (c >= '0' && c <= '9') {
        v = static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        v = static_cast<unsigned>(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        v = static_cast<unsigned>(c - 'A' + 10);
      } else {
        return false;
      }
      for (std::size_t b = 0; b < 4; ++b) {
        if (!((v >> b) & 1U)) continue;
        const std::size_t pos = d * 4 + b;
        if (pos >= n || pos >= Bits) return false;
        out.set(pos);
      }
    }
    return true;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace trivex
