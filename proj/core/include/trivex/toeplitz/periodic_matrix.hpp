#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace trivex::toeplitz {

// 3x3 matrix over F2, entry (r, c) at bit 3r + c.
using Block = std::uint16_t;

inline constexpr Block kIdentityBlock = 0b100'010'001;

Block block_multiply(Block a, Block b);

// Three 3x3 blocks (slots 0, 1, 2) read as a 3x9 bit matrix; slot s occupies
// bits [9s, 9s + 9).
class BlockTriple {
 public:
  constexpr BlockTriple() = default;
  explicit constexpr BlockTriple(std::uint32_t bits) : bits_(bits & kMask) {}

  // rows[r][j] is entry (r, j) of the 3x9 matrix; column j is slot j/3, column j%3.
  static BlockTriple from_rows(const std::array<std::array<int, 9>, 3>& rows);

  [[nodiscard]] constexpr std::uint32_t bits() const { return bits_; }
  [[nodiscard]] Block block(int slot) const { return static_cast<Block>((bits_ >> (9 * slot)) & 0x1ffU); }
  void set_block(int slot, Block b);
  [[nodiscard]] int entry(int row, int column) const;
  [[nodiscard]] constexpr bool is_zero() const { return bits_ == 0; }

  // Seven hex digits for the 27-bit integer.
  [[nodiscard]] std::string to_hex() const;
  static BlockTriple from_hex(const std::string& hex);
  // Three lines of nine 0/1 digits.
  [[nodiscard]] std::string str() const;

  friend constexpr bool operator==(BlockTriple, BlockTriple) = default;
  friend constexpr BlockTriple operator^(BlockTriple a, BlockTriple b) { return BlockTriple(a.bits_ ^ b.bits_); }

 private:
  static constexpr std::uint32_t kMask = (1U << 27) - 1;
  std::uint32_t bits_ = 0;
};

// Upper unitriangular period-3 block-Toeplitz matrix over F2, truncated
// after diagonal k: M_0(a_1, ..., a_k). Diagonal 0 is the identity.
class PeriodicMatrix {
 public:
  PeriodicMatrix() = default;
  explicit PeriodicMatrix(int k);  // identity

  // M_l(a_{l+1}, ...); diagonals past k are discarded, missing ones are zero.
  static PeriodicMatrix with_depth(int l, const std::vector<BlockTriple>& diagonals, int k);

  [[nodiscard]] int truncation() const { return static_cast<int>(diag_.size()); }
  // Diagonal j in 1..k.
  [[nodiscard]] const BlockTriple& diagonal(int j) const { return diag_.at(static_cast<std::size_t>(j - 1)); }
  void set_diagonal(int j, BlockTriple t) { diag_.at(static_cast<std::size_t>(j - 1)) = t; }

  friend bool operator==(const PeriodicMatrix&, const PeriodicMatrix&) = default;

 private:
  std::vector<BlockTriple> diag_;
};

// c_{j,s} = sum_{p+q=j} a_{p,s} b_{q,(s+p) mod 3}, with a_0 = b_0 = I.
PeriodicMatrix ptm_multiply(const PeriodicMatrix& x, const PeriodicMatrix& y);
// x^e for e a power of two, by repeated squaring.
PeriodicMatrix ptm_power(const PeriodicMatrix& x, std::uint64_t e);
// Number of leading zero diagonals; equals k for the identity mod G^k.
int ptm_depth(const PeriodicMatrix& x);

// The six printed constants, verbatim.
struct AlphaBeta {
  BlockTriple alpha0, alpha1, alpha3;
  BlockTriple beta0, beta1, beta3;
};
AlphaBeta alpha_beta();

}  // namespace trivex::toeplitz
