#include "trivex/toeplitz/periodic_matrix.hpp"

#include <bit>
#include <cstdio>

#include "trivex/error.hpp"

namespace trivex::toeplitz {

Block block_multiply(Block a, Block b) {
  Block c = 0;
  for (int r = 0; r < 3; ++r) {
    unsigned row = 0;
    for (int m = 0; m < 3; ++m) {
      if ((a >> (3 * r + m)) & 1U) row ^= (b >> (3 * m)) & 0x7U;
    }
    c = static_cast<Block>(c | (row << (3 * r)));
  }
  return c;
}

BlockTriple BlockTriple::from_rows(const std::array<std::array<int, 9>, 3>& rows) {
  std::uint32_t bits = 0;
  for (int r = 0; r < 3; ++r) {
    for (int j = 0; j < 9; ++j) {
      const int v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      if (v != 0 && v != 1) throw InvalidArgument("BlockTriple entries must be 0 or 1");
      if (v) bits |= 1U << (9 * (j / 3) + 3 * r + j % 3);
    }
  }
  return BlockTriple(bits);
}

void BlockTriple::set_block(int slot, Block b) {
  bits_ = (bits_ & ~(0x1ffU << (9 * slot))) | (static_cast<std::uint32_t>(b & 0x1ffU) << (9 * slot));
}

int BlockTriple::entry(int row, int column) const {
  return static_cast<int>((bits_ >> (9 * (column / 3) + 3 * row + column % 3)) & 1U);
}

std::string BlockTriple::to_hex() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%07x", bits_);
  return buf;
}

BlockTriple BlockTriple::from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() > 7) throw InvalidArgument("BlockTriple hex must have 1 to 7 digits");
  std::uint32_t v = 0;
  for (char c : hex) {
    unsigned d;
    if (c >= '0' && c <= '9') {
      d = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      d = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      d = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw InvalidArgument("bad hex digit in BlockTriple");
    }
    v = (v << 4) | d;
  }
  if (v >> 27) throw InvalidArgument("BlockTriple hex exceeds 27 bits");
  return BlockTriple(v);
}

std::string BlockTriple::str() const {
  std::string s;
  for (int r = 0; r < 3; ++r) {
    for (int j = 0; j < 9; ++j) s += static_cast<char>('0' + entry(r, j));
    if (r < 2) s += '\n';
  }
  return s;
}

PeriodicMatrix::PeriodicMatrix(int k) {
  if (k < 0) throw InvalidArgument("truncation must be non-negative");
  diag_.assign(static_cast<std::size_t>(k), BlockTriple{});
}

PeriodicMatrix PeriodicMatrix::with_depth(int l, const std::vector<BlockTriple>& diagonals, int k) {
  if (l < 0) throw InvalidArgument("depth must be non-negative");
  PeriodicMatrix m(k);
  for (std::size_t t = 0; t < diagonals.size(); ++t) {
    const int j = l + 1 + static_cast<int>(t);
    if (j > k) break;
    m.set_diagonal(j, diagonals[t]);
  }
  return m;
}

PeriodicMatrix ptm_multiply(const PeriodicMatrix& x, const PeriodicMatrix& y) {
  const int k = x.truncation();
  if (y.truncation() != k) throw InvalidArgument("ptm_multiply: truncations differ");
  auto slot = [](const PeriodicMatrix& m, int j, int s) -> Block {
    return j == 0 ? kIdentityBlock : m.diagonal(j).block(s);
  };
  PeriodicMatrix out(k);
  for (int j = 1; j <= k; ++j) {
    BlockTriple c;
    for (int s = 0; s < 3; ++s) {
      Block acc = 0;
      for (int p = 0; p <= j; ++p) {
        const Block a = slot(x, p, s);
        if (!a) continue;
        const Block b = slot(y, j - p, (s + p) % 3);
        if (b) acc ^= block_multiply(a, b);
      }
      c.set_block(s, acc);
    }
    out.set_diagonal(j, c);
  }
  return out;
}

PeriodicMatrix ptm_power(const PeriodicMatrix& x, std::uint64_t e) {
  if (e == 0 || !std::has_single_bit(e)) throw InvalidArgument("ptm_power: exponent must be a power of two");
  PeriodicMatrix r = x;
  for (; e > 1; e >>= 1) r = ptm_multiply(r, r);
  return r;
}

int ptm_depth(const PeriodicMatrix& x) {
  for (int j = 1; j <= x.truncation(); ++j) {
    if (!x.diagonal(j).is_zero()) return j - 1;
  }
  return x.truncation();
}

AlphaBeta alpha_beta() {
  using R = std::array<std::array<int, 9>, 3>;
  AlphaBeta ab;
  ab.alpha0 = BlockTriple::from_rows(R{{{0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1, 0, 0, 1}, {0, 1, 1, 0, 1, 1, 0, 1, 1}}});
  ab.beta0 = BlockTriple::from_rows(R{{{0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 1, 1, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 0, 1, 0}}});
  ab.alpha1 = BlockTriple::from_rows(R{{{0, 0, 0, 0, 1, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 0, 0, 1, 0}}});
  // Printed identical to alpha1.
  ab.beta1 = BlockTriple::from_rows(R{{{0, 0, 0, 0, 1, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 1}, {1, 1, 1, 0, 0, 0, 0, 1, 0}}});
  ab.alpha3 = BlockTriple::from_rows(R{{{0, 0, 0, 0, 1, 1, 0, 1, 0}, {0, 1, 1, 1, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 1, 1, 0, 0, 1}}});
  ab.beta3 = BlockTriple::from_rows(R{{{0, 0, 0, 0, 0, 1, 0, 1, 1}, {1, 1, 0, 0, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 1, 1, 0, 0}}});
  return ab;
}

}  // namespace trivex::toeplitz
