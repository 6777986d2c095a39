#pragma once

#include <array>
#include <vector>

#include "trivex/graph/cayley.hpp"

namespace trivex::platonic {

constexpr int kMaxPslModulus = 64;

// Element of PSL(2, Z_N): row-major (a, b, c, d) with entries in [0, N),
// the lexicographically smaller of M and -M.
struct ProjMatrix {
  std::array<int, 4> e{1, 0, 0, 1};
  friend auto operator<=>(const ProjMatrix&, const ProjMatrix&) = default;
};

// Canonical class of an integer matrix. Throws InvalidArgument unless
// det = 1 mod N.
ProjMatrix proj_matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int N);
ProjMatrix proj_multiply(const ProjMatrix& x, const ProjMatrix& y, int N);
ProjMatrix proj_inverse(const ProjMatrix& x, int N);

// Every element, ascending. Throws CapExceeded for N > kMaxPslModulus.
std::vector<ProjMatrix> psl2(int N);

// S = [[0,-1],[1,0]] and T = [[1,1],[0,1]], which generate PSL(2, Z_N).
std::array<ProjMatrix, 2> psl2_generators(int N);

// Integer matrices X, Y, Z with XYZ = I.
std::array<std::array<std::int64_t, 4>, 3> xyz_matrices();

struct XyzSubgroup {
  std::vector<ProjMatrix> elements;  // breadth-first from the identity
  int order = 0;
  int index = 0;  // in PSL(2, Z_8)
  bool normal = false;
  bool relators_hold = false;  // r1, r2, r3 at x0 = X, x1 = Y
  // Right multiplication by X, X^-1, Y, Y^-1, Z, Z^-1, the label order of
  // the Cayley graphs of G_k.
  graph::CayleyTable table;
};

// Closure of {X, Y, Z} mod 8. Throws InternalError unless the order is 32,
// the index 6, the subgroup normal and the relators trivial.
XyzSubgroup xyz_subgroup();

}  // namespace trivex::platonic
