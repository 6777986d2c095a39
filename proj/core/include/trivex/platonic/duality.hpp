#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trivex/group/pc_presentation.hpp"

namespace trivex::platonic {

// Largest k whose graphs are built for a direct isomorphism test.
constexpr int kDirectDualityMaxClass = 4;

// Is the dual of T_k (left faces) isomorphic to the Platonic graph Pi_N with
// N = 2^{n_k + 1}, the only N matching its vertex degree?
struct DualityVerdict {
  int k = 0;
  int N_k = 0;  // pc rank
  int n_k = 0;  // ord(x0) = 2^{n_k}
  int modulus = 0;
  std::int64_t dual_vertices = 0;      // 3 * 2^{N_k - n_k}
  std::int64_t platonic_vertices = 0;  // platonic_count(modulus)
  bool counts_equal = false;           // iff 3 n_k = N_k + 1
  bool direct = false;                 // graphs were built and compared
  bool isomorphic = false;
  std::optional<std::vector<int>> witness;  // dual vertex -> Pi_N vertex, verified
  std::string certificate;
};

DualityVerdict duality_verdict(const group::PcPresentation& gk, std::uint64_t cap = 1u << 20);

}  // namespace trivex::platonic
