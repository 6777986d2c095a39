#pragma once

#include <cstdint>
#include <vector>

#include "trivex/spectral/adjacency.hpp"

namespace trivex::spectral {

struct LanczosOptions {
  int basis = 64;           // Krylov basis size per cycle
  int keep = 16;            // Ritz vectors kept on restart
  int max_restarts = 2000;
  double tol = 1e-8;        // on the explicit residual ||A x - theta x||, ||x|| = 1
  std::uint64_t seed = 0x7f4a7c15ULL;
};

struct LanczosResult {
  double value = 0;
  std::vector<double> vector;  // unit norm, orthogonal to the deflation space
  double residual = 0;         // explicit
  int restarts = 0;
  int matvecs = 0;
};

// Largest eigenvalue of A (or of -A when negate, returned as an eigenvalue of A)
// on the orthogonal complement of the deflation vectors. Thick-restart Lanczos
// with full reorthogonalization. Throws NotConverged when max_restarts is hit.
LanczosResult lanczos_extreme(const AdjacencyOperator& a, const std::vector<std::vector<double>>& deflation, bool negate,
                              const LanczosOptions& opts = {});

struct ExtremeEigenvalues {
  LanczosResult top;     // largest after deflation
  LanczosResult bottom;  // smallest after deflation
};
ExtremeEigenvalues extreme_eigenvalues(const AdjacencyOperator& a, const std::vector<std::vector<double>>& deflation,
                                       const LanczosOptions& opts = {});

// Orthonormal basis of span(vectors) by twice-repeated Gram-Schmidt;
// numerically dependent vectors are dropped.
std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vectors);

}  // namespace trivex::spectral
