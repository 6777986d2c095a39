#pragma once

#include <vector>

namespace trivex::spectral {

// Eigen-decomposition of a real symmetric matrix.
struct DenseEigen {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j (n entries from j*n) belongs to values[j]; empty if not requested

  [[nodiscard]] const double* vector(int j) const { return vectors.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(n); }
};

// a is n x n row-major and symmetric. Householder tridiagonalization followed
// by implicit QL with Wilkinson-type shifts. Throws NotConverged after 60
// sweeps on one eigenvalue.
DenseEigen symmetric_eigen(std::vector<double> a, int n, bool want_vectors);

}  // namespace trivex::spectral
