#pragma once

#include <cstdint>
#include <vector>

#include "trivex/graph/labeled_graph.hpp"

namespace trivex::spectral {

// Sparse adjacency matrix; a multi-edge contributes its multiplicity.
// Products are computed row by row, so the result does not depend on the
// thread count.
class AdjacencyOperator {
 public:
  explicit AdjacencyOperator(const graph::LabeledGraph& g, int threads = 1);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int max_degree() const { return max_degree_; }
  void set_threads(int threads) { threads_ = threads < 1 ? 1 : threads; }
  [[nodiscard]] int threads() const { return threads_; }

  // y = A x.
  void apply(const double* x, double* y) const;
  [[nodiscard]] std::vector<double> apply(const std::vector<double>& x) const;
  // Row-major dense copy.
  [[nodiscard]] std::vector<double> dense() const;
  // Largest |<Ax, y> - <x, Ay>| over random probes.
  [[nodiscard]] double symmetry_defect(int probes, std::uint64_t seed) const;

 private:
  int n_ = 0;
  int max_degree_ = 0;
  int threads_ = 1;
  std::vector<int> offsets_;
  std::vector<int> columns_;
};

// Dot product summed in fixed 4096-element blocks, then across blocks in
// order: bit-identical for any thread count.
double dot(const double* a, const double* b, std::size_t n, int threads = 1);
double norm(const double* a, std::size_t n, int threads = 1);

// Runs fn(begin, end) over [0, n) split into contiguous chunks; serial when
// n < min_items.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn, std::size_t min_items = 4096);

}  // namespace trivex::spectral

#include "trivex/spectral/parallel_impl.hpp"
