#include "trivex/spectral/adjacency.hpp"

#include <cmath>
#include <random>

namespace trivex::spectral {

AdjacencyOperator::AdjacencyOperator(const graph::LabeledGraph& g, int threads) : n_(g.vertex_count()) {
  set_threads(threads);
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  columns_.reserve(static_cast<std::size_t>(g.dart_count()));
  for (int v = 0; v < n_; ++v) {
    auto nb = g.neighbors(v);
    max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
    columns_.insert(columns_.end(), nb.begin(), nb.end());
    offsets_[static_cast<std::size_t>(v) + 1] = static_cast<int>(columns_.size());
  }
}

void AdjacencyOperator::apply(const double* x, double* y) const {
  parallel_for(static_cast<std::size_t>(n_), threads_, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      double s = 0.0;
      for (int k = offsets_[v]; k < offsets_[v + 1]; ++k) s += x[columns_[static_cast<std::size_t>(k)]];
      y[v] = s;
    }
  });
}

std::vector<double> AdjacencyOperator::apply(const std::vector<double>& x) const {
  std::vector<double> y(x.size());
  apply(x.data(), y.data());
  return y;
}

std::vector<double> AdjacencyOperator::dense() const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<double> a(n * n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    for (int k = offsets_[v]; k < offsets_[v + 1]; ++k) a[v * n + static_cast<std::size_t>(columns_[static_cast<std::size_t>(k)])] += 1.0;
  }
  return a;
}

double AdjacencyOperator::symmetry_defect(int probes, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto n = static_cast<std::size_t>(n_);
  double worst = 0.0;
  for (int p = 0; p < probes; ++p) {
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    const auto ax = apply(x);
    const auto ay = apply(y);
    worst = std::max(worst, std::abs(dot(ax.data(), y.data(), n) - dot(x.data(), ay.data(), n)));
  }
  return worst;
}

double dot(const double* a, const double* b, std::size_t n, int threads) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
  parallel_for(
      blocks, threads,
      [&](std::size_t bb, std::size_t be) {
        for (std::size_t blk = bb; blk < be; ++blk) {
          double s = 0.0;
          const std::size_t end = std::min(n, (blk + 1) * kBlock);
          for (std::size_t i = blk * kBlock; i < end; ++i) s += a[i] * b[i];
          partial[blk] = s;
        }
      },
      4);
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double norm(const double* a, std::size_t n, int threads) { return std::sqrt(dot(a, a, n, threads)); }

}  // namespace trivex::spectral
