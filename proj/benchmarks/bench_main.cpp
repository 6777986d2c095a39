#include <benchmark/benchmark.h>

#include <random>

#include "trivex/graph/cayley.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/group/pquotient.hpp"
#include "trivex/spectral/adjacency.hpp"
#include "trivex/spectral/relations.hpp"
#include "trivex/surface/faces.hpp"
#include "trivex/surface/oriented_map.hpp"
#include "trivex/toeplitz/periodic_matrix.hpp"

namespace {

using namespace trivex;

const std::vector<group::PcPresentation>& tower() {
  static const auto t = group::pquotient_tower(group::expander_presentation(), 5);
  return t;
}

constexpr std::uint64_t kCap = 1u << 20;

void BM_Quotient(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(group::pquotient(group::expander_presentation(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Quotient)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  const auto& g = tower().at(static_cast<std::size_t>(state.range(0) - 1));
  const auto elems = group::enumerate(g, kCap);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.multiply(elems[i % elems.size()], elems[(i * 7 + 3) % elems.size()]));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->DenseRange(2, 5);

void BM_Cayley(benchmark::State& state) {
  const auto& g = tower().at(static_cast<std::size_t>(state.range(0) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(graph::cayley(g, kCap));
}
BENCHMARK(BM_Cayley)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_PtmMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int k = static_cast<int>(state.range(0));
  std::vector<toeplitz::BlockTriple> da, db;
  for (int j = 0; j < k; ++j) {
    da.emplace_back(static_cast<std::uint32_t>(rng()));
    db.emplace_back(static_cast<std::uint32_t>(rng()));
  }
  const auto a = toeplitz::PeriodicMatrix::with_depth(0, da, k);
  const auto b = toeplitz::PeriodicMatrix::with_depth(0, db, k);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz::ptm_multiply(a, b));
}
BENCHMARK(BM_PtmMultiply)->RangeMultiplier(2)->Range(2, 64);

void BM_Matvec(benchmark::State& state) {
  const auto x = graph::cayley(tower().at(static_cast<std::size_t>(state.range(0) - 1)), kCap);
  const spectral::AdjacencyOperator a(x);
  std::vector<double> v(static_cast<std::size_t>(a.size()), 1.0), w(v.size());
  for (auto _ : state) {
    a.apply(v.data(), w.data());
    benchmark::DoNotOptimize(w.data());
  }
}
BENCHMARK(BM_Matvec)->DenseRange(3, 5);

void BM_DenseSpectrum(benchmark::State& state) {
  const auto x = graph::cayley(tower().at(static_cast<std::size_t>(state.range(0) - 1)), kCap);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::dense_spectrum(x));
}
BENCHMARK(BM_DenseSpectrum)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FaceTracing(benchmark::State& state) {
  const auto x = graph::cayley(tower().at(static_cast<std::size_t>(state.range(0) - 1)), kCap);
  const auto map = surface::orient_Tk(graph::delta_y(x, graph::relator_triangles(x)));
  for (auto _ : state) benchmark::DoNotOptimize(surface::trace_faces(map, surface::Turn::Left));
}
BENCHMARK(BM_FaceTracing)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
