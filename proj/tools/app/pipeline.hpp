#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "app/cache.hpp"
#include "app/config.hpp"
#include "trivex/graph/cayley.hpp"
#include "trivex/group/pc_presentation.hpp"
#include "trivex/spectral/report.hpp"

namespace trivex::app {

enum class Which { X, T };

// Lazily built, memoized objects for one run. group() and the graph
// accessors must be called from one thread; spectrum() is thread-safe once
// the graphs it needs exist.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);

  [[nodiscard]] const RunConfig& config() const { return cfg_; }
  [[nodiscard]] const Cache& cache() const { return cache_; }

  const group::PcPresentation& group(int k);
  // Hash of the serialized class-k presentation; the provenance of every artifact derived from it.
  const std::string& input_hash(int k);
  const graph::LabeledGraph& x(int k);
  const std::vector<graph::Triangle>& triangles(int k);
  const graph::LabeledGraph& t(int k);
  const graph::LabeledGraph& graph(int k, Which w) { return w == Which::X ? x(k) : t(k); }

  // Dense reports keep the full spectrum.
  spectral::SpectrumReport spectrum(int k, Which w);
  // Builds graphs, then computes the spectra for every (k, w) on up to
  // config().threads workers.
  void prefetch_spectra(const std::vector<std::pair<int, Which>>& jobs);

  [[nodiscard]] spectral::SpectrumOptions spectrum_options() const;

 private:
  struct Level {
    std::unique_ptr<group::PcPresentation> pcp;
    std::string hash;
    std::unique_ptr<graph::LabeledGraph> x, t;
    std::vector<graph::Triangle> triangles;
    bool have_triangles = false;
  };
  Level& level(int k);

  RunConfig cfg_;
  Cache cache_;
  std::map<int, Level> levels_;
  std::mutex spectra_mutex_;
  std::map<std::pair<int, int>, spectral::SpectrumReport> spectra_;
};

std::string graph_name(int k, Which w);

}  // namespace trivex::app
