#include "app/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "app/json_io.hpp"
#include "trivex/error.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/group/pquotient.hpp"
#include "trivex/group/serialize.hpp"
#include "trivex/util/hash.hpp"

namespace trivex::app {

namespace {

std::string exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

}  // namespace

std::string graph_name(int k, Which w) { return (w == Which::X ? "X" : "T") + std::to_string(k); }

Pipeline::Pipeline(RunConfig cfg) : cfg_(std::move(cfg)), cache_(cfg_.cache_dir) { cfg_.validate(); }

Pipeline::Level& Pipeline::level(int k) {
  if (k < 1 || k > kMaxClass) throw InvalidArgument("class must lie in 1.." + std::to_string(kMaxClass));
  return levels_[k];
}

const group::PcPresentation& Pipeline::group(int k) {
  auto& lv = level(k);
  if (lv.pcp) return *lv.pcp;
  const std::string key = "group|class=" + std::to_string(k) + "|format=" + std::to_string(group::kPcpFormatVersion);
  if (auto text = cache_.load(key)) {
    try {
      auto pcp = group::pcp_from_json(*text);
      if (pcp.pclass() == k) {
        lv.pcp = std::make_unique<group::PcPresentation>(std::move(pcp));
        lv.hash = hex64(fnv1a64(*text));
        return *lv.pcp;
      }
    } catch (const InvalidArgument&) {
      // Unreadable entry: rebuild below.
    }
  }
  auto pcp = k == 1 ? group::class_one_quotient(group::expander_presentation()) : group::next_class(group(k - 1));
  if (pcp.pclass() != k) throw InternalError("lower exponent-2 series stabilised before class " + std::to_string(k));
  const auto text = group::to_json(pcp);
  cache_.store(key, text);
  lv.pcp = std::make_unique<group::PcPresentation>(std::move(pcp));
  lv.hash = hex64(fnv1a64(text));
  return *lv.pcp;
}

const std::string& Pipeline::input_hash(int k) {
  group(k);
  return level(k).hash;
}

const graph::LabeledGraph& Pipeline::x(int k) {
  auto& lv = level(k);
  if (!lv.x) lv.x = std::make_unique<graph::LabeledGraph>(graph::cayley(group(k), cfg_.enum_cap));
  return *lv.x;
}

const std::vector<graph::Triangle>& Pipeline::triangles(int k) {
  auto& lv = level(k);
  if (!lv.have_triangles) {
    lv.triangles = graph::relator_triangles(x(k));
    lv.have_triangles = true;
  }
  return lv.triangles;
}

const graph::LabeledGraph& Pipeline::t(int k) {
  auto& lv = level(k);
  if (!lv.t) lv.t = std::make_unique<graph::LabeledGraph>(graph::delta_y(x(k), triangles(k)));
  return *lv.t;
}

spectral::SpectrumOptions Pipeline::spectrum_options() const {
  spectral::SpectrumOptions o;
  o.dense_cap = cfg_.dense_cap;
  o.keep_spectrum = true;
  o.threads = cfg_.threads;
  o.lanczos.tol = cfg_.tol;
  o.lanczos.max_restarts = cfg_.iter_cap;
  o.lanczos.seed = cfg_.seed;
  return o;
}

spectral::SpectrumReport Pipeline::spectrum(int k, Which w) {
  const auto slot = std::pair{k, static_cast<int>(w)};
  {
    std::lock_guard lock(spectra_mutex_);
    if (auto it = spectra_.find(slot); it != spectra_.end()) return it->second;
  }
  const auto& g = graph(k, w);
  const auto opts = spectrum_options();
  const std::string key = "spectrum|" + graph_name(k, w) + "|input=" + input_hash(k) + "|dense_cap=" + std::to_string(opts.dense_cap) +
                          "|tol=" + exact(opts.lanczos.tol) + "|seed=" + std::to_string(opts.lanczos.seed);
  std::optional<spectral::SpectrumReport> report;
  if (auto text = cache_.load(key)) {
    try {
      report = spectrum_from_json(nlohmann::json::parse(*text));
    } catch (const nlohmann::json::exception&) {
      report.reset();
    }
  }
  if (!report) {
    report = spectral::spectrum_report(g, graph_name(k, w), opts);
    std::lock_guard lock(spectra_mutex_);
    cache_.store(key, to_json(*report).dump());
  }
  std::lock_guard lock(spectra_mutex_);
  return spectra_.emplace(slot, std::move(*report)).first->second;
}

void Pipeline::prefetch_spectra(const std::vector<std::pair<int, Which>>& jobs) {
  for (const auto& [k, w] : jobs) graph(k, w);
  const int workers = std::min<int>(cfg_.threads, static_cast<int>(jobs.size()));
  if (workers <= 1) {
    for (const auto& [k, w] : jobs) spectrum(k, w);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) {
    pool.emplace_back([&] {
      for (std::size_t j = next++; j < jobs.size(); j = next++) {
        try {
          spectrum(jobs[j].first, jobs[j].second);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace trivex::app
