#include "trivex/spectral/report.hpp"

#include <cmath>

#include "trivex/error.hpp"
#include "trivex/spectral/relations.hpp"

namespace trivex::spectral {

namespace {

// Up to this size the dense solver also returns eigenvectors.
constexpr int kDenseVectorLimit = 512;

double residual_of(const AdjacencyOperator& a, const std::vector<double>& v, double lambda) {
  auto av = a.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) av[i] -= lambda * v[i];
  return norm(av.data(), av.size()) / norm(v.data(), v.size());
}

}  // namespace

SpectrumReport spectrum_report(const graph::LabeledGraph& g, const std::string& name, const SpectrumOptions& opts) {
  SpectrumReport r;
  r.graph = name;
  r.n = g.vertex_count();
  if (r.n < 2) throw InvalidArgument("spectrum_report needs at least two vertices");
  r.d = g.degree(0);
  if (!g.is_regular(r.d) || !g.is_connected()) throw InvalidArgument("spectrum_report needs a connected regular graph");
  const auto side = g.bipartition();
  r.bipartite = !side.empty();
  const AdjacencyOperator a(g, opts.threads);

  std::vector<std::vector<double>> deflation{std::vector<double>(static_cast<std::size_t>(r.n), 1.0)};
  if (r.bipartite) {
    std::vector<double> s(static_cast<std::size_t>(r.n));
    for (int v = 0; v < r.n; ++v) s[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(v)] ? -1.0 : 1.0;
    deflation.push_back(std::move(s));
  }

  std::vector<double> top_vector;
  if (r.n <= opts.dense_cap) {
    r.method = "dense";
    std::vector<double> spectrum;
    if (r.n <= kDenseVectorLimit) {
      const auto e = dense_eigensystem(g, opts.dense_cap, opts.lanczos.tol);
      spectrum = e.values;
      const int j = r.n - 2;
      top_vector.assign(e.vector(j), e.vector(j) + r.n);
    } else {
      spectrum = dense_spectrum(g, opts.dense_cap);
      auto opt = opts.lanczos;
      const auto top = lanczos_extreme(a, deflation, false, opt);
      if (std::abs(top.value - largest_nontrivial(spectrum, r.d, r.bipartite)) > 1e-7) {
        throw InternalError("dense and Lanczos largest nontrivial eigenvalues disagree for " + name);
      }
      top_vector = top.vector;
    }
    r.lambda1 = largest_nontrivial(spectrum, r.d, r.bipartite);
    r.lambda_min = smallest_nontrivial(spectrum, r.d, r.bipartite);
    r.ramanujan = ramanujan(spectrum, r.d, r.bipartite);
    r.residual = residual_of(a, top_vector, r.lambda1);
    if (opts.keep_spectrum) r.spectrum = std::move(spectrum);
  } else {
    r.method = "lanczos";
    const auto ext = extreme_eigenvalues(a, deflation, opts.lanczos);
    r.lambda1 = ext.top.value;
    r.lambda_min = ext.bottom.value;
    r.ramanujan = ramanujan(r.lambda1, r.lambda_min, r.d);
    r.residual = std::max(ext.top.residual, ext.bottom.residual);
    top_vector = ext.top.vector;
  }
  r.sigma = r.d - r.lambda1;
  r.sigma_rayleigh = dirichlet_quotient(g, top_vector);
  return r;
}

}  // namespace trivex::spectral
