#include "trivex/graph/cayley.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "trivex/error.hpp"

namespace trivex::graph {

LabeledGraph cayley_from_table(const CayleyTable& table) {
  const auto n = static_cast<int>(table.size());
  std::vector<Dart> darts(table.size() * kCayleyDegree);
  for (int g = 0; g < n; ++g) {
    for (int l = 0; l < kCayleyDegree; ++l) {
      const int h = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(l)];
      if (h < 0 || h >= n || table[static_cast<std::size_t>(h)][static_cast<std::size_t>(l ^ 1)] != g) {
        throw InvalidArgument("Cayley table: label " + std::to_string(l ^ 1) + " does not invert label " + std::to_string(l));
      }
      darts[static_cast<std::size_t>(cayley_dart(g, l))] = {g, cayley_dart(h, l ^ 1), l};
    }
  }
  return LabeledGraph(n, std::move(darts));
}

CayleyTable cayley_table(const group::PcPresentation& pcp, std::uint64_t cap) {
  const auto elements = group::enumerate(pcp, cap);
  const auto gens = group::labeled_generators(pcp);
  CayleyTable table(elements.size());
  for (std::size_t g = 0; g < elements.size(); ++g) {
    for (int l = 0; l < kCayleyDegree; ++l) {
      const auto h = pcp.multiply(elements[g], gens[static_cast<std::size_t>(l)]);
      table[g][static_cast<std::size_t>(l)] = static_cast<int>(group::element_index(pcp, h));
    }
  }
  return table;
}

LabeledGraph cayley(const group::PcPresentation& pcp, std::uint64_t cap) { return cayley_from_table(cayley_table(pcp, cap)); }

std::vector<Triangle> relator_triangles(const LabeledGraph& x) {
  const int n = x.vertex_count();
  if (x.dart_count() != n * kCayleyDegree) throw InvalidArgument("relator_triangles needs a labelled Cayley graph");
  std::vector<Triangle> out(static_cast<std::size_t>(n));
  std::vector<int> cover(static_cast<std::size_t>(x.dart_count()), 0);
  for (int g = 0; g < n; ++g) {
    Triangle t;
    int v = g;
    constexpr std::array<int, 3> kLabels = {0, 2, 4};
    for (int c = 0; c < 3; ++c) {
      t.vertices[static_cast<std::size_t>(c)] = v;
      const int d = cayley_dart(v, kLabels[static_cast<std::size_t>(c)]);
      if (x.dart(d).source != v || x.dart(d).label != kLabels[static_cast<std::size_t>(c)]) {
        throw InvalidArgument("relator_triangles: dart layout is not 6g + label");
      }
      t.darts[static_cast<std::size_t>(c)] = d;
      ++cover[static_cast<std::size_t>(std::min(d, x.dart(d).reverse))];
      v = x.head(d);
    }
    if (v != g) throw InternalError("relator triangle at vertex " + std::to_string(g) + " does not close");
    out[static_cast<std::size_t>(g)] = t;
  }
  for (int d = 0; d < x.dart_count(); ++d) {
    if (d < x.dart(d).reverse && cover[static_cast<std::size_t>(d)] != 1) {
      throw InternalError("edge " + std::to_string(d) + " lies in " + std::to_string(cover[static_cast<std::size_t>(d)]) +
                          " relator triangles");
    }
  }
  return out;
}

CliqueAudit audit_cliques(const LabeledGraph& x, const std::vector<Triangle>& triangles) {
  const LabeledGraph s = x.underlying_simple();
  const int n = s.vertex_count();
  std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nb[static_cast<std::size_t>(v)] = s.neighbors(v);
  std::set<std::array<int, 3>> cliques;
  for (int u = 0; u < n; ++u) {
    const auto& nu = nb[static_cast<std::size_t>(u)];
    for (int v : nu) {
      if (v <= u) continue;
      const auto& nv = nb[static_cast<std::size_t>(v)];
      for (int w : nv) {
        if (w > v && std::binary_search(nu.begin(), nu.end(), w)) cliques.insert({u, v, w});
      }
    }
  }
  std::set<std::array<int, 3>> rel;
  for (const auto& t : triangles) {
    auto a = t.vertices;
    std::sort(a.begin(), a.end());
    rel.insert(a);
  }
  CliqueAudit audit;
  audit.cliques = cliques.size();
  audit.relator_triangles = rel.size();
  std::set_difference(cliques.begin(), cliques.end(), rel.begin(), rel.end(), std::back_inserter(audit.extra));
  std::set_difference(rel.begin(), rel.end(), cliques.begin(), cliques.end(), std::back_inserter(audit.missing));
  return audit;
}

}  // namespace trivex::graph
