#include "trivex/graph/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "trivex/error.hpp"

namespace trivex::graph {

namespace {

// Colour refinement on the disjoint union g1 + g2 (g2 vertices offset by n).
class Search {
 public:
  Search(const LabeledGraph& a, const LabeledGraph& b, const IsoOptions& o) : g1_(a), g2_(b), opts_(o), n_(a.vertex_count()) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> colour(static_cast<std::size_t>(2 * n_));
    std::map<std::vector<int>, int> ids;
    for (int u = 0; u < 2 * n_; ++u) {
      const auto& [g, v] = side(u);
      std::vector<int> sig{g.degree(v), opts_.match_classes && !g.vertex_classes().empty() ? g.vertex_classes()[static_cast<std::size_t>(v)] : 0};
      if (opts_.match_labels) {
        std::vector<int> labels;
        for (int d : g.darts_at(v)) labels.push_back(g.dart(d).label);
        std::sort(labels.begin(), labels.end());
        sig.insert(sig.end(), labels.begin(), labels.end());
      }
      colour[static_cast<std::size_t>(u)] = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
    }
    // Re-rank so colour ids are independent of insertion order.
    std::vector<int> rank(ids.size());
    int r = 0;
    for (const auto& [sig, id] : ids) rank[static_cast<std::size_t>(id)] = r++;
    for (auto& c : colour) c = rank[static_cast<std::size_t>(c)];
    return search(colour);
  }

 private:
  std::pair<const LabeledGraph&, int> side(int u) const {
    return u < n_ ? std::pair<const LabeledGraph&, int>{g1_, u} : std::pair<const LabeledGraph&, int>{g2_, u - n_};
  }

  void refine(std::vector<int>& colour) const {
    std::size_t classes = std::set<int>(colour.begin(), colour.end()).size();
    while (true) {
      std::vector<std::pair<std::vector<std::pair<int, int>>, int>> sigs(colour.size());
      for (int u = 0; u < 2 * n_; ++u) {
        const auto& [g, v] = side(u);
        const int off = u < n_ ? 0 : n_;
        auto& s = sigs[static_cast<std::size_t>(u)];
        s.second = u;
        s.first.reserve(static_cast<std::size_t>(g.degree(v)) + 1);
        s.first.emplace_back(colour[static_cast<std::size_t>(u)], -1);
        for (int d : g.darts_at(v)) {
          const int label = opts_.match_labels ? g.dart(d).label : 0;
          s.first.emplace_back(colour[static_cast<std::size_t>(g.head(d) + off)], label);
        }
        std::sort(s.first.begin() + 1, s.first.end());
      }
      std::sort(sigs.begin(), sigs.end());
      int c = -1;
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        if (i == 0 || sigs[i].first != sigs[i - 1].first) ++c;
        colour[static_cast<std::size_t>(sigs[i].second)] = c;
      }
      const auto now = static_cast<std::size_t>(c + 1);
      if (now == classes) return;
      classes = now;
    }
  }

  bool balanced(const std::vector<int>& colour) const {
    std::vector<int> diff(colour.size() + 1, 0);
    for (int u = 0; u < 2 * n_; ++u) diff[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])] += u < n_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](int x) { return x == 0; });
  }

  std::optional<std::vector<int>> search(std::vector<int> colour) {
    if (++nodes_ > opts_.budget) throw CapExceeded("isomorphism search exceeded its node budget");
    refine(colour);
    if (!balanced(colour)) return std::nullopt;
    // Smallest non-singleton cell; its lowest g1 vertex gets individualized.
    std::vector<int> size(colour.size() + 1, 0);
    for (int u = 0; u < n_; ++u) ++size[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])];
    int best = -1;
    for (int u = 0; u < n_; ++u) {
      const int c = colour[static_cast<std::size_t>(u)];
      if (size[static_cast<std::size_t>(c)] > 1 && (best < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(colour[static_cast<std::size_t>(best)])])) best = u;
    }
    if (best < 0) {
      std::vector<int> pos(colour.size(), -1);
      for (int u = n_; u < 2 * n_; ++u) pos[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])] = u - n_;
      std::vector<int> phi(static_cast<std::size_t>(n_));
      for (int u = 0; u < n_; ++u) phi[static_cast<std::size_t>(u)] = pos[static_cast<std::size_t>(colour[static_cast<std::size_t>(u)])];
      if (verify_isomorphism(g1_, g2_, phi, opts_.match_labels, opts_.match_classes)) return phi;
      return std::nullopt;
    }
    const int cell = colour[static_cast<std::size_t>(best)];
    const int fresh = static_cast<int>(colour.size());
    for (int w = n_; w < 2 * n_; ++w) {
      if (colour[static_cast<std::size_t>(w)] != cell) continue;
      auto next = colour;
      next[static_cast<std::size_t>(best)] = fresh;
      next[static_cast<std::size_t>(w)] = fresh;
      if (auto phi = search(std::move(next))) return phi;
    }
    return std::nullopt;
  }

  const LabeledGraph& g1_;
  const LabeledGraph& g2_;
  IsoOptions opts_;
  int n_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const IsoOptions& opts) {
  if (g1.vertex_count() != g2.vertex_count() || g1.dart_count() != g2.dart_count()) return std::nullopt;
  if (opts.match_classes && (g1.vertex_classes().empty() != g2.vertex_classes().empty())) return std::nullopt;
  if (g1.vertex_count() == 0) return std::vector<int>{};
  return Search(g1, g2, opts).run();
}

bool verify_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const std::vector<int>& phi, bool match_labels,
                        bool match_classes) {
  const int n = g1.vertex_count();
  if (g2.vertex_count() != n || static_cast<int>(phi.size()) != n || g1.dart_count() != g2.dart_count()) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v : phi) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  if (match_classes) {
    const auto& c1 = g1.vertex_classes();
    const auto& c2 = g2.vertex_classes();
    if (c1.empty() != c2.empty()) return false;
    for (int v = 0; v < n && !c1.empty(); ++v) {
      if (c1[static_cast<std::size_t>(v)] != c2[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])]) return false;
    }
  }
  using Key = std::tuple<int, int, int>;
  auto darts_of = [&](const LabeledGraph& g, const std::vector<int>* map) {
    std::vector<Key> out;
    out.reserve(static_cast<std::size_t>(g.dart_count()));
    for (int d = 0; d < g.dart_count(); ++d) {
      int s = g.dart(d).source;
      int t = g.head(d);
      if (map) {
        s = (*map)[static_cast<std::size_t>(s)];
        t = (*map)[static_cast<std::size_t>(t)];
      }
      out.emplace_back(s, t, match_labels ? g.dart(d).label : 0);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return darts_of(g1, &phi) == darts_of(g2, nullptr);
}

}  // namespace trivex::graph
