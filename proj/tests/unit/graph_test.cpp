#include <doctest.h>

#include <numeric>

#include "support/oracles.hpp"
#include "support/tower.hpp"
#include "trivex/error.hpp"
#include "trivex/graph/cheeger.hpp"
#include "trivex/graph/covering.hpp"
#include "trivex/graph/delta_y.hpp"
#include "trivex/graph/export.hpp"
#include "trivex/graph/isomorphism.hpp"
#include "trivex/group/pquotient.hpp"

using namespace trivex;
using namespace trivex::graph;
using trivex::testing::G;

namespace {

constexpr std::uint64_t kCap = 1u << 16;

void check_handshake(const LabeledGraph& g) {
  long degrees = 0;
  for (int v = 0; v < g.vertex_count(); ++v) degrees += g.degree(v);
  CHECK(degrees == 2L * g.edge_count());
}

// Map each vertex (group element) of X_{k+1} to its image in X_k.
std::vector<int> projection_map(int k) {
  const group::Projection pr(G(k + 1));
  std::vector<int> map;
  for (const auto& g : group::enumerate(G(k + 1), kCap)) {
    map.push_back(static_cast<int>(group::element_index(G(k), pr.apply(g))));
  }
  return map;
}

}  // namespace

TEST_CASE("Cayley graphs") {
  const auto x1 = cayley(G(1), kCap);
  CHECK(x1.vertex_count() == 4);
  CHECK(x1.dart_count() == 24);
  CHECK(x1.underlying_simple().edge_count() == 6);
  const auto x2 = cayley(G(2), kCap);
  CHECK(x2.vertex_count() == 32);
  CHECK(x2.edge_count() == 96);
  CHECK(x2.is_regular(6));
  CHECK(x2.is_connected());
  CHECK(x2.is_simple());
  for (int k = 1; k <= 5; ++k) check_handshake(cayley(G(k), kCap));
}

TEST_CASE("relator triangles") {
  const auto x2 = cayley(G(2), kCap);
  const auto tri = relator_triangles(x2);
  CHECK(tri.size() == 32);
  std::vector<int> per_vertex(32, 0);
  for (const auto& t : tri)
    for (int v : t.vertices) ++per_vertex[static_cast<std::size_t>(v)];
  for (int c : per_vertex) CHECK(c == 3);

  // g lies in the triangles based at g, g x0^-1 and g x3.
  const auto& p = G(2);
  const auto s = group::labeled_generators(p);
  for (const auto& g : group::enumerate(p, kCap)) {
    const auto gi = static_cast<int>(group::element_index(p, g));
    for (const auto& base : {g, p.multiply(g, s[1]), p.multiply(g, s[4])}) {
      const auto& t = tri[group::element_index(p, base)];
      CHECK(std::count(t.vertices.begin(), t.vertices.end(), gi) == 1);
    }
  }
  for (int k = 2; k <= 5; ++k) {
    const auto x = cayley(G(k), kCap);
    const auto audit = audit_cliques(x, relator_triangles(x));
    CHECK(audit.coincide());
    if (k <= 3) CHECK(oracle::count_triangles(x) == x.vertex_count());
  }
}

TEST_CASE("Delta-Y transform") {
  for (int k = 1; k <= 5; ++k) {
    CAPTURE(k);
    const auto x = cayley(G(k), kCap);
    const auto t = delta_y(x, relator_triangles(x));
    CHECK(t.vertex_count() == (2 << G(k).size()));
    CHECK(t.edge_count() == 3 * (1 << G(k).size()));
    CHECK(t.is_regular(3));
    CHECK(!t.bipartition().empty());
    check_handshake(t);
    const auto back = contract_green(t);
    const auto phi = find_isomorphism(back, x, {.match_labels = false});
    REQUIRE(phi);
    CHECK(verify_isomorphism(back, x, *phi));
  }
  const auto x1 = cayley(G(1), kCap);
  const auto t1 = delta_y(x1, relator_triangles(x1));
  CHECK(find_isomorphism(t1, oracle::cube()).has_value());
  CHECK(!find_isomorphism(t1, oracle::complete_bipartite(3, 3)).has_value());
}

TEST_CASE("isomorphism search") {
  // Relabel the octahedron by a fixed permutation and recover it.
  const auto oct = oracle::octahedron();
  const std::vector<int> perm{3, 5, 0, 4, 1, 2};
  LabeledGraph shuffled(6);
  for (const auto& [u, v] : oct.edge_pairs()) shuffled.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  const auto phi = find_isomorphism(oct, shuffled);
  REQUIRE(phi);
  CHECK(verify_isomorphism(oct, shuffled, *phi));
  CHECK(!find_isomorphism(oracle::cycle(6), oracle::complete_bipartite(2, 2)).has_value());
  // C6 and two disjoint triangles share the degree sequence.
  LabeledGraph two_triangles(6);
  for (int b : {0, 3})
    for (int i = 0; i < 3; ++i) two_triangles.add_edge(b + i, b + (i + 1) % 3);
  CHECK(!find_isomorphism(oracle::cycle(6), two_triangles).has_value());
  // A wrong map fails verification.
  std::vector<int> id(6);
  std::iota(id.begin(), id.end(), 0);
  CHECK(!verify_isomorphism(oracle::cycle(6), two_triangles, id));
}

TEST_CASE("labelled isomorphism respects dart labels") {
  const auto x2 = cayley(G(2), kCap);
  IsoOptions o;
  o.match_labels = true;
  CHECK(find_isomorphism(x2, x2, o).has_value());
  // Exchange the labels of the x0 edge and the x1 edge at vertex 0: the
  // underlying graph is unchanged, the label structure is not.
  std::vector<Dart> darts;
  for (int d = 0; d < x2.dart_count(); ++d) darts.push_back(x2.dart(d));
  for (int d : x2.darts_at(0)) {
    const int l = x2.dart(d).label;
    if (l == 0 || l == 2) {
      darts[static_cast<std::size_t>(d)].label = l ^ 2;
      darts[static_cast<std::size_t>(x2.dart(d).reverse)].label = (l ^ 2) + 1;
    }
  }
  const LabeledGraph relabeled(x2.vertex_count(), darts);
  CHECK(find_isomorphism(x2, relabeled).has_value());
  CHECK(!find_isomorphism(x2, relabeled, o).has_value());
}

TEST_CASE("covering maps") {
  for (int k = 2; k <= 3; ++k) {
    const auto big = cayley(G(k + 1), kCap), small = cayley(G(k), kCap);
    const auto r = covering_check(big, small, projection_map(k));
    CHECK(r.ok);
    CHECK(r.fiber_size == (1 << (G(k + 1).size() - G(k).size())));
  }
  const auto x2 = cayley(G(2), kCap);
  std::vector<int> id(32);
  std::iota(id.begin(), id.end(), 0);
  const auto r = covering_check(x2, x2, id);
  CHECK(r.ok);
  CHECK(r.fiber_size == 1);
  std::vector<int> bad = id;
  std::swap(bad[0], bad[1]);
  CHECK(!covering_check(x2, x2, bad).ok);

  // T_3 -> T_2: blue vertices by projection, green vertex of triangle g by its base point.
  const auto base = projection_map(2);
  std::vector<int> tmap = base;
  for (int g : base) tmap.push_back(32 + g);
  const auto x3 = cayley(G(3), kCap);
  const auto t3 = delta_y(x3, relator_triangles(x3));
  const auto t2 = delta_y(x2, relator_triangles(x2));
  CHECK(covering_check(t3, t2, tmap).ok);
}

TEST_CASE("Cheeger constants") {
  CHECK(cheeger_exact(oracle::cube()) == doctest::Approx(1.0));
  CHECK(cheeger_exact(oracle::complete(4)) == doctest::Approx(2.0));
  const auto r = cheeger(oracle::complete(4), 4.0);
  REQUIRE(r.exact);
  CHECK(*r.exact >= r.lower_bound);
  CHECK(cheeger(oracle::complete(4), 4.0).lower_bound == doctest::Approx(2.0));
  CHECK_THROWS_AS(cheeger_exact(oracle::cycle(21)), CapExceeded);
}

TEST_CASE("exports") {
  const auto x2 = cayley(G(2), kCap);
  const ExportMeta meta{"X2", "abc123"};
  const auto el = to_edgelist(x2, meta);
  CHECK(el.find("# trivex") == 0);
  CHECK(el.find("abc123") != std::string::npos);
  const auto g6 = to_graph6(x2);
  const auto back = from_graph6(g6);
  CHECK(back.edge_pairs() == x2.underlying_simple().edge_pairs());
  CHECK(from_graph6(to_graph6(oracle::complete(4))).edge_count() == 6);
  CHECK(to_graph6(oracle::complete(4)) == "C~");
  CHECK_THROWS_AS(to_graph6(cayley(G(1), kCap)), InvalidArgument);
  CHECK(graph6_sidecar(x2, meta).find("abc123") != std::string::npos);
  const auto dot = to_dot(x2, meta);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("abc123") != std::string::npos);
  CHECK(to_edgelist(x2, meta) == el);
}
