#include <doctest.h>

#include <numeric>
#include <set>

#include "support/oracles.hpp"
#include "support/tower.hpp"
#include "trivex/error.hpp"
#include "trivex/graph/isomorphism.hpp"
#include "trivex/platonic/duality.hpp"
#include "trivex/platonic/farey.hpp"
#include "trivex/platonic/platonic.hpp"
#include "trivex/platonic/psl2.hpp"

using namespace trivex;
using namespace trivex::platonic;
using trivex::testing::G;

namespace {

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

// Pairs {v, -v} of primitive vectors mod N, counted by brute force.
long brute_pair_count(int N) {
  std::set<std::pair<int, int>> seen;
  for (int l = 0; l < N; ++l)
    for (int m = 0; m < N; ++m)
      if (std::gcd(std::gcd(l, m), N) == 1) seen.insert(std::min(std::pair{l, m}, std::pair{mod(-l, N), mod(-m, N)}));
  return static_cast<long>(seen.size());
}

// |SL(2, Z_N)| / |{+-I}| by brute force.
long brute_psl_order(int N) {
  long sl = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          if (mod(static_cast<long>(a) * d - static_cast<long>(b) * c, N) == 1 % N) ++sl;
  return N <= 2 ? sl : sl / 2;
}

}  // namespace

TEST_CASE("Platonic vertex counts") {
  for (int N = 3; N <= 24; ++N) {
    CAPTURE(N);
    CHECK(platonic_count(N) == brute_pair_count(N));
    CHECK(static_cast<long>(platonic_vertices(N).size()) == platonic_count(N));
  }
  CHECK(platonic_count(2) == 3);
  CHECK(platonic_count(8) == 24);
  CHECK(platonic_count(16) == 96);
}

TEST_CASE("canonical pairs") {
  CHECK(canonical_pair(3, 1, 5) == ProjectivePair{2, 4});
  CHECK(canonical_pair(-3, -1, 5) == ProjectivePair{2, 4});
  CHECK(canonical_pair(0, 1, 4) == ProjectivePair{0, 1});
}

TEST_CASE("small Platonic graphs") {
  const auto p3 = build_platonic(3);
  CHECK(graph::find_isomorphism(p3, oracle::complete(4)).has_value());
  const auto p4 = build_platonic(4);
  CHECK(graph::find_isomorphism(p4, oracle::octahedron()).has_value());
  const auto p5 = build_platonic(5);
  CHECK(p5.vertex_count() == 12);
  CHECK(p5.is_regular(5));
  CHECK(p5.is_simple());
  CHECK(oracle::count_triangles(p5) == 20);
  for (int N = 6; N <= 12; ++N) {
    const auto p = build_platonic(N);
    CHECK(p.is_regular(N));
    CHECK(p.is_connected());
  }
  CHECK_THROWS_AS(build_platonic(1), InvalidArgument);
}

TEST_CASE("PSL(2, Z_N) orders") {
  CHECK(psl2(2).size() == 6);
  CHECK(psl2(3).size() == 12);
  CHECK(psl2(4).size() == 24);
  CHECK(psl2(8).size() == 192);
  for (int N = 2; N <= 9; ++N) CHECK(static_cast<long>(psl2(N).size()) == brute_psl_order(N));
  CHECK_THROWS_AS(psl2(kMaxPslModulus + 1), CapExceeded);
  CHECK_THROWS_AS(proj_matrix(1, 1, 1, 1, 5), InvalidArgument);
}

TEST_CASE("S and T generate PSL(2, Z_8)") {
  const int N = 8;
  const auto gens = psl2_generators(N);
  std::set<ProjMatrix> seen{ProjMatrix{}};
  std::vector<ProjMatrix> frontier{ProjMatrix{}};
  while (!frontier.empty()) {
    std::vector<ProjMatrix> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        const auto p = proj_multiply(m, g, N);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  CHECK(seen.size() == psl2(N).size());
  for (const auto& m : psl2(N)) CHECK(proj_multiply(m, proj_inverse(m, N), N) == ProjMatrix{});
}

TEST_CASE("XYZ = I over the integers") {
  const auto m = xyz_matrices();
  auto mul = [](const std::array<std::int64_t, 4>& a, const std::array<std::int64_t, 4>& b) {
    return std::array<std::int64_t, 4>{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                                       a[2] * b[1] + a[3] * b[3]};
  };
  CHECK(mul(mul(m[0], m[1]), m[2]) == std::array<std::int64_t, 4>{1, 0, 0, 1});
  for (const auto& a : m) CHECK(a[0] * a[3] - a[1] * a[2] == 1);
}

TEST_CASE("subgroup generated by X, Y, Z mod 8") {
  const auto s = xyz_subgroup();
  CHECK(s.order == 32);
  CHECK(s.index == 6);
  CHECK(s.normal);
  CHECK(s.relators_hold);
  // Conjugation closure checked independently.
  const std::set<ProjMatrix> h(s.elements.begin(), s.elements.end());
  for (const auto& g : psl2(8))
    for (const auto& x : s.elements) CHECK(h.count(proj_multiply(proj_multiply(g, x, 8), proj_inverse(g, 8), 8)) == 1);
  const auto cay = graph::cayley_from_table(s.table);
  const auto x2 = graph::cayley(G(2), 1u << 16);
  graph::IsoOptions o;
  o.match_labels = true;
  const auto phi = graph::find_isomorphism(cay, x2, o);
  REQUIRE(phi);
  CHECK(graph::verify_isomorphism(cay, x2, *phi, true));
}

TEST_CASE("Farey tessellation") {
  CHECK(farey_adjacent(Fraction(0, 1), Fraction::infinity()));
  CHECK(farey_adjacent(Fraction(1, 2), Fraction(2, 3)));
  CHECK(!farey_adjacent(Fraction(0, 1), Fraction(2, 1)));
  CHECK(Fraction::reduce(4, -6) == Fraction(-2, 3));
  CHECK(Fraction::reduce(-5, 0) == Fraction::infinity());
  CHECK(Fraction(-2, 3).str() == "-2/3");
  CHECK_THROWS_AS(Fraction(2, 4), InvalidArgument);
  CHECK_THROWS_AS(Fraction(1, -2), InvalidArgument);
  CHECK(mobius({1, 1, 0, 1}, Fraction::infinity()) == Fraction::infinity());
  CHECK(mobius({0, -1, 1, 0}, Fraction(0, 1)) == Fraction::infinity());
  for (const auto& img : farey_triangle_images()) {
    CAPTURE(img.map);
    CHECK(img.pairwise_adjacent);
    CHECK(img.moved);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) CHECK(farey_adjacent(img.image[static_cast<std::size_t>(i)], img.image[static_cast<std::size_t>(j)]));
  }
}

TEST_CASE("duality of T_k with Platonic graphs") {
  for (int k = 1; k <= 2; ++k) {
    const auto v = duality_verdict(G(k));
    CHECK(v.counts_equal);
    CHECK(v.direct);
    CHECK(v.isomorphic);
    REQUIRE(v.witness);
  }
  const auto v1 = duality_verdict(G(1));
  CHECK(v1.modulus == 4);
  CHECK(v1.dual_vertices == 6);
  const auto v3 = duality_verdict(G(3));
  CHECK(!v3.counts_equal);
  CHECK(!v3.isomorphic);
  CHECK(v3.dual_vertices == 96);
  CHECK(v3.platonic_vertices == 24);
  CHECK(!v3.certificate.empty());
  const auto v5 = duality_verdict(G(5));
  CHECK(!v5.direct);
  CHECK(!v5.isomorphic);
}
