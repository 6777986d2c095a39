#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "support/tower.hpp"
#include "trivex/error.hpp"
#include "trivex/group/serialize.hpp"

using namespace trivex;
using namespace trivex::group;
using trivex::testing::G;

namespace {

GroupElement random_element(const PcPresentation& p, std::mt19937_64& rng) {
  return element_at(p, rng() % (std::uint64_t{1} << p.size()));
}

}  // namespace

TEST_CASE("relators are freely reduced words in x0, x1") {
  const auto r = relators();
  CHECK(r[0].length() == 12);
  CHECK(r[0] == Word::from_powers({{1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, -3}, {0, -3}}));
  CHECK((r[0] * r[0].inverse()).empty());
  for (const auto& w : r) {
    // Each relator lies in the kernel of the abelianisation mod 2.
    for (int s : w.exponent_sums(2)) CHECK(s % 2 == 0);
  }
}

TEST_CASE("word reduction") {
  const Word w({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {1, 1}});
  CHECK(w.length() == 1);
  CHECK(w.str() == "x1");
  CHECK(Word::from_powers({{0, 2}, {0, -2}}).empty());
}

TEST_CASE("quotient orders follow 8 floor(k/3) + 3 (k mod 3) - 1") {
  const int expected[] = {2, 5, 7, 10, 13, 15};
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(G(k).pclass() == k);
    CHECK(G(k).size() == expected[k - 1]);
    int total = 0;
    for (int s : G(k).layer_sizes()) total += s;
    CHECK(total == G(k).size());
  }
  CHECK(G(2).layer_sizes() == std::vector<int>{2, 3});
}

TEST_CASE("presentations are consistent and satisfy the relators") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(relators_hold(G(k)));
    for (const auto& d : consistency_differences(G(k))) CHECK(d.none());
    const auto& p = G(k);
    for (int i = 0; i < p.size(); ++i) {
      const auto pw = p.power_relation(i);
      CHECK((pw.find_first() == Exponents::npos || p.weight(static_cast<int>(pw.find_first())) > p.weight(i)));
      for (int j = i + 1; j < p.size(); ++j) {
        const auto c = p.commutator_relation(j, i);
        CHECK((c.find_first() == Exponents::npos || static_cast<int>(c.find_first()) > j));
      }
    }
  }
}

TEST_CASE("group laws on random elements") {
  std::mt19937_64 rng(7);
  for (int k : {2, 3, 5}) {
    const auto& p = G(k);
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_element(p, rng), b = random_element(p, rng), c = random_element(p, rng);
      REQUIRE(p.multiply(p.multiply(a, b), c) == p.multiply(a, p.multiply(b, c)));
      REQUIRE(p.multiply(a, p.inverse(a)) == p.identity());
      REQUIRE(p.multiply(p.identity(), a) == a);
    }
  }
}

TEST_CASE("generator orders") {
  const auto& g1 = G(1);
  CHECK(g1.multiply(g1.image(0), g1.image(0)) == g1.identity());
  const auto& g2 = G(2);
  CHECK(g2.power(g2.image(0), 4) == g2.identity());
  CHECK(g2.power(g2.image(0), 2) != g2.identity());
  CHECK(g2.element_order(g2.image(1)) == 4);
  CHECK(g2.element_order(g2.identity()) == 1);
  for (int k = 2; k <= 6; ++k) {
    const auto& p = G(k);
    const auto want = std::uint64_t{1} << std::bit_width(static_cast<unsigned>(k));
    const auto x3 = p.inverse(p.multiply(p.image(0), p.image(1)));
    CHECK(p.element_order(p.image(0)) == want);
    CHECK(p.element_order(p.image(1)) == want);
    CHECK(p.element_order(x3) == want);
  }
  CHECK(G(4).element_order(G(4).inverse(G(4).multiply(G(4).image(0), G(4).image(1)))) == 8);
}

TEST_CASE("generator sets and the defining triangle relation") {
  CHECK(generator_set(G(1)).size() == 3);
  CHECK(generator_set(G(2)).size() == 6);
  for (int k = 1; k <= 6; ++k) {
    const auto& p = G(k);
    const auto s = labeled_generators(p);
    CHECK(p.multiply(p.multiply(s[0], s[2]), s[4]) == p.identity());
    for (int i = 0; i < 6; i += 2) CHECK(p.multiply(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]) == p.identity());
  }
}

TEST_CASE("enumeration is a bijection onto indices") {
  for (int k = 2; k <= 3; ++k) {
    const auto all = enumerate(G(k), 1u << 16);
    CHECK(all.size() == (std::size_t{1} << G(k).size()));
    for (std::uint64_t i = 0; i < all.size(); ++i) CHECK(element_index(G(k), all[i]) == i);
  }
  CHECK(enumerate(G(6), 1u << 16).size() == 32768);
  CHECK_THROWS_AS(enumerate(G(6), 1000), CapExceeded);
}

TEST_CASE("projection is a surjective homomorphism with kernel 2^{N_{k+1} - N_k}") {
  std::mt19937_64 rng(11);
  for (int k = 2; k <= 5; ++k) {
    const Projection pr(G(k + 1));
    CHECK(pr.target().size() == G(k).size());
    for (int t = 0; t < 200; ++t) {
      const auto a = random_element(G(k + 1), rng), b = random_element(G(k + 1), rng);
      REQUIRE(pr.apply(G(k + 1).multiply(a, b)) == pr.target().multiply(pr.apply(a), pr.apply(b)));
    }
    for (int x = 0; x < 2; ++x) CHECK(element_index(G(k), pr.apply(G(k + 1).image(x))) == element_index(G(k), G(k).image(x)));
  }
  const Projection p32(G(3));
  std::set<std::uint64_t> kernel;
  for (const auto& g : enumerate(G(3), 1u << 16)) {
    if (p32.apply(g) == p32.target().identity()) kernel.insert(element_index(G(3), g));
  }
  CHECK(kernel.size() == 4);
  // G3 -> G2 -> G1 agrees with keeping only the weight-1 exponents.
  const Projection p21(p32.target());
  std::mt19937_64 r2(3);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_element(G(3), r2);
    auto direct = g.exponents();
    direct.truncate(static_cast<std::size_t>(G(1).size()));
    CHECK(p21.apply(p32.apply(g)) == GroupElement(direct));
  }
}

TEST_CASE("JSON round trip is exact") {
  for (int k = 1; k <= 6; ++k) {
    const auto text = to_json(G(k));
    const auto back = pcp_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(back.size() == G(k).size());
  }
  CHECK_THROWS_AS(pcp_from_json("{}"), InvalidArgument);
  CHECK_THROWS_AS(pcp_from_json("not json"), InvalidArgument);
}
