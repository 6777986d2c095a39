#include <doctest.h>

#include <bit>
#include <random>

#include "support/oracles.hpp"
#include "trivex/error.hpp"
#include "trivex/toeplitz/generator_data.hpp"

using namespace trivex;
using namespace trivex::toeplitz;

namespace {

PeriodicMatrix random_matrix(std::mt19937_64& rng, int l, int k) {
  std::vector<BlockTriple> d;
  for (int j = l; j < k; ++j) d.emplace_back(static_cast<std::uint32_t>(rng()));
  return PeriodicMatrix::with_depth(l, d, k);
}

}  // namespace

TEST_CASE("block multiply matches integer matrix multiply mod 2") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto a = static_cast<Block>(rng() & 0x1ff), b = static_cast<Block>(rng() & 0x1ff);
    const auto c = block_multiply(a, b);
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col) {
        int s = 0;
        for (int m = 0; m < 3; ++m) s ^= ((a >> (3 * r + m)) & 1) & ((b >> (3 * m + col)) & 1);
        REQUIRE(((c >> (3 * r + col)) & 1) == s);
      }
  }
  CHECK(block_multiply(kIdentityBlock, 0x1a5) == 0x1a5);
}

TEST_CASE("BlockTriple hex and row round trips") {
  const auto ab = alpha_beta();
  for (const auto t : {ab.alpha0, ab.alpha1, ab.alpha3, ab.beta0, ab.beta1, ab.beta3}) {
    CHECK(BlockTriple::from_hex(t.to_hex()) == t);
    CHECK(t.to_hex().size() == 7);
  }
  CHECK(ab.alpha0.str().substr(0, 9) == "000000000");
  CHECK(ab.beta0.str().substr(20, 9) == "010010010");
  CHECK(ab.alpha1 == ab.beta1);
}

TEST_CASE("product agrees with the instantiated-matrix oracle") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const int k = t < 100 ? 6 : 1 + static_cast<int>(rng() % 8);
    const auto a = random_matrix(rng, 0, k), b = random_matrix(rng, 0, k);
    const int blocks = k + 3;
    const auto expected = oracle::multiply(oracle::instantiate(a, blocks), oracle::instantiate(b, blocks));
    REQUIRE(oracle::agree_to_depth(oracle::instantiate(ptm_multiply(a, b), blocks), expected, k));
  }
}

TEST_CASE("identity, associativity and leading diagonals") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + static_cast<int>(rng() % 8);
    const auto a = random_matrix(rng, 0, k), b = random_matrix(rng, 0, k), c = random_matrix(rng, 0, k);
    CHECK(ptm_multiply(PeriodicMatrix(k), a) == a);
    CHECK(ptm_multiply(ptm_multiply(a, b), c) == ptm_multiply(a, ptm_multiply(b, c)));
    CHECK(ptm_power(a, 1) == a);
  }
  for (int t = 0; t < 100; ++t) {
    const int k = 8;
    const int l = static_cast<int>(rng() % 4);
    const auto a = random_matrix(rng, l, k), b = random_matrix(rng, l, k);
    const auto p = ptm_multiply(a, b);
    CHECK(ptm_depth(p) >= l);
    CHECK(p.diagonal(l + 1) == (a.diagonal(l + 1) ^ b.diagonal(l + 1)));
    CHECK(ptm_depth(ptm_multiply(a, a)) >= std::min(k, 2 * ptm_depth(a) + 1));
  }
}

TEST_CASE("depth") {
  CHECK(ptm_depth(PeriodicMatrix(5)) == 5);
  CHECK(ptm_depth(PeriodicMatrix::with_depth(3, {BlockTriple(1)}, 6)) == 3);
  CHECK_THROWS_AS(ptm_power(PeriodicMatrix(3), 3), InvalidArgument);
}

TEST_CASE("power pattern from the displayed leading diagonals") {
  const auto data = alpha_only_data();
  REQUIRE(data.size() == 3);
  for (const auto& x : data) {
    const auto x4 = ptm_power(x.matrix(8), 4);
    CHECK(ptm_depth(x4) == 3);
    for (int k = 1; k <= 8; ++k) {
      const auto p = power_pattern(x, k);
      CHECK(p.order == (std::uint64_t{1} << std::bit_width(static_cast<unsigned>(k))));
      for (const auto& s : p.steps) {
        CHECK(s.depth_ok());
        if (x.generator != "x1" || s.l % 2 == 0) CHECK(s.leading_ok());
      }
    }
  }
}

TEST_CASE("generator data JSON") {
  const auto data = alpha_only_data();
  const auto text = generator_data_json(data);
  const auto back = parse_generator_data(text);
  REQUIRE(back.size() == data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    CHECK(back[i].generator == data[i].generator);
    CHECK(back[i].diagonals == data[i].diagonals);
  }
  CHECK_THROWS_AS(parse_generator_data("{\"generator\": 3}"), InvalidArgument);
}
