#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trivex/toeplitz/periodic_matrix.hpp"

namespace trivex::toeplitz {

// Diagonals a_1, a_2, ... of one generator x_i = M_0(a_1, a_2, ...).
struct GeneratorData {
  std::string generator;  // "x0", "x1" or "x3"
  std::vector<BlockTriple> diagonals;

  [[nodiscard]] PeriodicMatrix matrix(int k) const { return PeriodicMatrix::with_depth(0, diagonals, k); }
};

// Accepts one {"generator", "diagonals"} object or an array of them.
std::vector<GeneratorData> parse_generator_data(std::string_view json_text);
std::string generator_data_json(const std::vector<GeneratorData>& data);

// M_0(alpha_i) with all further diagonals zero. The leading diagonal of every
// 2-power of x_i depends on alpha_i alone, so this suffices for the power pattern.
std::vector<GeneratorData> alpha_only_data();

// One row of the power-pattern check: x^{2^l} against M_{2^l-1}(alpha or beta, ...).
struct PowerStep {
  int l = 0;
  int depth = 0;
  int expected_depth = 0;
  BlockTriple leading;   // diagonal 2^l of x^{2^l}
  BlockTriple expected;  // alpha_i for even l, beta_i for odd l
  [[nodiscard]] bool depth_ok() const { return depth == expected_depth; }
  [[nodiscard]] bool leading_ok() const { return leading == expected; }
};

struct PowerPattern {
  std::string generator;
  int k = 0;
  std::vector<PowerStep> steps;  // every l with 2^l - 1 < k
  std::uint64_t order = 0;       // least 2^l with x^{2^l} trivial mod G^k
};

// Checks the 2-power pattern for x_i up to truncation k.
PowerPattern power_pattern(const GeneratorData& x, int k);

}  // namespace trivex::toeplitz
