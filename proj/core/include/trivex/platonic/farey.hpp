#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace trivex::platonic {

// Reduced fraction p/q with q >= 0; infinity is 1/0.
class Fraction {
 public:
  // Throws InvalidArgument unless gcd(p, q) = 1 and q >= 0.
  Fraction(std::int64_t p, std::int64_t q);
  static Fraction infinity() { return {1, 0}; }
  // Reduces and fixes the sign; (p, 0) becomes infinity.
  static Fraction reduce(std::int64_t p, std::int64_t q);

  [[nodiscard]] std::int64_t p() const { return p_; }
  [[nodiscard]] std::int64_t q() const { return q_; }
  [[nodiscard]] std::string str() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// |ps - qr| = 1.
bool farey_adjacent(const Fraction& a, const Fraction& b);

// z -> (a z + b) / (c z + d) for the integer matrix (a, b, c, d).
Fraction mobius(const std::array<std::int64_t, 4>& m, const Fraction& z);

struct FareyImage {
  std::string map;  // "X", "X^-1", ...
  std::array<Fraction, 3> image{Fraction::infinity(), Fraction::infinity(), Fraction::infinity()};
  bool pairwise_adjacent = false;
  bool moved = false;  // image differs from {0, 1, infinity} as a set
};

// Images of the triangle (0, 1, infinity) under X^{+-1}, Y^{+-1}, Z^{+-1}.
std::array<FareyImage, 6> farey_triangle_images();

}  // namespace trivex::platonic
