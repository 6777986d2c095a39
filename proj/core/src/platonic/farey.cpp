#include "trivex/platonic/farey.hpp"

#include <algorithm>
#include <numeric>

#include "trivex/error.hpp"
#include "trivex/platonic/psl2.hpp"

namespace trivex::platonic {

Fraction::Fraction(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q < 0 || std::gcd(p, q) != 1) throw InvalidArgument("fraction " + std::to_string(p) + "/" + std::to_string(q) + " is not reduced");
}

Fraction Fraction::reduce(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw InvalidArgument("0/0 is not a point of the projective line");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  const auto g = std::gcd(p, q);
  return {p / g, q / g};
}

std::string Fraction::str() const { return q_ == 0 ? "inf" : q_ == 1 ? std::to_string(p_) : std::to_string(p_) + "/" + std::to_string(q_); }

bool farey_adjacent(const Fraction& a, const Fraction& b) {
  const auto det = a.p() * b.q() - a.q() * b.p();
  return det == 1 || det == -1;
}

Fraction mobius(const std::array<std::int64_t, 4>& m, const Fraction& z) {
  return Fraction::reduce(m[0] * z.p() + m[1] * z.q(), m[2] * z.p() + m[3] * z.q());
}

std::array<FareyImage, 6> farey_triangle_images() {
  static const char* kNames[] = {"X", "Y", "Z"};
  const std::array<Fraction, 3> base{Fraction(0, 1), Fraction(1, 1), Fraction::infinity()};
  auto key = [](const Fraction& f) { return std::pair{f.p(), f.q()}; };
  auto as_set = [&](const std::array<Fraction, 3>& t) {
    std::array<std::pair<std::int64_t, std::int64_t>, 3> s{key(t[0]), key(t[1]), key(t[2])};
    std::sort(s.begin(), s.end());
    return s;
  };
  std::array<FareyImage, 6> out;
  const auto mats = xyz_matrices();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& m = mats[i];
    const std::array<std::int64_t, 4> inv{m[3], -m[1], -m[2], m[0]};
    for (std::size_t s = 0; s < 2; ++s) {
      auto& img = out[2 * i + s];
      img.map = std::string(kNames[i]) + (s ? "^-1" : "");
      for (std::size_t v = 0; v < 3; ++v) img.image[v] = mobius(s ? inv : m, base[v]);
      img.pairwise_adjacent = farey_adjacent(img.image[0], img.image[1]) && farey_adjacent(img.image[1], img.image[2]) &&
                              farey_adjacent(img.image[0], img.image[2]);
      img.moved = as_set(img.image) != as_set(base);
    }
  }
  return out;
}

}  // namespace trivex::platonic
