#include "trivex/platonic/psl2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "trivex/error.hpp"
#include "trivex/group/word.hpp"

namespace trivex::platonic {

namespace {

constexpr int kXyzModulus = 8;

int mod(std::int64_t a, int N) {
  const auto r = static_cast<int>(a % N);
  return r < 0 ? r + N : r;
}

ProjMatrix evaluate(const group::Word& w, const std::array<ProjMatrix, 2>& gens, int N) {
  ProjMatrix r;
  for (const auto& l : w.letters()) {
    const auto& g = gens[static_cast<std::size_t>(l.generator)];
    r = proj_multiply(r, l.exponent > 0 ? g : proj_inverse(g, N), N);
  }
  return r;
}

}  // namespace

ProjMatrix proj_matrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int N) {
  if (N < 2) throw InvalidArgument("PSL(2, Z_N) needs N >= 2");
  const ProjMatrix p{{mod(a, N), mod(b, N), mod(c, N), mod(d, N)}};
  if (mod(static_cast<std::int64_t>(p.e[0]) * p.e[3] - static_cast<std::int64_t>(p.e[1]) * p.e[2], N) != 1 % N) {
    throw InvalidArgument("matrix is not in SL(2, Z_" + std::to_string(N) + ")");
  }
  const ProjMatrix q{{mod(-p.e[0], N), mod(-p.e[1], N), mod(-p.e[2], N), mod(-p.e[3], N)}};
  return std::min(p, q);
}

ProjMatrix proj_multiply(const ProjMatrix& x, const ProjMatrix& y, int N) {
  const auto& a = x.e;
  const auto& b = y.e;
  auto m = [](int u, int v) { return static_cast<std::int64_t>(u) * v; };
  return proj_matrix(m(a[0], b[0]) + m(a[1], b[2]), m(a[0], b[1]) + m(a[1], b[3]), m(a[2], b[0]) + m(a[3], b[2]),
                     m(a[2], b[1]) + m(a[3], b[3]), N);
}

ProjMatrix proj_inverse(const ProjMatrix& x, int N) { return proj_matrix(x.e[3], -x.e[1], -x.e[2], x.e[0], N); }

std::vector<ProjMatrix> psl2(int N) {
  if (N < 2) throw InvalidArgument("PSL(2, Z_N) needs N >= 2");
  if (N > kMaxPslModulus) throw CapExceeded("PSL(2, Z_N) enumeration limited to N <= " + std::to_string(kMaxPslModulus));
  std::vector<ProjMatrix> out;
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      for (int c = 0; c < N; ++c) {
        for (int d = 0; d < N; ++d) {
          if (mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, N) != 1 % N) continue;
          const ProjMatrix p{{a, b, c, d}};
          if (proj_matrix(a, b, c, d, N) == p) out.push_back(p);
        }
      }
    }
  }
  return out;
}

std::array<ProjMatrix, 2> psl2_generators(int N) { return {proj_matrix(0, -1, 1, 0, N), proj_matrix(1, 1, 0, 1, N)}; }

std::array<std::array<std::int64_t, 4>, 3> xyz_matrices() {
  return {{{-1, 0, 2, -1}, {-1, 2, -2, 3}, {1, 2, 0, 1}}};
}

XyzSubgroup xyz_subgroup() {
  const int N = kXyzModulus;
  std::array<ProjMatrix, 6> gens;
  const auto mats = xyz_matrices();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& m = mats[i];
    gens[2 * i] = proj_matrix(m[0], m[1], m[2], m[3], N);
    gens[2 * i + 1] = proj_inverse(gens[2 * i], N);
  }

  XyzSubgroup s;
  std::map<ProjMatrix, int> index;
  std::deque<int> queue;
  auto intern = [&](const ProjMatrix& m) {
    auto [it, fresh] = index.emplace(m, static_cast<int>(s.elements.size()));
    if (fresh) {
      s.elements.push_back(m);
      s.table.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(ProjMatrix{});
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < gens.size(); ++l) {
      const int h = intern(proj_multiply(s.elements[static_cast<std::size_t>(g)], gens[l], N));
      s.table[static_cast<std::size_t>(g)][l] = h;
    }
  }
  s.order = static_cast<int>(s.elements.size());
  s.index = static_cast<int>(psl2(N).size()) / s.order;

  s.normal = true;
  for (const auto& c : psl2_generators(N)) {
    const auto ci = proj_inverse(c, N);
    for (const auto& m : s.elements) {
      if (!index.count(proj_multiply(proj_multiply(ci, m, N), c, N))) s.normal = false;
    }
  }

  const std::array<ProjMatrix, 2> xy{gens[0], gens[2]};
  s.relators_hold = true;
  for (const auto& r : group::relators()) {
    if (!(evaluate(r, xy, N) == ProjMatrix{})) s.relators_hold = false;
  }

  if (s.order != 32 || s.index != 6 || !s.normal || !s.relators_hold) {
    throw InternalError("<X,Y,Z> mod 8: order " + std::to_string(s.order) + ", index " + std::to_string(s.index) +
                        (s.normal ? "" : ", not normal") + (s.relators_hold ? "" : ", relators fail"));
  }
  return s;
}

}  // namespace trivex::platonic
