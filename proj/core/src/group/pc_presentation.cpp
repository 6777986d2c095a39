#include "trivex/group/pc_presentation.hpp"

#include <string>

#include "trivex/error.hpp"

namespace trivex::group {

namespace {

std::size_t comm_index(int j, int i) {
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
}

}  // namespace

PcPresentation::PcPresentation(Presentation source, int pclass, PcTables tables)
    : source_(std::move(source)), class_(pclass), t_(std::move(tables)) {
  const auto n = t_.weights.size();
  if (n > kMaxPcGenerators) throw CapExceeded("pc-presentation exceeds " + std::to_string(kMaxPcGenerators) + " generators");
  if (t_.definitions.size() != n || t_.power.size() != n || t_.commutator.size() != n * (n ? n - 1 : 0) / 2 ||
      t_.images.size() != static_cast<std::size_t>(source_.generators)) {
    throw InternalError("pc tables have inconsistent sizes");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (t_.weights[i] < t_.weights[i - 1]) throw InternalError("pc weights not non-decreasing");
  }
  auto check_rhs = [&](const Exponents& rhs, std::size_t above, int min_weight) {
    for (auto b = rhs.find_first(); b != Exponents::npos; b = rhs.find_from(b + 1)) {
      if (b >= n || b <= above || t_.weights[b] <= min_weight) throw InternalError("pc relation breaks the weight filtration");
    }
  };
  central_above_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    check_rhs(t_.power[i], i, t_.weights[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = t_.commutator[comm_index(static_cast<int>(j), static_cast<int>(i))];
      check_rhs(c, j, t_.weights[j]);
      if (c.any()) central_above_[i] = 0;
    }
  }
  for (const auto& img : t_.images) {
    if (img.find_from(n) != Exponents::npos) throw InternalError("image outside pc generators");
  }
}

const Exponents& PcPresentation::commutator_relation(int j, int i) const {
  if (!(j > i && i >= 0 && j < size())) throw InvalidArgument("commutator_relation needs j > i");
  return t_.commutator[comm_index(j, i)];
}

std::vector<int> PcPresentation::layer_sizes() const {
  std::vector<int> out(static_cast<std::size_t>(class_), 0);
  for (int w : t_.weights) ++out[static_cast<std::size_t>(w - 1)];
  return out;
}

GroupElement PcPresentation::generator(int i) const {
  if (i < 0 || i >= size()) throw InvalidArgument("pc generator index out of range");
  Exponents e;
  e.set(static_cast<std::size_t>(i));
  return GroupElement(e);
}

GroupElement PcPresentation::image(int x) const {
  if (x < 0 || x >= source_.generators) throw InvalidArgument("defining generator out of range");
  return GroupElement(t_.images[static_cast<std::size_t>(x)]);
}

void PcPresentation::mul_gen(Exponents& u, int i) const {
  const auto ui = static_cast<std::size_t>(i);
  if (central_above_[ui] && !u.test(ui)) {
    u.set(ui);
    return;
  }
  const Exponents rest = u.above(ui);
  u ^= rest;
  if (!u.test(ui)) {
    u.set(ui);
  } else {
    u.reset(ui);
    mul_word(u, t_.power[ui]);
  }
  // a_j a_i = a_i a_j [a_j, a_i] moves a_i left past each a_j in rest.
  for (auto j = rest.find_first(); j != Exponents::npos; j = rest.find_from(j + 1)) {
    mul_gen(u, static_cast<int>(j));
    mul_word(u, t_.commutator[comm_index(static_cast<int>(j), i)]);
  }
}

void PcPresentation::mul_word(Exponents& u, const Exponents& w) const {
  for (auto k = w.find_first(); k != Exponents::npos; k = w.find_from(k + 1)) mul_gen(u, static_cast<int>(k));
}

GroupElement PcPresentation::multiply(const GroupElement& a, const GroupElement& b) const {
  Exponents u = a.exponents();
  mul_word(u, b.exponents());
  return GroupElement(u);
}

GroupElement PcPresentation::inverse(const GroupElement& g) const {
  // Right-multiply by the lowest generator present until trivial; the lowest
  // index strictly increases, so at most N steps.
  Exponents cur = g.exponents();
  std::vector<int> word;
  while (cur.any()) {
    const auto i = static_cast<int>(cur.find_first());
    mul_gen(cur, i);
    word.push_back(i);
  }
  Exponents inv;
  for (int i : word) mul_gen(inv, i);
  return GroupElement(inv);
}

GroupElement PcPresentation::power(const GroupElement& g, std::uint64_t e) const {
  GroupElement result;
  GroupElement base = g;
  while (e) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

GroupElement PcPresentation::evaluate(const Word& w) const {
  std::vector<GroupElement> inv(static_cast<std::size_t>(source_.generators));
  std::vector<char> have(inv.size(), 0);
  Exponents u;
  for (const auto& l : w.letters()) {
    if (l.generator >= source_.generators) throw InvalidArgument("word uses an unknown generator");
    const auto x = static_cast<std::size_t>(l.generator);
    if (l.exponent > 0) {
      mul_word(u, t_.images[x]);
    } else {
      if (!have[x]) {
        inv[x] = inverse(GroupElement(t_.images[x]));
        have[x] = 1;
      }
      mul_word(u, inv[x].exponents());
    }
  }
  return GroupElement(u);
}

std::uint64_t PcPresentation::element_order(const GroupElement& g) const {
  std::uint64_t order = 1;
  GroupElement x = g;
  while (!x.is_identity()) {
    if (order > (std::uint64_t{1} << 62)) throw InternalError("element order overflow");
    x = multiply(x, x);
    order *= 2;
  }
  return order;
}

std::vector<Exponents> consistency_differences(const PcPresentation& pcp) {
  const int n = pcp.size();
  std::vector<Exponents> out;
  auto gen = [](int i) {
    Exponents e;
    e.set(static_cast<std::size_t>(i));
    return e;
  };
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        Exponents lhs = gen(k);
        pcp.mul_gen(lhs, j);
        pcp.mul_gen(lhs, i);
        Exponents ji = gen(j);
        pcp.mul_gen(ji, i);
        Exponents rhs = gen(k);
        pcp.mul_word(rhs, ji);
        out.push_back(lhs ^ rhs);
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      Exponents lhs = gen(j);
      pcp.mul_gen(lhs, j);
      pcp.mul_gen(lhs, i);
      Exponents ji = gen(j);
      pcp.mul_gen(ji, i);
      Exponents rhs = gen(j);
      pcp.mul_word(rhs, ji);
      out.push_back(lhs ^ rhs);

      Exponents lhs2 = gen(j);
      pcp.mul_gen(lhs2, i);
      pcp.mul_gen(lhs2, i);
      Exponents ii = gen(i);
      pcp.mul_gen(ii, i);
      Exponents rhs2 = gen(j);
      pcp.mul_word(rhs2, ii);
      out.push_back(lhs2 ^ rhs2);
    }
  }
  for (int i = 0; i < n; ++i) {
    Exponents ii = gen(i);
    pcp.mul_gen(ii, i);
    Exponents lhs = ii;
    pcp.mul_gen(lhs, i);
    Exponents rhs = gen(i);
    pcp.mul_word(rhs, ii);
    out.push_back(lhs ^ rhs);
  }
  return out;
}

bool relators_hold(const PcPresentation& pcp) {
  for (const auto& r : pcp.source().relators) {
    if (!pcp.evaluate(r).is_identity()) return false;
  }
  return true;
}

std::uint64_t element_index(const PcPresentation& pcp, const GroupElement& g) {
  const int n = pcp.size();
  if (n > 63) throw CapExceeded("element index needs at most 63 pc generators");
  std::uint64_t idx = 0;
  for (int i = 0; i < n; ++i) {
    if (g.exponents().test(static_cast<std::size_t>(i))) idx |= std::uint64_t{1} << (n - 1 - i);
  }
  return idx;
}

GroupElement element_at(const PcPresentation& pcp, std::uint64_t index) {
  const int n = pcp.size();
  if (n > 63 || index >> n) throw InvalidArgument("element index out of range");
  Exponents e;
  for (int i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1U) e.set(static_cast<std::size_t>(i));
  }
  return GroupElement(e);
}

std::vector<GroupElement> enumerate(const PcPresentation& pcp, std::uint64_t cap) {
  const int n = pcp.size();
  if (n > 63 || (std::uint64_t{1} << n) > cap) {
    throw CapExceeded("group of order 2^" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  }
  const std::uint64_t order = std::uint64_t{1} << n;
  std::vector<GroupElement> out;
  out.reserve(order);
  for (std::uint64_t idx = 0; idx < order; ++idx) out.push_back(element_at(pcp, idx));
  return out;
}

std::array<GroupElement, 6> labeled_generators(const PcPresentation& pcp) {
  if (pcp.source().generators != 2) throw InvalidArgument("labeled generators need a two-generator source");
  const GroupElement x0 = pcp.image(0);
  const GroupElement x1 = pcp.image(1);
  const GroupElement x0i = pcp.inverse(x0);
  const GroupElement x1i = pcp.inverse(x1);
  const GroupElement x3 = pcp.multiply(x1i, x0i);
  return {x0, x0i, x1, x1i, x3, pcp.inverse(x3)};
}

std::vector<GroupElement> generator_set(const PcPresentation& pcp) {
  std::vector<GroupElement> out;
  for (const auto& g : labeled_generators(pcp)) {
    bool seen = false;
    for (const auto& h : out) seen = seen || h == g;
    if (!seen) out.push_back(g);
  }
  return out;
}

}  // namespace trivex::group
