#include "trivex/group/pquotient.hpp"

#include <string>

#include "trivex/error.hpp"
#include "trivex/util/gf2.hpp"

namespace trivex::group {

namespace {

std::size_t comm_index(int j, int i) {
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
}

// One relation of the covering presentation that received a fresh tail.
struct TailSlot {
  Definition slot;
  int column = 0;
};

void validate(const PcPresentation& pcp) {
  for (const auto& d : consistency_differences(pcp)) {
    if (d.any()) throw InternalError("quotient presentation is inconsistent");
  }
  if (!relators_hold(pcp)) throw InternalError("quotient presentation violates a relator");
}

gf2::Row tail_row(const Exponents& diff, int head, int tails) {
  if (diff.find_first() < static_cast<std::size_t>(head)) throw InternalError("tail relation has a nonzero head");
  gf2::Row row(static_cast<std::size_t>(tails));
  for (auto b = diff.find_from(static_cast<std::size_t>(head)); b != Exponents::npos; b = diff.find_from(b + 1)) {
    row.set(b - static_cast<std::size_t>(head));
  }
  return row;
}

}  // namespace

PcPresentation class_one_quotient(const Presentation& pres) {
  const int g = pres.generators;
  std::vector<gf2::Row> rows;
  for (const auto& r : pres.relators) {
    const auto sums = r.exponent_sums(g);
    gf2::Row row(static_cast<std::size_t>(g));
    for (int x = 0; x < g; ++x) {
      if (sums[static_cast<std::size_t>(x)] % 2 != 0) row.set(static_cast<std::size_t>(x));
    }
    rows.push_back(std::move(row));
  }
  const auto ech = gf2::reduce(std::move(rows), static_cast<std::size_t>(g));

  PcTables t;
  std::vector<int> pc_of(static_cast<std::size_t>(g), -1);
  for (int x = 0; x < g; ++x) {
    if (ech.row_of_column[static_cast<std::size_t>(x)] == -1) {
      pc_of[static_cast<std::size_t>(x)] = static_cast<int>(t.weights.size());
      t.weights.push_back(1);
      t.definitions.push_back({Definition::Kind::Image, x, 0});
    }
  }
  const auto n = t.weights.size();
  t.power.assign(n, Exponents{});
  t.commutator.assign(n * (n ? n - 1 : 0) / 2, Exponents{});
  t.images.assign(static_cast<std::size_t>(g), Exponents{});
  for (int x = 0; x < g; ++x) {
    auto& img = t.images[static_cast<std::size_t>(x)];
    const long r = ech.row_of_column[static_cast<std::size_t>(x)];
    if (r == -1) {
      img.set(static_cast<std::size_t>(pc_of[static_cast<std::size_t>(x)]));
      continue;
    }
    // x + sum of the free columns in its row = 0.
    const auto& row = ech.rows[static_cast<std::size_t>(r)];
    for (int y = 0; y < x; ++y) {
      if (row.test(static_cast<std::size_t>(y))) img.flip(static_cast<std::size_t>(pc_of[static_cast<std::size_t>(y)]));
    }
  }
  PcPresentation out(pres, n ? 1 : 0, std::move(t));
  validate(out);
  return out;
}

PcPresentation next_class(const PcPresentation& pcp, const QuotientOptions& opts) {
  const int n = pcp.size();
  const int c = pcp.pclass();
  if (n == 0) return pcp;

  std::vector<char> power_defines(static_cast<std::size_t>(n), 0);
  std::vector<char> comm_defines(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2, 0);
  std::vector<char> image_defines(static_cast<std::size_t>(pcp.source().generators), 0);
  for (int a = 0; a < n; ++a) {
    const auto& d = pcp.definition(a);
    switch (d.kind) {
      case Definition::Kind::Image: image_defines[static_cast<std::size_t>(d.first)] = 1; break;
      case Definition::Kind::Power: power_defines[static_cast<std::size_t>(d.first)] = 1; break;
      case Definition::Kind::Commutator: comm_defines[comm_index(d.first, d.second)] = 1; break;
    }
  }

  // Non-defining relations get a tail. A commutator [a_j, a_i] of weight
  // w_i + w_j > c + 1 lies in gamma_{c+2} and needs none.
  std::vector<TailSlot> slots;
  for (int i = 0; i < n; ++i) {
    if (!power_defines[static_cast<std::size_t>(i)]) slots.push_back({{Definition::Kind::Power, i, 0}, 0});
  }
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (comm_defines[comm_index(j, i)] || pcp.weight(i) + pcp.weight(j) > c + 1) continue;
      slots.push_back({{Definition::Kind::Commutator, j, i}, 0});
    }
  }
  for (int x = 0; x < pcp.source().generators; ++x) {
    if (!image_defines[static_cast<std::size_t>(x)]) slots.push_back({{Definition::Kind::Image, x, 0}, 0});
  }
  const int m = static_cast<int>(slots.size());
  if (static_cast<std::size_t>(n + m) > opts.max_generators) {
    throw CapExceeded("covering presentation needs " + std::to_string(n + m) + " generators, cap is " +
                      std::to_string(opts.max_generators));
  }

  auto slot_rhs = [](PcTables& t, const Definition& d) -> Exponents& {
    switch (d.kind) {
      case Definition::Kind::Power: return t.power[static_cast<std::size_t>(d.first)];
      case Definition::Kind::Commutator: return t.commutator[comm_index(d.first, d.second)];
      case Definition::Kind::Image: break;
    }
    return t.images[static_cast<std::size_t>(d.first)];
  };

  auto widen = [](const PcTables& src, int total) {
    PcTables t;
    t.weights = src.weights;
    t.definitions = src.definitions;
    t.power = src.power;
    t.images = src.images;
    const auto nn = static_cast<std::size_t>(total);
    t.power.resize(nn);
    t.commutator.assign(nn * (nn ? nn - 1 : 0) / 2, Exponents{});
    const auto old = src.weights.size();
    for (std::size_t j = 1; j < old; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        t.commutator[comm_index(static_cast<int>(j), static_cast<int>(i))] =
            src.commutator[comm_index(static_cast<int>(j), static_cast<int>(i))];
      }
    }
    return t;
  };

  PcTables cover = widen(pcp.tables(), n + m);
  for (int t = 0; t < m; ++t) {
    slots[static_cast<std::size_t>(t)].column = t;
    cover.weights.push_back(c + 1);
    cover.definitions.push_back(slots[static_cast<std::size_t>(t)].slot);
    slot_rhs(cover, slots[static_cast<std::size_t>(t)].slot).set(static_cast<std::size_t>(n + t));
  }
  const PcPresentation covering(pcp.source(), c + 1, std::move(cover));

  std::vector<gf2::Row> rows;
  for (const auto& d : consistency_differences(covering)) {
    if (d.any()) rows.push_back(tail_row(d, n, m));
  }
  for (const auto& r : pcp.source().relators) {
    const auto v = covering.evaluate(r);
    if (!v.is_identity()) rows.push_back(tail_row(v.exponents(), n, m));
  }
  const auto ech = gf2::reduce(std::move(rows), static_cast<std::size_t>(m));

  std::vector<int> new_index(static_cast<std::size_t>(m), -1);
  int r = 0;
  for (int t = 0; t < m; ++t) {
    if (ech.row_of_column[static_cast<std::size_t>(t)] == -1) new_index[static_cast<std::size_t>(t)] = n + r++;
  }
  if (r == 0) {
    PcPresentation same(pcp.source(), c, pcp.tables());
    return same;
  }

  // Each tail as a combination of surviving (free) tails.
  std::vector<Exponents> tail_value(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    auto& v = tail_value[static_cast<std::size_t>(t)];
    const long row = ech.row_of_column[static_cast<std::size_t>(t)];
    if (row == -1) {
      v.set(static_cast<std::size_t>(new_index[static_cast<std::size_t>(t)]));
      continue;
    }
    const auto& rr = ech.rows[static_cast<std::size_t>(row)];
    for (int s = 0; s < t; ++s) {
      if (rr.test(static_cast<std::size_t>(s))) v.flip(static_cast<std::size_t>(new_index[static_cast<std::size_t>(s)]));
    }
  }

  PcTables next = widen(pcp.tables(), n + r);
  next.weights.resize(static_cast<std::size_t>(n + r), c + 1);
  next.definitions.resize(static_cast<std::size_t>(n + r));
  for (int t = 0; t < m; ++t) {
    const auto& slot = slots[static_cast<std::size_t>(t)].slot;
    slot_rhs(next, slot) ^= tail_value[static_cast<std::size_t>(t)];
    if (new_index[static_cast<std::size_t>(t)] >= 0) next.definitions[static_cast<std::size_t>(new_index[static_cast<std::size_t>(t)])] = slot;
  }
  PcPresentation out(pcp.source(), c + 1, std::move(next));
  validate(out);
  return out;
}

PcPresentation pquotient(const Presentation& pres, int k, const QuotientOptions& opts) {
  if (k < 1) throw InvalidArgument("class must be at least 1");
  PcPresentation p = class_one_quotient(pres);
  for (int c = 2; c <= k; ++c) {
    PcPresentation q = next_class(p, opts);
    if (q.pclass() == p.pclass()) return q;
    p = std::move(q);
  }
  return p;
}

std::vector<PcPresentation> pquotient_tower(const Presentation& pres, int k, const QuotientOptions& opts) {
  if (k < 1) throw InvalidArgument("class must be at least 1");
  std::vector<PcPresentation> out;
  out.push_back(class_one_quotient(pres));
  for (int c = 2; c <= k; ++c) out.push_back(next_class(out.back(), opts));
  return out;
}

Projection::Projection(const PcPresentation& source) {
  const int c = source.pclass();
  if (c < 2) throw InvalidArgument("projection needs class at least 2");
  while (keep_ < source.size() && source.weight(keep_) < c) ++keep_;
  const auto& st = source.tables();
  PcTables t;
  const auto kk = static_cast<std::size_t>(keep_);
  t.weights.assign(st.weights.begin(), st.weights.begin() + keep_);
  t.definitions.assign(st.definitions.begin(), st.definitions.begin() + keep_);
  t.power.assign(st.power.begin(), st.power.begin() + keep_);
  t.commutator.assign(st.commutator.begin(), st.commutator.begin() + static_cast<long>(kk * (kk ? kk - 1 : 0) / 2));
  t.images = st.images;
  for (auto& e : t.power) e.truncate(kk);
  for (auto& e : t.commutator) e.truncate(kk);
  for (auto& e : t.images) e.truncate(kk);
  target_ = PcPresentation(source.source(), c - 1, std::move(t));
}

GroupElement Projection::apply(const GroupElement& g) const {
  Exponents e = g.exponents();
  e.truncate(static_cast<std::size_t>(keep_));
  return GroupElement(e);
}

}  // namespace trivex::group
