#include "trivex/util/gf2.hpp"

#include <bit>

namespace trivex::gf2 {

bool Row::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

long Row::highest() const {
  for (std::size_t wi = words_.size(); wi-- > 0;) {
    if (words_[wi]) return static_cast<long>(wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi])));
  }
  return -1;
}

Row& Row::operator^=(const Row& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

Echelon reduce(std::vector<Row> input, std::size_t columns) {
  Echelon e;
  e.row_of_column.assign(columns, -1);
  for (auto& row : input) {
    // Eliminate existing pivots from the incoming row, highest first.
    for (long col = row.highest(); col >= 0; ) {
      const long r = e.row_of_column[static_cast<std::size_t>(col)];
      if (r < 0) break;
      row ^= e.rows[static_cast<std::size_t>(r)];
      col = row.highest();
    }
    // The row may still contain lower pivot columns below its own leader.
    const long lead = row.highest();
    if (lead < 0) continue;
    for (long col = lead - 1; col >= 0; --col) {
      if (!row.test(static_cast<std::size_t>(col))) continue;
      const long r = e.row_of_column[static_cast<std::size_t>(col)];
      if (r >= 0) row ^= e.rows[static_cast<std::size_t>(r)];
    }
    // Back-substitute into earlier rows to keep the form fully reduced.
    for (auto& other : e.rows) {
      if (other.test(static_cast<std::size_t>(lead))) other ^= row;
    }
    e.row_of_column[static_cast<std::size_t>(lead)] = static_cast<long>(e.rows.size());
    e.pivot_column.push_back(lead);
    e.rows.push_back(std::move(row));
  }
  return e;
}

}  // namespace trivex::gf2
