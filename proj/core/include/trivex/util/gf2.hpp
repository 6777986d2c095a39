#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trivex::gf2 {

// Dense bit-packed row over F2 with runtime length.
class Row {
 public:
  Row() = default;
  explicit Row(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  [[nodiscard]] bool none() const;
  // Highest set index, or -1 for the zero row.
  [[nodiscard]] long highest() const;
  Row& operator^=(const Row& o);
  friend bool operator==(const Row&, const Row&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Reduced row echelon form where each pivot is the HIGHEST set column of its
// row; free (non-pivot) columns are therefore biased toward low indices.
struct Echelon {
  std::vector<Row> rows;          // one per pivot, fully reduced
  std::vector<long> pivot_column; // pivot_column[r] = pivot of rows[r]
  std::vector<long> row_of_column; // column -> row index, or -1 if free
  [[nodiscard]] std::size_t rank() const { return rows.size(); }
};

Echelon reduce(std::vector<Row> rows, std::size_t columns);

}  // namespace trivex::gf2
