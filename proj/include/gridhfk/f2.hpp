#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridhfk {

using F2Column = std::vector<std::uint32_t>;  // sorted row indices
using F2Vector = std::vector<std::uint8_t>;   // dense, entries 0 or 1

// Sparse matrix over F2 stored by columns.
class SparseF2Matrix {
 public:
  SparseF2Matrix(std::uint32_t rows, std::uint32_t cols);

  // Entries are summed mod 2: a repeated position cancels.
  static SparseF2Matrix from_entries(std::uint32_t rows, std::uint32_t cols,
                                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries);

  std::uint32_t rows() const noexcept { return rows_; }
  std::uint32_t cols() const noexcept { return static_cast<std::uint32_t>(columns_.size()); }
  const F2Column& column(std::uint32_t c) const { return columns_[c]; }
  void set_column(std::uint32_t c, F2Column col);
  std::size_t nonzeros() const;
  bool get(std::uint32_t row, std::uint32_t col) const;

  SparseF2Matrix transpose() const;
  F2Vector multiply(const F2Vector& x) const;
  // Product this * rhs.
  SparseF2Matrix multiply(const SparseF2Matrix& rhs) const;

  // Coordinate text: one "row col" pair per line, 1-based.
  std::string to_coordinate_text() const;

 private:
  std::uint32_t rows_;
  std::vector<F2Column> columns_;
};

// a ^= b for sorted supports.
void xor_into(F2Column& a, const F2Column& b, F2Column& scratch);

// Incremental column echelon form keyed by the lowest (largest) row index.
// Optionally tracks, for each stored column, which input columns it sums.
class F2ColumnReducer {
 public:
  F2ColumnReducer(std::uint32_t rows, bool track_combinations);

  // Reduces `col` against the stored pivots and stores it if nonzero.
  // Returns true when the column was independent of the previous ones.
  bool add_column(F2Column col, std::uint32_t id);

  // Reduces `v` in place; on return v is empty iff it lay in the span. With
  // tracking enabled, `combination` receives the input ids summing to v.
  bool reduce(F2Column& v, F2Column* combination) const;

  std::size_t rank() const noexcept { return pivots_.size(); }
  bool is_pivot_row(std::uint32_t row) const { return pivot_of_row_[row] >= 0; }

 private:
  std::vector<std::int32_t> pivot_of_row_;
  std::vector<F2Column> pivots_;
  std::vector<F2Column> combos_;
  bool track_;
  mutable F2Column scratch_;
};

std::size_t f2_rank(const SparseF2Matrix& m);

// Some x with m x = b, or nullopt when b is outside the column span.
std::optional<F2Vector> f2_solve(const SparseF2Matrix& m, const F2Vector& b);

}  // namespace gridhfk
