#include "gridhfk/f2.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "gridhfk/error.hpp"

namespace gridhfk {

SparseF2Matrix::SparseF2Matrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), columns_(cols) {}

SparseF2Matrix SparseF2Matrix::from_entries(
    std::uint32_t rows, std::uint32_t cols,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries) {
  SparseF2Matrix m(rows, cols);
  for (const auto& [r, c] : entries) {
    if (r >= rows || c >= cols) {
      throw GridError(ErrorKind::DimensionMismatch, "entry (" + std::to_string(r) + "," +
                                                        std::to_string(c) + ") outside matrix");
    }
    m.columns_[c].push_back(r);
  }
  for (auto& col : m.columns_) {
    std::sort(col.begin(), col.end());
    F2Column reduced;
    for (std::size_t i = 0; i < col.size();) {
      std::size_t j = i;
      while (j < col.size() && col[j] == col[i]) ++j;
      if ((j - i) % 2 == 1) reduced.push_back(col[i]);
      i = j;
    }
    col = std::move(reduced);
  }
  return m;
}

void SparseF2Matrix::set_column(std::uint32_t c, F2Column col) {
  if (c >= cols() || (!col.empty() && col.back() >= rows_)) {
    throw GridError(ErrorKind::DimensionMismatch, "column does not fit matrix");
  }
  columns_[c] = std::move(col);
}

std::size_t SparseF2Matrix::nonzeros() const {
  std::size_t nnz = 0;
  for (const auto& c : columns_) nnz += c.size();
  return nnz;
}

bool SparseF2Matrix::get(std::uint32_t row, std::uint32_t col) const {
  const auto& c = columns_.at(col);
  return std::binary_search(c.begin(), c.end(), row);
}

SparseF2Matrix SparseF2Matrix::transpose() const {
  SparseF2Matrix t(cols(), rows_);
  for (std::uint32_t c = 0; c < cols(); ++c) {
    for (std::uint32_t r : columns_[c]) t.columns_[r].push_back(c);
  }
  return t;
}

F2Vector SparseF2Matrix::multiply(const F2Vector& x) const {
  if (x.size() != cols()) throw GridError(ErrorKind::DimensionMismatch, "vector length != cols");
  F2Vector y(rows_, 0);
  for (std::uint32_t c = 0; c < cols(); ++c) {
    if (!x[c]) continue;
    for (std::uint32_t r : columns_[c]) y[r] ^= 1;
  }
  return y;
}

SparseF2Matrix SparseF2Matrix::multiply(const SparseF2Matrix& rhs) const {
  if (cols() != rhs.rows()) throw GridError(ErrorKind::DimensionMismatch, "inner dimensions differ");
  SparseF2Matrix out(rows_, rhs.cols());
  F2Column scratch;
  for (std::uint32_t c = 0; c < rhs.cols(); ++c) {
    F2Column acc;
    for (std::uint32_t k : rhs.columns_[c]) xor_into(acc, columns_[k], scratch);
    out.columns_[c] = std::move(acc);
  }
  return out;
}

std::string SparseF2Matrix::to_coordinate_text() const {
  std::ostringstream out;
  for (std::uint32_t c = 0; c < cols(); ++c) {
    for (std::uint32_t r : columns_[c]) out << r + 1 << ' ' << c + 1 << '\n';
  }
  return out.str();
}

void xor_into(F2Column& a, const F2Column& b, F2Column& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
  a.swap(scratch);
}

F2ColumnReducer::F2ColumnReducer(std::uint32_t rows, bool track_combinations)
    : pivot_of_row_(rows, -1), track_(track_combinations) {}

bool F2ColumnReducer::add_column(F2Column col, std::uint32_t id) {
  F2Column combo;
  if (track_) combo.push_back(id);
  while (!col.empty()) {
    const std::int32_t p = pivot_of_row_[col.back()];
    if (p < 0) break;
    xor_into(col, pivots_[p], scratch_);
    if (track_) xor_into(combo, combos_[p], scratch_);
  }
  if (col.empty()) return false;
  pivot_of_row_[col.back()] = static_cast<std::int32_t>(pivots_.size());
  pivots_.push_back(std::move(col));
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

bool F2ColumnReducer::reduce(F2Column& v, F2Column* combination) const {
  if (combination) combination->clear();
  while (!v.empty()) {
    const std::int32_t p = pivot_of_row_[v.back()];
    if (p < 0) return false;
    xor_into(v, pivots_[p], scratch_);
    if (combination && track_) xor_into(*combination, combos_[p], scratch_);
  }
  return true;
}

std::size_t f2_rank(const SparseF2Matrix& m) {
  F2ColumnReducer reducer(m.rows(), false);
  for (std::uint32_t c = 0; c < m.cols(); ++c) reducer.add_column(m.column(c), c);
  return reducer.rank();
}

std::optional<F2Vector> f2_solve(const SparseF2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows()) throw GridError(ErrorKind::DimensionMismatch, "|b| != rows");
  F2ColumnReducer reducer(m.rows(), true);
  for (std::uint32_t c = 0; c < m.cols(); ++c) reducer.add_column(m.column(c), c);
  F2Column v;
  for (std::uint32_t r = 0; r < b.size(); ++r) {
    if (b[r]) v.push_back(r);
  }
  F2Column combo;
  if (!reducer.reduce(v, &combo)) return std::nullopt;
  F2Vector x(m.cols(), 0);
  for (std::uint32_t c : combo) x[c] ^= 1;
  return x;
}

}  // namespace gridhfk
