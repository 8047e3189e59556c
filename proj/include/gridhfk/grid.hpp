#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridhfk {

// An n x n grid diagram. Columns and rows are stored 0-based: the O marker of
// column c sits in cell (c, o_row(c)), the X marker in cell (c, x_row(c)).
// The text format and all user-facing coordinates are 1-based.
class GridDiagram {
 public:
  GridDiagram(std::vector<int> o_rows, std::vector<int> x_rows);

  // Builds from the 1-based permutations used by the file format.
  static GridDiagram from_one_based(std::span<const int> sigma_o, std::span<const int> sigma_x);

  int size() const noexcept { return static_cast<int>(o_.size()); }

  int o_row(int col) const { return o_[col]; }
  int x_row(int col) const { return x_[col]; }
  int o_col(int row) const { return o_inv_[row]; }
  int x_col(int row) const { return x_inv_[row]; }

  std::span<const int> o_rows() const noexcept { return o_; }
  std::span<const int> x_rows() const noexcept { return x_; }

  bool has_o(int col, int row) const { return o_[col] == row; }
  bool has_x(int col, int row) const { return x_[col] == row; }

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  std::vector<int> o_;
  std::vector<int> x_;
  std::vector<int> o_inv_;
  std::vector<int> x_inv_;
};

GridDiagram parse_grid(std::string_view text);
std::string format_grid(const GridDiagram& grid);

// n lines, top row first, characters '.', 'X', 'O'.
std::string render_ascii(const GridDiagram& grid);

// Number of cycles of sigma_X^-1 o sigma_O.
int component_count(const GridDiagram& grid);

// Reflection across the main diagonal; turns the front of m(K) into one of K.
GridDiagram transpose(const GridDiagram& grid);

// 1-based cell coordinates (column, row).
struct Cell {
  int col = 0;
  int row = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

enum class CuspDirection { Up, Down };

struct Crossing {
  Cell at;
  int sign = 0;
};

struct Cusp {
  Cell at;
  CuspDirection direction = CuspDirection::Up;
};

// Legendrian front of the mirror, read off the grid projection.
struct FrontDiagram {
  std::vector<Cell> path;  // marker cells in traversal order, O first
  std::vector<Crossing> crossings;
  std::vector<Cusp> cusps;

  int writhe() const;
  int up_cusps() const;
  int down_cusps() const;
};

FrontDiagram front_projection(const GridDiagram& grid);

struct ClassicalInvariants {
  int tb = 0;
  int r = 0;
  int sl_plus = 0;
  int sl_minus = 0;
  friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

ClassicalInvariants classical_invariants(const GridDiagram& grid);

}  // namespace gridhfk
