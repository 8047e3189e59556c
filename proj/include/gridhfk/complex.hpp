#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

inline constexpr int kMaxGridSize = 16;

// A generator: vertical line i meets horizontal line perm[i] (0-based, mod n).
struct GridState {
  std::vector<int> perm;
  friend auto operator<=>(const GridState&, const GridState&) = default;
};

// Generators packed four bits per column, column 0 most significant, so that
// integer order is lexicographic order of the permutation.
using PackedState = std::uint64_t;

PackedState pack(std::span<const int> perm);
GridState unpack(PackedState state, int n);
std::string to_string(const GridState& x);

// Ordered by Alexander grading, then Maslov grading.
struct Bigrading {
  int maslov = 0;
  int alexander = 0;

  friend bool operator==(const Bigrading&, const Bigrading&) = default;
  friend std::strong_ordering operator<=>(const Bigrading& a, const Bigrading& b) {
    if (auto c = a.alexander <=> b.alexander; c != 0) return c;
    return a.maslov <=> b.maslov;
  }
  Bigrading operator+(const Bigrading& o) const { return {maslov + o.maslov, alexander + o.alexander}; }
  Bigrading operator-(const Bigrading& o) const { return {maslov - o.maslov, alexander - o.alexander}; }
};

// A rectangle on the torus from `from` to `to`: its lower-left and upper-right
// corners are the moving points of `from`. Lines are 0-based; the rectangle
// spans columns left..right and rows bottom..top, read cyclically.
struct Rectangle {
  GridState from;
  GridState to;
  int left = 0;
  int right = 0;
  int bottom = 0;
  int top = 0;
  int n_o = 0;
  int n_x = 0;
  bool empty = false;
  std::vector<int> o_columns;  // columns whose O lies inside
};

struct MinusTerm {
  GridState target;
  std::vector<int> u_powers;  // exponent of U_i, i = column of the O marker
  friend auto operator<=>(const MinusTerm&, const MinusTerm&) = default;
};

enum class Flavor { Tilde, Minus0 };

// Precomputed lattice counts for one grid: absolute gradings, rectangle
// marker tables and generator enumeration.
class GridComplex {
 public:
  explicit GridComplex(GridDiagram grid);

  const GridDiagram& grid() const noexcept { return grid_; }
  int size() const noexcept { return n_; }

  int maslov(std::span<const int> perm) const;
  int alexander(std::span<const int> perm) const;
  Bigrading bigrading(std::span<const int> perm) const;
  Bigrading bigrading(PackedState x) const;

  // Marker counts of the cyclic rectangle with the given lower-left line
  // corner and width/height (both in 1..n-1).
  int count_o(int left, int width, int bottom, int height) const {
    return n_o_[index(left, width, bottom, height)];
  }
  int count_x(int left, int width, int bottom, int height) const {
    return n_x_[index(left, width, bottom, height)];
  }

  // Calls f(i, j, left, width, bottom, height) for each of the two rectangles
  // joining x to x with columns i < j swapped, when its interior holds no
  // point of x.
  template <class F>
  void for_each_empty_rectangle(std::span<const int> x, F&& f) const;

  // Targets of tilde-differential rectangles (empty, no markers), after
  // mod 2 cancellation of the two rectangles sharing a target.
  void tilde_targets(PackedState x, std::vector<PackedState>& out) const;

  std::vector<Rectangle> empty_rectangles(const GridState& x) const;
  std::vector<GridState> differential_tilde(const GridState& x) const;
  std::vector<MinusTerm> differential_minus0(const GridState& x) const;

  // Bounds on the Alexander grading over all generators, from per-column
  // extremes of the Alexander weights (not necessarily attained).
  std::pair<int, int> alexander_bounds() const;

  // Visits every generator in lexicographic order as (packed, bigrading).
  // With `alexander` set, only that Alexander grading is visited (pruned).
  void for_each_state(const std::function<void(PackedState, Bigrading)>& visit,
                      const int* alexander = nullptr) const;

 private:
  std::size_t index(int left, int width, int bottom, int height) const {
    return ((static_cast<std::size_t>(left) * n_ + width) * n_ + bottom) * n_ + height;
  }

  GridDiagram grid_;
  int n_;
  // w[i][p]: markers strictly north-east plus strictly south-west of the
  // lattice point (i, p); summed over a state this is 2 J(x, markers).
  std::vector<int> w_o_;
  std::vector<int> w_x_;
  // Per-point Alexander contribution (w_x - w_o), stored flat [i * n + p].
  std::vector<int> alex_w_;
  int j_oo_ = 0;
  int j_xx_ = 0;
  std::vector<std::uint8_t> n_o_;
  std::vector<std::uint8_t> n_x_;
};

template <class F>
void GridComplex::for_each_empty_rectangle(std::span<const int> x, F&& f) const {
  const int n = n_;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int yi = x[i];
      const int yj = x[j];
      // Rectangle with left edge on line i: rows from x[i] up to x[j].
      {
        const int bottom = yi;
        const int height = (yj - yi + n) % n;
        bool empty = true;
        for (int k = i + 1; k < j && empty; ++k) {
          const int rel = (x[k] - bottom + n) % n;
          if (rel > 0 && rel < height) empty = false;
        }
        if (empty) f(i, j, i, j - i, bottom, height);
      }
      // Wrapping rectangle with left edge on line j: rows from x[j] up to x[i].
      {
        const int bottom = yj;
        const int height = (yi - yj + n) % n;
        bool empty = true;
        for (int k = j + 1; k < n + i && empty; ++k) {
          const int rel = (x[k % n] - bottom + n) % n;
          if (rel > 0 && rel < height) empty = false;
        }
        if (empty) f(i, j, j, n - (j - i), bottom, height);
      }
    }
  }
}

}  // namespace gridhfk
