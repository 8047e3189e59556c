#pragma once

#include <optional>
#include <span>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

enum class Marker { X, O };
enum class Corner { NW, NE, SW, SE };

// Stabilization type "X:NW" etc: the marker that gets subdivided and the
// corner of the 2x2 block that receives the single marker of the other kind.
struct StabType {
  Marker marker = Marker::X;
  Corner corner = Corner::NW;
  friend bool operator==(const StabType&, const StabType&) = default;
};

std::string to_string(StabType type);
std::optional<StabType> parse_stab_type(std::string_view text);
inline constexpr StabType kAllStabTypes[] = {
    {Marker::X, Corner::NW}, {Marker::X, Corner::SE}, {Marker::X, Corner::NE},
    {Marker::X, Corner::SW}, {Marker::O, Corner::NW}, {Marker::O, Corner::SE},
    {Marker::O, Corner::NE}, {Marker::O, Corner::SW}};

// Shift every marker up (rows) or right (columns) by `shift`, cyclically.
struct CyclicRow {
  int shift = 1;
};
struct CyclicCol {
  int shift = 1;
};
// Swap rows j and j+1 (columns i and i+1), 1-based.
struct CommuteRows {
  int row = 1;
};
struct CommuteCols {
  int col = 1;
};
// Subdivide the marked cell `target` (1-based).
struct Stabilize {
  Cell target;
  StabType type;
};
// Undo a stabilization; `target` is the south-west cell of the 2x2 block,
// i.e. the same coordinates the matching Stabilize used.
struct Destabilize {
  Cell target;
  StabType type;
};

using GridMove = std::variant<CyclicRow, CyclicCol, CommuteRows, CommuteCols, Stabilize, Destabilize>;

enum class MoveClass { Topological, Legendrian, TransverseOnly, PositiveStab };

const char* to_string(MoveClass cls);

GridDiagram apply_move(const GridDiagram& grid, const GridMove& move);
MoveClass classify_move(const GridMove& move);

GridMove inverse_move(const GridMove& move);

std::string format_move(const GridMove& move);
GridMove parse_move(std::string_view line);
std::vector<GridMove> parse_move_script(std::string_view script);

// X in the upper-right corner cell and O in the lower-left corner cell.
bool has_x_upper_right(const GridDiagram& grid);
bool has_o_lower_left(const GridDiagram& grid);

// X:NE stabilization, O:NE stabilization of the new O, then a cyclic
// permutation; returns the input unchanged when both corners already hold.
GridDiagram normalize_corners(const GridDiagram& grid);

// Cyclic permutations only (Legendrian moves, size unchanged).
GridDiagram align_x_upper_right(const GridDiagram& grid);
GridDiagram align_o_lower_left(const GridDiagram& grid);

// Patch g1's upper-right X onto g2's lower-left O; size n1 + n2 - 1.
GridDiagram connect_sum(const GridDiagram& g1, const GridDiagram& g2);

// Every legal move of the requested classes; stabilizations only while the
// grid is smaller than `max_size`.
std::vector<GridMove> legal_moves(const GridDiagram& grid, std::span<const MoveClass> classes,
                                  int max_size);

// A random legal move from `legal_moves`, or nullopt if there is none.
std::optional<GridMove> random_move(const GridDiagram& grid, std::span<const MoveClass> classes,
                                    int max_size, std::mt19937_64& rng);

}  // namespace gridhfk
