#include "gridhfk/moves.hpp"

#include <algorithm>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int mod(int a, int n) { return ((a % n) + n) % n; }

Marker other(Marker m) { return m == Marker::X ? Marker::O : Marker::X; }

// Block cell offsets (dcol, drow) from the south-west cell.
struct Offset {
  int dc;
  int dr;
};

Offset offset_of(Corner corner) {
  switch (corner) {
    case Corner::NW: return {0, 1};
    case Corner::NE: return {1, 1};
    case Corner::SW: return {0, 0};
    case Corner::SE: return {1, 0};
  }
  return {0, 0};
}

// The two corners on the diagonal that does not contain `corner`.
std::pair<Corner, Corner> opposite_diagonal(Corner corner) {
  if (corner == Corner::NW || corner == Corner::SE) return {Corner::NE, Corner::SW};
  return {Corner::NW, Corner::SE};
}

struct MarkerSets {
  std::vector<int> o;
  std::vector<int> x;

  explicit MarkerSets(int n) : o(n, -1), x(n, -1) {}

  void put(Marker m, int col, int row) { (m == Marker::O ? o : x)[col] = row; }
  GridDiagram build() { return GridDiagram(std::move(o), std::move(x)); }
};

Cell checked_cell(const GridDiagram& grid, Cell c) {
  const int n = grid.size();
  if (c.col < 1 || c.col > n || c.row < 1 || c.row > n) {
    throw GridError(ErrorKind::OutOfRange, "cell (" + std::to_string(c.col) + "," +
                                               std::to_string(c.row) + ") outside the grid");
  }
  return {c.col - 1, c.row - 1};
}

bool has_marker(const GridDiagram& grid, Marker m, int col, int row) {
  return m == Marker::O ? grid.has_o(col, row) : grid.has_x(col, row);
}

// Endpoints of two spans on a circle interleave, or touch.
bool spans_conflict(int a1, int b1, int a2, int b2) {
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return true;
  if (a1 > b1) std::swap(a1, b1);
  const bool a2_in = a1 < a2 && a2 < b1;
  const bool b2_in = a1 < b2 && b2 < b1;
  return a2_in != b2_in;
}

GridDiagram cyclic_rows(const GridDiagram& g, int shift) {
  const int n = g.size();
  std::vector<int> o(n), x(n);
  for (int c = 0; c < n; ++c) {
    o[c] = mod(g.o_row(c) + shift, n);
    x[c] = mod(g.x_row(c) + shift, n);
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram cyclic_cols(const GridDiagram& g, int shift) {
  const int n = g.size();
  std::vector<int> o(n), x(n);
  for (int c = 0; c < n; ++c) {
    o[mod(c + shift, n)] = g.o_row(c);
    x[mod(c + shift, n)] = g.x_row(c);
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram commute_cols(const GridDiagram& g, int col) {
  const int n = g.size();
  if (col < 1 || col >= n) {
    throw GridError(ErrorKind::OutOfRange, "column commutation index " + std::to_string(col));
  }
  const int a = col - 1;
  const int b = col;
  if (spans_conflict(g.o_row(a), g.x_row(a), g.o_row(b), g.x_row(b))) {
    throw GridError(ErrorKind::IllegalCommutation,
                    "columns " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
  }
  std::vector<int> o(g.o_rows().begin(), g.o_rows().end());
  std::vector<int> x(g.x_rows().begin(), g.x_rows().end());
  std::swap(o[a], o[b]);
  std::swap(x[a], x[b]);
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram commute_rows(const GridDiagram& g, int row) {
  const int n = g.size();
  if (row < 1 || row >= n) {
    throw GridError(ErrorKind::OutOfRange, "row commutation index " + std::to_string(row));
  }
  const int a = row - 1;
  const int b = row;
  if (spans_conflict(g.o_col(a), g.x_col(a), g.o_col(b), g.x_col(b))) {
    throw GridError(ErrorKind::IllegalCommutation,
                    "rows " + std::to_string(a + 1) + " and " + std::to_string(b + 1));
  }
  auto swap_row = [&](int r) { return r == a ? b : r == b ? a : r; };
  std::vector<int> o(n), x(n);
  for (int c = 0; c < n; ++c) {
    o[c] = swap_row(g.o_row(c));
    x[c] = swap_row(g.x_row(c));
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram stabilize(const GridDiagram& g, const Stabilize& move) {
  const Cell t = checked_cell(g, move.target);
  const Marker doubled = move.type.marker;
  const Marker single = other(doubled);
  if (!has_marker(g, doubled, t.col, t.row)) {
    throw GridError(ErrorKind::NoSuchPattern, "no " + std::string(doubled == Marker::X ? "X" : "O") +
                                                  " at (" + std::to_string(move.target.col) + "," +
                                                  std::to_string(move.target.row) + ")");
  }
  const int n = g.size();
  const Offset single_at = offset_of(move.type.corner);
  const auto [d1, d2] = opposite_diagonal(move.type.corner);
  // The block row/column without the single marker receives the displaced
  // marker of that kind from the subdivided row/column.
  const int free_row = t.row + (1 - single_at.dr);
  const int free_col = t.col + (1 - single_at.dc);
  auto map_row = [&](int r) { return r < t.row ? r : r + 1; };
  auto map_col = [&](int c) { return c < t.col ? c : c + 1; };

  MarkerSets out(n + 1);
  for (int c = 0; c < n; ++c) {
    for (Marker m : {Marker::O, Marker::X}) {
      const int r = m == Marker::O ? g.o_row(c) : g.x_row(c);
      if (c == t.col && r == t.row) continue;
      const int nc = c == t.col ? free_col : map_col(c);
      const int nr = r == t.row ? free_row : map_row(r);
      out.put(m, nc, nr);
    }
  }
  out.put(single, t.col + single_at.dc, t.row + single_at.dr);
  for (Corner d : {d1, d2}) {
    const Offset off = offset_of(d);
    out.put(doubled, t.col + off.dc, t.row + off.dr);
  }
  return out.build();
}

bool block_matches(const GridDiagram& g, int col, int row, StabType type) {
  const Marker doubled = type.marker;
  const Marker single = other(doubled);
  const auto [d1, d2] = opposite_diagonal(type.corner);
  const Offset s = offset_of(type.corner);
  if (!has_marker(g, single, col + s.dc, row + s.dr)) return false;
  for (Corner d : {d1, d2}) {
    const Offset off = offset_of(d);
    if (!has_marker(g, doubled, col + off.dc, row + off.dr)) return false;
  }
  // The fourth cell, diagonally opposite the single marker, stays empty.
  const int ec = col + 1 - s.dc;
  const int er = row + 1 - s.dr;
  return !g.has_o(ec, er) && !g.has_x(ec, er);
}

GridDiagram destabilize(const GridDiagram& g, const Destabilize& move) {
  const int n = g.size();
  const Cell t = checked_cell(g, move.target);
  if (n < 3 || t.col + 1 >= n || t.row + 1 >= n) {
    throw GridError(ErrorKind::OutOfRange, "destabilization block leaves the grid");
  }
  if (!block_matches(g, t.col, t.row, move.type)) {
    throw GridError(ErrorKind::NoSuchPattern, "no " + to_string(move.type) + " block at (" +
                                                  std::to_string(move.target.col) + "," +
                                                  std::to_string(move.target.row) + ")");
  }
  auto in_block = [&](int c, int r) {
    return (c == t.col || c == t.col + 1) && (r == t.row || r == t.row + 1);
  };
  auto map = [&](int v, int base) { return v <= base ? v : v - 1; };

  MarkerSets out(n - 1);
  for (int c = 0; c < n; ++c) {
    for (Marker m : {Marker::O, Marker::X}) {
      const int r = m == Marker::O ? g.o_row(c) : g.x_row(c);
      if (in_block(c, r)) continue;
      out.put(m, map(c, t.col), map(r, t.row));
    }
  }
  out.put(move.type.marker, t.col, t.row);
  return out.build();
}

}  // namespace

std::string to_string(StabType type) {
  static const char* corners[] = {"NW", "NE", "SW", "SE"};
  return std::string(type.marker == Marker::X ? "X:" : "O:") + corners[static_cast<int>(type.corner)];
}

std::optional<StabType> parse_stab_type(std::string_view text) {
  for (StabType t : kAllStabTypes) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

const char* to_string(MoveClass cls) {
  switch (cls) {
    case MoveClass::Topological: return "Topological";
    case MoveClass::Legendrian: return "Legendrian";
    case MoveClass::TransverseOnly: return "TransverseOnly";
    case MoveClass::PositiveStab: return "PositiveStab";
  }
  return "?";
}

GridDiagram apply_move(const GridDiagram& grid, const GridMove& move) {
  return std::visit(overloaded{
                        [&](const CyclicRow& m) { return cyclic_rows(grid, m.shift); },
                        [&](const CyclicCol& m) { return cyclic_cols(grid, m.shift); },
                        [&](const CommuteRows& m) { return commute_rows(grid, m.row); },
                        [&](const CommuteCols& m) { return commute_cols(grid, m.col); },
                        [&](const Stabilize& m) { return stabilize(grid, m); },
                        [&](const Destabilize& m) { return destabilize(grid, m); },
                    },
                    move);
}

namespace {

MoveClass classify_type(StabType t) {
  const bool x = t.marker == Marker::X;
  switch (t.corner) {
    case Corner::NW:
    case Corner::SE: return MoveClass::Legendrian;
    case Corner::NE: return x ? MoveClass::TransverseOnly : MoveClass::PositiveStab;
    case Corner::SW: return x ? MoveClass::PositiveStab : MoveClass::TransverseOnly;
  }
  return MoveClass::Topological;
}

}  // namespace

MoveClass classify_move(const GridMove& move) {
  return std::visit(overloaded{
                        [](const Stabilize& m) { return classify_type(m.type); },
                        [](const Destabilize& m) { return classify_type(m.type); },
                        [](const auto&) { return MoveClass::Legendrian; },
                    },
                    move);
}

GridMove inverse_move(const GridMove& move) {
  return std::visit(overloaded{
                        [](const CyclicRow& m) -> GridMove { return CyclicRow{-m.shift}; },
                        [](const CyclicCol& m) -> GridMove { return CyclicCol{-m.shift}; },
                        [](const Stabilize& m) -> GridMove { return Destabilize{m.target, m.type}; },
                        [](const Destabilize& m) -> GridMove { return Stabilize{m.target, m.type}; },
                        [](const auto& m) -> GridMove { return m; },
                    },
                    move);
}

std::string format_move(const GridMove& move) {
  auto cell = [](Cell c) { return std::to_string(c.col) + " " + std::to_string(c.row); };
  return std::visit(
      overloaded{
          [](const CyclicRow& m) { return "cycR " + std::to_string(m.shift); },
          [](const CyclicCol& m) { return "cycC " + std::to_string(m.shift); },
          [](const CommuteRows& m) { return "commR " + std::to_string(m.row); },
          [](const CommuteCols& m) { return "commC " + std::to_string(m.col); },
          [&](const Stabilize& m) { return "stab " + to_string(m.type) + " " + cell(m.target); },
          [&](const Destabilize& m) { return "destab " + to_string(m.type) + " " + cell(m.target); },
      },
      move);
}

GridMove parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string op;
  in >> op;
  auto read_int = [&]() {
    long long v = 0;
    if (!(in >> v)) throw GridError(ErrorKind::Parse, "bad move '" + std::string(line) + "'");
    return static_cast<int>(v);
  };
  auto finish = [&](GridMove m) {
    std::string rest;
    if (in >> rest) throw GridError(ErrorKind::Parse, "trailing input in '" + std::string(line) + "'");
    return m;
  };
  if (op == "cycR") return finish(CyclicRow{read_int()});
  if (op == "cycC") return finish(CyclicCol{read_int()});
  if (op == "commR") return finish(CommuteRows{read_int()});
  if (op == "commC") return finish(CommuteCols{read_int()});
  if (op == "stab" || op == "destab") {
    std::string type_text;
    in >> type_text;
    const auto type = parse_stab_type(type_text);
    if (!type) throw GridError(ErrorKind::Parse, "unknown stabilization type '" + type_text + "'");
    const int col = read_int();
    const int row = read_int();
    if (op == "stab") return finish(Stabilize{{col, row}, *type});
    return finish(Destabilize{{col, row}, *type});
  }
  throw GridError(ErrorKind::Parse, "unknown move '" + std::string(line) + "'");
}

std::vector<GridMove> parse_move_script(std::string_view script) {
  std::vector<GridMove> moves;
  while (!script.empty()) {
    const auto cut = script.find('\n');
    std::string_view line = script.substr(0, cut);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') moves.push_back(parse_move(line));
    if (cut == std::string_view::npos) break;
    script.remove_prefix(cut + 1);
  }
  return moves;
}

bool has_x_upper_right(const GridDiagram& grid) {
  const int n = grid.size();
  return grid.x_row(n - 1) == n - 1;
}

bool has_o_lower_left(const GridDiagram& grid) { return grid.o_row(0) == 0; }

GridDiagram normalize_corners(const GridDiagram& grid) {
  if (has_x_upper_right(grid) && has_o_lower_left(grid)) return grid;
  if (component_count(grid) != 1) {
    throw GridError(ErrorKind::MultiComponent, "corner normalization needs a knot");
  }
  // Stabilize at the X of the first column. The X:NE block puts a new O at
  // (c+1, r+1) with the lower X at (c+1, r); subdividing that O (O:NE) leaves
  // an O diagonally above-right of the lower X, at (c+2, r+1).
  const int c = 0;
  const int r = grid.x_row(0);
  GridDiagram g = apply_move(grid, Stabilize{{c + 1, r + 1}, {Marker::X, Corner::NE}});
  g = apply_move(g, Stabilize{{c + 2, r + 2}, {Marker::O, Corner::NE}});
  const int n = g.size();
  g = apply_move(g, CyclicCol{n - 1 - (c + 1)});
  g = apply_move(g, CyclicRow{n - 1 - r});
  if (!has_x_upper_right(g) || !has_o_lower_left(g)) {
    throw GridError(ErrorKind::CornerConditionUnmet, "corner normalization failed");
  }
  return g;
}

GridDiagram align_x_upper_right(const GridDiagram& grid) {
  const int n = grid.size();
  return cyclic_rows(grid, n - 1 - grid.x_row(n - 1));
}

GridDiagram align_o_lower_left(const GridDiagram& grid) {
  return cyclic_rows(grid, -grid.o_row(0));
}

GridDiagram connect_sum(const GridDiagram& g1, const GridDiagram& g2) {
  if (!has_x_upper_right(g1)) {
    throw GridError(ErrorKind::CornerConditionUnmet, "first grid needs an X in its upper-right cell");
  }
  if (!has_o_lower_left(g2)) {
    throw GridError(ErrorKind::CornerConditionUnmet, "second grid needs an O in its lower-left cell");
  }
  const int n1 = g1.size();
  const int n2 = g2.size();
  const int shift = n1 - 1;
  std::vector<int> o(n1 + n2 - 1), x(n1 + n2 - 1);
  for (int c = 0; c < n1 - 1; ++c) {
    o[c] = g1.o_row(c);
    x[c] = g1.x_row(c);
  }
  // Shared column: g1's O survives, g2's X survives.
  o[shift] = g1.o_row(n1 - 1);
  x[shift] = g2.x_row(0) + shift;
  for (int k = 1; k < n2; ++k) {
    o[shift + k] = g2.o_row(k) + shift;
    x[shift + k] = g2.x_row(k) + shift;
  }
  return GridDiagram(std::move(o), std::move(x));
}

std::vector<GridMove> legal_moves(const GridDiagram& grid, std::span<const MoveClass> classes,
                                  int max_size) {
  auto allowed = [&](MoveClass cls) {
    return std::find(classes.begin(), classes.end(), cls) != classes.end();
  };
  const int n = grid.size();
  std::vector<GridMove> moves;
  if (allowed(MoveClass::Legendrian) || allowed(MoveClass::Topological)) {
    for (int k = 1; k < n; ++k) {
      moves.emplace_back(CyclicRow{k});
      moves.emplace_back(CyclicCol{k});
    }
    for (int i = 0; i + 1 < n; ++i) {
      if (!spans_conflict(grid.o_row(i), grid.x_row(i), grid.o_row(i + 1), grid.x_row(i + 1))) {
        moves.emplace_back(CommuteCols{i + 1});
      }
      if (!spans_conflict(grid.o_col(i), grid.x_col(i), grid.o_col(i + 1), grid.x_col(i + 1))) {
        moves.emplace_back(CommuteRows{i + 1});
      }
    }
  }
  for (StabType type : kAllStabTypes) {
    const MoveClass cls = classify_type(type);
    if (!allowed(cls) && !allowed(MoveClass::Topological)) continue;
    if (n < max_size) {
      for (int c = 0; c < n; ++c) {
        const int r = type.marker == Marker::X ? grid.x_row(c) : grid.o_row(c);
        moves.emplace_back(Stabilize{{c + 1, r + 1}, type});
      }
    }
    if (n >= 3) {
      for (int c = 0; c + 1 < n; ++c) {
        for (int r = 0; r + 1 < n; ++r) {
          if (block_matches(grid, c, r, type)) moves.emplace_back(Destabilize{{c + 1, r + 1}, type});
        }
      }
    }
  }
  return moves;
}

std::optional<GridMove> random_move(const GridDiagram& grid, std::span<const MoveClass> classes,
                                    int max_size, std::mt19937_64& rng) {
  const auto moves = legal_moves(grid, classes, max_size);
  if (moves.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
  return moves[pick(rng)];
}

}  // namespace gridhfk
