#include "gridhfk/grid.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::MarkerCollision: return "MarkerCollision";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::IllegalCommutation: return "IllegalCommutation";
    case ErrorKind::NoSuchPattern: return "NoSuchPattern";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CornerConditionUnmet: return "CornerConditionUnmet";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DivisionInexact: return "DivisionInexact";
    case ErrorKind::AsymmetricResult: return "AsymmetricResult";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::SlMismatch: return "SlMismatch";
  }
  return "Error";
}

namespace {

std::vector<int> invert(const std::vector<int>& perm, const char* name) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = perm[i];
    if (v < 0 || v >= n) {
      throw GridError(ErrorKind::NotPermutation,
                      std::string(name) + " entry " + std::to_string(v + 1) + " outside 1.." +
                          std::to_string(n));
    }
    if (inv[v] != -1) {
      throw GridError(ErrorKind::NotPermutation,
                      std::string(name) + " repeats row " + std::to_string(v + 1));
    }
    inv[v] = i;
  }
  return inv;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw GridError(ErrorKind::Parse, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::string_view expect_key(std::string_view line, std::string_view key) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos || trim(line.substr(0, eq)) != key) {
    throw GridError(ErrorKind::Parse,
                    "expected '" + std::string(key) + "=...', got '" + std::string(line) + "'");
  }
  return line.substr(eq + 1);
}

std::vector<int> parse_list(std::string_view s) {
  std::vector<int> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> o_rows, std::vector<int> x_rows)
    : o_(std::move(o_rows)), x_(std::move(x_rows)) {
  if (o_.size() != x_.size()) {
    throw GridError(ErrorKind::SizeMismatch, "O and X lists differ in length");
  }
  if (o_.size() < 2) {
    throw GridError(ErrorKind::SizeMismatch, "grid size must be at least 2");
  }
  o_inv_ = invert(o_, "O");
  x_inv_ = invert(x_, "X");
  for (int c = 0; c < size(); ++c) {
    if (o_[c] == x_[c]) {
      throw GridError(ErrorKind::MarkerCollision,
                      "column " + std::to_string(c + 1) + " has X and O in row " +
                          std::to_string(o_[c] + 1));
    }
  }
}

GridDiagram GridDiagram::from_one_based(std::span<const int> sigma_o, std::span<const int> sigma_x) {
  std::vector<int> o(sigma_o.begin(), sigma_o.end());
  std::vector<int> x(sigma_x.begin(), sigma_x.end());
  for (int& v : o) --v;
  for (int& v : x) --v;
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram parse_grid(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto cut = text.find_first_of("\n;");
    std::string_view line = trim(text.substr(0, cut));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  if (lines.size() != 3) {
    throw GridError(ErrorKind::Parse, "expected lines n=, O=, X= (got " +
                                          std::to_string(lines.size()) + " data lines)");
  }
  const int n = parse_int(expect_key(lines[0], "n"));
  const auto o = parse_list(expect_key(lines[1], "O"));
  const auto x = parse_list(expect_key(lines[2], "X"));
  if (n < 2) throw GridError(ErrorKind::SizeMismatch, "grid size must be at least 2");
  if (static_cast<int>(o.size()) != n || static_cast<int>(x.size()) != n) {
    throw GridError(ErrorKind::SizeMismatch, "n=" + std::to_string(n) + " but O has " +
                                                 std::to_string(o.size()) + " and X has " +
                                                 std::to_string(x.size()) + " entries");
  }
  return GridDiagram::from_one_based(o, x);
}

std::string format_grid(const GridDiagram& grid) {
  std::ostringstream out;
  auto list = [&](std::span<const int> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "," : "") << rows[i] + 1;
  };
  out << "n=" << grid.size() << "\nO=";
  list(grid.o_rows());
  out << "\nX=";
  list(grid.x_rows());
  out << '\n';
  return out.str();
}

std::string render_ascii(const GridDiagram& grid) {
  std::string out;
  const int n = grid.size();
  for (int row = n - 1; row >= 0; --row) {
    for (int col = 0; col < n; ++col) {
      out += grid.has_o(col, row) ? 'O' : grid.has_x(col, row) ? 'X' : '.';
    }
    out += '\n';
  }
  return out;
}

int component_count(const GridDiagram& grid) {
  const int n = grid.size();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    // column -> row of its O -> column of the X in that row
    for (int c = start; !seen[c]; c = grid.x_col(grid.o_row(c))) seen[c] = true;
  }
  return cycles;
}

GridDiagram transpose(const GridDiagram& grid) {
  const int n = grid.size();
  std::vector<int> o(n), x(n);
  for (int row = 0; row < n; ++row) {
    o[row] = grid.o_col(row);
    x[row] = grid.x_col(row);
  }
  return GridDiagram(std::move(o), std::move(x));
}

int FrontDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

int FrontDiagram::up_cusps() const {
  return static_cast<int>(std::count_if(cusps.begin(), cusps.end(), [](const Cusp& c) {
    return c.direction == CuspDirection::Up;
  }));
}

int FrontDiagram::down_cusps() const {
  return static_cast<int>(cusps.size()) - up_cusps();
}

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

struct Dir {
  int dx = 0;
  int dy = 0;
};

// Corner at a marker, given the travel direction into and out of it. After a
// 45 degree clockwise turn the corners whose arms point {N,E} or {S,W} become
// the leftmost/rightmost points of the front, i.e. cusps. A cusp is traversed
// downward exactly when it is entered moving south or east.
void classify_corner(const Cell& at, Dir in, Dir out, std::vector<Cusp>& cusps) {
  const int arm_x = -in.dx + out.dx;
  const int arm_y = -in.dy + out.dy;
  if (arm_x != arm_y) return;
  const bool down = in.dy < 0 || in.dx > 0;
  cusps.push_back({at, down ? CuspDirection::Down : CuspDirection::Up});
}

}  // namespace

FrontDiagram front_projection(const GridDiagram& grid) {
  if (component_count(grid) != 1) {
    throw GridError(ErrorKind::MultiComponent, "front projection needs a knot");
  }
  const int n = grid.size();
  FrontDiagram front;

  // Traverse O -> X along rows and X -> O along columns.
  int col = 0;
  do {
    const int row = grid.o_row(col);
    const int x_col = grid.x_col(row);
    const int next_row = grid.o_row(x_col);

    const Dir into_o{0, sign(row - grid.x_row(col))};
    const Dir along_row{sign(x_col - col), 0};
    const Dir along_col{0, sign(next_row - row)};

    front.path.push_back({col + 1, row + 1});
    classify_corner({col + 1, row + 1}, into_o, along_row, front.cusps);
    front.path.push_back({x_col + 1, row + 1});
    classify_corner({x_col + 1, row + 1}, along_row, along_col, front.cusps);
    col = x_col;
  } while (col != 0);

  // Vertical strand over in the grid projection; the front of the mirror
  // reverses every crossing, so its sign is the product of the directions.
  for (int c = 0; c < n; ++c) {
    const int lo = std::min(grid.o_row(c), grid.x_row(c));
    const int hi = std::max(grid.o_row(c), grid.x_row(c));
    const int v = sign(grid.o_row(c) - grid.x_row(c));
    for (int r = lo + 1; r < hi; ++r) {
      const int left = std::min(grid.o_col(r), grid.x_col(r));
      const int right = std::max(grid.o_col(r), grid.x_col(r));
      if (c <= left || c >= right) continue;
      const int h = sign(grid.x_col(r) - grid.o_col(r));
      front.crossings.push_back({{c + 1, r + 1}, v * h});
    }
  }
  return front;
}

ClassicalInvariants classical_invariants(const GridDiagram& grid) {
  const FrontDiagram front = front_projection(grid);
  ClassicalInvariants inv;
  inv.tb = front.writhe() - static_cast<int>(front.cusps.size()) / 2;
  inv.r = (front.down_cusps() - front.up_cusps()) / 2;
  inv.sl_plus = inv.tb - inv.r;
  inv.sl_minus = inv.tb + inv.r;
  return inv;
}

}  // namespace gridhfk
