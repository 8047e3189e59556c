#include "doctest.h"

#include <array>

#include "gridhfk/complex.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/moves.hpp"
#include "support.hpp"

using namespace gridhfk;

namespace {

ErrorKind kind_of(const char* text) {
  try {
    parse_grid(text);
  } catch (const GridError& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::Parse;
}

// tb and r read off the Maslov gradings of x+ and x-, which come from the
// lattice formulas and share no code with the front.
std::pair<int, int> tb_r_from_gradings(const GridDiagram& g) {
  const GridComplex cx(g);
  const int mp = cx.maslov(x_plus(g).perm);
  const int mm = cx.maslov(x_minus(g).perm);
  return {(mp + mm) / 2 - 1, (mm - mp) / 2};
}

}  // namespace

TEST_CASE("parse: semicolon form of the 2x2 unknot") {
  const auto g = parse_grid("n=2; O=1,2; X=2,1");
  CHECK(g.size() == 2);
  CHECK(g.o_row(0) == 0);
  CHECK(g.o_row(1) == 1);
  CHECK(g.x_row(0) == 1);
  CHECK(g.x_row(1) == 0);
}

TEST_CASE("parse: errors") {
  CHECK(kind_of("n=2; O=1,2; X=1,2") == ErrorKind::MarkerCollision);
  CHECK(kind_of("n=3; O=1,2; X=2,1") == ErrorKind::SizeMismatch);
  CHECK(kind_of("n=3; O=1,1,2; X=2,3,1") == ErrorKind::NotPermutation);
  CHECK(kind_of("n=2; O=1,2") == ErrorKind::Parse);
  CHECK(kind_of("n=2; O=1,x; X=2,1") == ErrorKind::Parse);
  CHECK(kind_of("n=1; O=1; X=1") == ErrorKind::SizeMismatch);
}

TEST_CASE("parse: comments, and format round trip") {
  const auto g = parse_grid("# shift grid\nn=5\nO=1,2,3,4,5\n# x row\nX=3,4,5,1,2\n");
  CHECK(format_grid(g) == "n=5\nO=1,2,3,4,5\nX=3,4,5,1,2\n");
  CHECK(parse_grid(format_grid(g)) == g);
}

TEST_CASE("render_ascii puts the top row first") {
  CHECK(render_ascii(parse_grid("n=2; O=1,2; X=2,1")) == "XO\nOX\n");
}

TEST_CASE("component_count examples") {
  CHECK(component_count(parse_grid("n=2; O=1,2; X=2,1")) == 1);
  CHECK(component_count(parse_grid("n=4; O=1,2,3,4; X=2,1,4,3")) == 2);
  CHECK(component_count(parse_grid("n=5; O=1,2,3,4,5; X=3,4,5,1,2")) == 1);
}

TEST_CASE("property: cyclic permutations keep the component count") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<int> o, x;
    do {
      o = testing_support::random_perm(n, rng);
      x = testing_support::random_perm(n, rng);
    } while ([&] {
      for (int c = 0; c < n; ++c)
        if (o[c] == x[c]) return true;
      return false;
    }());
    const GridDiagram g(o, x);
    const int k = static_cast<int>(rng() % n);
    CHECK(component_count(apply_move(g, CyclicRow{k})) == component_count(g));
    CHECK(component_count(apply_move(g, CyclicCol{k})) == component_count(g));
    CHECK(component_count(transpose(g)) == component_count(g));
  }
}

TEST_CASE("front: 2x2 unknot has no crossings and one cusp of each kind") {
  const auto f = front_projection(parse_grid("n=2; O=1,2; X=2,1"));
  CHECK(f.crossings.empty());
  CHECK(f.cusps.size() == 2);
  CHECK(f.up_cusps() == 1);
  CHECK(f.down_cusps() == 1);
  CHECK(f.path.size() == 4);
}

TEST_CASE("front: shift-2 grid has 3 crossings") {
  const auto f = front_projection(parse_grid("n=5; O=1,2,3,4,5; X=3,4,5,1,2"));
  CHECK(f.crossings.size() == 3);
}

TEST_CASE("front: multi-component grids are rejected") {
  CHECK_THROWS_AS(front_projection(parse_grid("n=4; O=1,2,3,4; X=2,1,4,3")), GridError);
  CHECK_THROWS_AS(classical_invariants(parse_grid("n=4; O=1,2,3,4; X=2,1,4,3")), GridError);
}

TEST_CASE("property: crossing count equals brute-force segment intersections, cusp count even") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto g = testing_support::random_knot_grid(n, rng);
    const auto f = front_projection(g);
    CHECK(f.cusps.size() % 2 == 0);
    int brute = 0;
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        // vertical segment of column c through the centre of row r, and the
        // horizontal segment of row r through the centre of column c
        const bool v = std::min(g.o_row(c), g.x_row(c)) < r && r < std::max(g.o_row(c), g.x_row(c));
        const bool h = std::min(g.o_col(r), g.x_col(r)) < c && c < std::max(g.o_col(r), g.x_col(r));
        brute += v && h;
      }
    }
    CHECK(static_cast<int>(f.crossings.size()) == brute);
  }
}

TEST_CASE("classical invariants: unknot and shift grids") {
  const auto u = classical_invariants(parse_grid("n=2; O=1,2; X=2,1"));
  CHECK(u.tb == -1);
  CHECK(u.r == 0);
  CHECK(u.sl_plus == -1);
  CHECK(u.sl_minus == -1);
  const auto t = classical_invariants(parse_grid("n=5; O=1,2,3,4,5; X=3,4,5,1,2"));
  CHECK(t.tb == 1);
  CHECK(t.r == 0);
}

TEST_CASE("property: front invariants agree with the grading oracle on random grids") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto g = testing_support::random_knot_grid(n, rng);
    const auto ci = classical_invariants(g);
    const auto [tb, r] = tb_r_from_gradings(g);
    CHECK(ci.tb == tb);
    CHECK(ci.r == r);
    CHECK(ci.sl_plus == ci.tb - ci.r);
    CHECK(ci.sl_minus == ci.tb + ci.r);
  }
}

TEST_CASE("property: Legendrian moves keep the classical invariants") {
  std::mt19937_64 rng(17);
  constexpr std::array classes{MoveClass::Legendrian};
  for (int t = 0; t < 150; ++t) {
    const auto g = testing_support::random_knot_grid(3 + static_cast<int>(rng() % 5), rng);
    const auto base = classical_invariants(g);
    GridDiagram cur = g;
    for (int k = 0; k < 6; ++k) {
      auto m = random_move(cur, classes, g.size() + 2, rng);
      if (!m) break;
      cur = apply_move(cur, *m);
      CHECK(classical_invariants(cur) == base);
    }
  }
}

TEST_CASE("property: negative stabilizations lower tb and r by one") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const auto g = testing_support::random_knot_grid(2 + static_cast<int>(rng() % 6), rng);
    const auto base = classical_invariants(g);
    const int c = static_cast<int>(rng() % g.size());
    for (StabType type : {StabType{Marker::X, Corner::NE}, StabType{Marker::O, Corner::SW}}) {
      const int r = type.marker == Marker::X ? g.x_row(c) : g.o_row(c);
      const auto s = classical_invariants(apply_move(g, Stabilize{{c + 1, r + 1}, type}));
      CHECK(s.tb == base.tb - 1);
      CHECK(s.r == base.r - 1);
      CHECK(s.sl_plus == base.sl_plus);
    }
  }
}

TEST_CASE("transpose is an involution") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing_support::random_knot_grid(2 + static_cast<int>(rng() % 7), rng);
    CHECK(transpose(transpose(g)) == g);
  }
}
