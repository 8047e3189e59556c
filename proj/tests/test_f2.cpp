#include "doctest.h"

#include <random>

#include "gridhfk/error.hpp"
#include "gridhfk/f2.hpp"

using namespace gridhfk;

namespace {

using Dense = std::vector<std::vector<std::uint8_t>>;  // [row][col]

std::size_t dense_rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !a[p][c]) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && a[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) a[r][k] ^= a[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

SparseF2Matrix random_matrix(std::uint32_t rows, std::uint32_t cols, double density, std::mt19937_64& rng,
                             Dense& dense) {
  std::bernoulli_distribution bit(density);
  dense.assign(rows, std::vector<std::uint8_t>(cols, 0));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (bit(rng)) {
        dense[r][c] = 1;
        entries.emplace_back(r, c);
      }
    }
  }
  std::shuffle(entries.begin(), entries.end(), rng);
  return SparseF2Matrix::from_entries(rows, cols, entries);
}

}  // namespace

TEST_CASE("rank of [[1,1],[1,1]] is 1") {
  const auto m = SparseF2Matrix::from_entries(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(f2_rank(m) == 1);
}

TEST_CASE("identity solve returns b") {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < 5; ++i) e.emplace_back(i, i);
  const auto id = SparseF2Matrix::from_entries(5, 5, e);
  const F2Vector b{1, 0, 1, 1, 0};
  const auto x = f2_solve(id, b);
  REQUIRE(x);
  CHECK(*x == b);
}

TEST_CASE("repeated entries cancel; out of range is rejected") {
  const auto m = SparseF2Matrix::from_entries(3, 3, {{0, 0}, {0, 0}, {1, 2}});
  CHECK(m.nonzeros() == 1);
  CHECK(m.get(1, 2));
  CHECK_FALSE(m.get(0, 0));
  CHECK_THROWS_AS(SparseF2Matrix::from_entries(2, 2, {{2, 0}}), GridError);
  CHECK_THROWS_AS(f2_solve(m, F2Vector{1, 0}), GridError);
}

TEST_CASE("coordinate text is 1-based") {
  const auto m = SparseF2Matrix::from_entries(2, 3, {{0, 2}, {1, 0}});
  CHECK(m.to_coordinate_text() == "2 1\n1 3\n");
}

TEST_CASE("random 50x60 matrices of density 0.1 against dense elimination") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    Dense d;
    const auto m = random_matrix(50, 60, 0.1, rng, d);
    CHECK(f2_rank(m) == dense_rank(d));
    CHECK(f2_rank(m) == f2_rank(m.transpose()));
  }
}

TEST_CASE("solve: preimages verify, and none only outside the span") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    Dense d;
    const std::uint32_t rows = 1 + rng() % 40;
    const std::uint32_t cols = 1 + rng() % 40;
    const auto m = random_matrix(rows, cols, 0.08, rng, d);
    F2Vector b(rows);
    for (auto& v : b) v = rng() & 1;
    const auto x = f2_solve(m, b);
    // b is in the span iff appending it keeps the rank.
    Dense aug = d;
    for (std::uint32_t r = 0; r < rows; ++r) aug[r].push_back(b[r]);
    const bool in_span = dense_rank(aug) == dense_rank(d);
    CHECK(x.has_value() == in_span);
    if (x) CHECK(m.multiply(*x) == b);
  }
}

TEST_CASE("matrix product and transpose") {
  std::mt19937_64 rng(79);
  Dense a, b;
  const auto ma = random_matrix(7, 9, 0.3, rng, a);
  const auto mb = random_matrix(9, 5, 0.3, rng, b);
  const auto p = ma.multiply(mb);
  for (std::uint32_t r = 0; r < 7; ++r) {
    for (std::uint32_t c = 0; c < 5; ++c) {
      int s = 0;
      for (int k = 0; k < 9; ++k) s ^= a[r][k] & b[k][c];
      CHECK(p.get(r, c) == (s == 1));
      CHECK(p.transpose().get(c, r) == p.get(r, c));
    }
  }
}
