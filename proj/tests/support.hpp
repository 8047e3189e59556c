#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "gridhfk/grid.hpp"

namespace testing_support {

// Random single-component grid of size n (rejection sampling).
inline gridhfk::GridDiagram random_knot_grid(int n, std::mt19937_64& rng) {
  std::vector<int> o(n), x(n);
  for (;;) {
    std::iota(o.begin(), o.end(), 0);
    std::iota(x.begin(), x.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    std::shuffle(x.begin(), x.end(), rng);
    bool clash = false;
    for (int c = 0; c < n; ++c) clash |= o[c] == x[c];
    if (clash) continue;
    gridhfk::GridDiagram g(o, x);
    if (gridhfk::component_count(g) == 1) return g;
  }
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Maslov grading straight from the planar definition, with markers at cell
// centres (c + 1/2, r + 1/2) and points at integer coordinates.
struct PlanarPoint {
  double x;
  double y;
};

inline int count_sw(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q) {
  int k = 0;
  for (const auto& a : p) {
    for (const auto& b : q) k += a.x < b.x && a.y < b.y;
  }
  return k;
}

inline double j_form(const std::vector<PlanarPoint>& p, const std::vector<PlanarPoint>& q) {
  return (count_sw(p, q) + count_sw(q, p)) / 2.0;
}

inline double planar_maslov(const std::vector<int>& perm, const std::vector<int>& marker_rows) {
  std::vector<PlanarPoint> x, m;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    x.push_back({double(i), double(perm[i])});
    m.push_back({i + 0.5, marker_rows[i] + 0.5});
  }
  return j_form(x, x) - 2 * j_form(x, m) + j_form(m, m) + 1;
}

inline std::vector<int> rows_of(std::span<const int> s) { return {s.begin(), s.end()}; }

inline int planar_alexander(const gridhfk::GridDiagram& g, const std::vector<int>& perm) {
  const double mo = planar_maslov(perm, rows_of(g.o_rows()));
  const double mx = planar_maslov(perm, rows_of(g.x_rows()));
  return static_cast<int>((mo - mx) / 2 - (g.size() - 1) / 2.0);
}

}  // namespace testing_support
