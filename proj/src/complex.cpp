#include "gridhfk/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

PackedState pack(std::span<const int> perm) {
  PackedState s = 0;
  for (int v : perm) s = (s << 4) | static_cast<PackedState>(v);
  return s;
}

GridState unpack(PackedState state, int n) {
  GridState x;
  x.perm.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    x.perm[i] = static_cast<int>(state & 0xF);
    state >>= 4;
  }
  return x;
}

std::string to_string(const GridState& x) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < x.perm.size(); ++i) {
    out << (i ? "," : "") << '(' << i << ',' << x.perm[i] << ')';
  }
  out << '}';
  return out.str();
}

namespace {

// Doubled coordinates: lattice point (i, p) -> (2i, 2p); marker in cell
// (c, r) -> (2c + 1, 2r + 1). Strict south-west comparisons are unaffected.
bool south_west(int ax, int ay, int bx, int by) { return ax < bx && ay < by; }

int count_sw_pairs(const std::vector<std::pair<int, int>>& pts) {
  int count = 0;
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (south_west(a.first, a.second, b.first, b.second)) ++count;
    }
  }
  return count;
}

}  // namespace

GridComplex::GridComplex(GridDiagram grid) : grid_(std::move(grid)), n_(grid_.size()) {
  if (n_ > kMaxGridSize) {
    throw GridError(ErrorKind::OutOfRange, "grid size " + std::to_string(n_) + " exceeds " +
                                               std::to_string(kMaxGridSize));
  }
  const int n = n_;
  std::vector<std::pair<int, int>> os, xs;
  for (int c = 0; c < n; ++c) {
    os.emplace_back(2 * c + 1, 2 * grid_.o_row(c) + 1);
    xs.emplace_back(2 * c + 1, 2 * grid_.x_row(c) + 1);
  }
  j_oo_ = count_sw_pairs(os);
  j_xx_ = count_sw_pairs(xs);

  w_o_.assign(n * n, 0);
  w_x_.assign(n * n, 0);
  alex_w_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < n; ++p) {
      const int px = 2 * i;
      const int py = 2 * p;
      auto weight = [&](const std::vector<std::pair<int, int>>& markers) {
        int w = 0;
        for (const auto& [mx, my] : markers) {
          if (south_west(px, py, mx, my)) ++w;
          if (south_west(mx, my, px, py)) ++w;
        }
        return w;
      };
      w_o_[i * n + p] = weight(os);
      w_x_[i * n + p] = weight(xs);
      alex_w_[i * n + p] = w_x_[i * n + p] - w_o_[i * n + p];
    }
  }

  n_o_.assign(static_cast<std::size_t>(n) * n * n * n, 0);
  n_x_.assign(n_o_.size(), 0);
  for (int left = 0; left < n; ++left) {
    for (int bottom = 0; bottom < n; ++bottom) {
      for (int width = 1; width < n; ++width) {
        for (int height = 1; height < n; ++height) {
          int no = 0, nx = 0;
          for (int dc = 0; dc < width; ++dc) {
            const int c = (left + dc) % n;
            if ((grid_.o_row(c) - bottom + n) % n < height) ++no;
            if ((grid_.x_row(c) - bottom + n) % n < height) ++nx;
          }
          n_o_[index(left, width, bottom, height)] = static_cast<std::uint8_t>(no);
          n_x_[index(left, width, bottom, height)] = static_cast<std::uint8_t>(nx);
        }
      }
    }
  }
}

int GridComplex::maslov(std::span<const int> x) const {
  // M(x) = J(x,x) - 2 J(x,O) + J(O,O) + 1, with J(x,x) = #{i<j : x_i < x_j}.
  int j_xx = 0;
  int w = 0;
  for (int i = 0; i < n_; ++i) {
    w += w_o_[i * n_ + x[i]];
    for (int j = i + 1; j < n_; ++j) j_xx += x[i] < x[j];
  }
  return j_xx - w + j_oo_ + 1;
}

int GridComplex::alexander(std::span<const int> x) const {
  // A = (M_O - M_X)/2 - (n-1)/2; the J(x,x) terms cancel.
  int sum = 0;
  for (int i = 0; i < n_; ++i) sum += alex_w_[i * n_ + x[i]];
  const int twice = sum + j_oo_ - j_xx_ - (n_ - 1);
  return twice / 2;
}

Bigrading GridComplex::bigrading(std::span<const int> x) const { return {maslov(x), alexander(x)}; }

Bigrading GridComplex::bigrading(PackedState x) const { return bigrading(unpack(x, n_).perm); }

void GridComplex::tilde_targets(PackedState packed, std::vector<PackedState>& out) const {
  out.clear();
  int x[kMaxGridSize];
  {
    PackedState s = packed;
    for (int i = n_ - 1; i >= 0; --i) {
      x[i] = static_cast<int>(s & 0xF);
      s >>= 4;
    }
  }
  const int shift_base = 4 * (n_ - 1);
  for_each_empty_rectangle(std::span<const int>(x, n_), [&](int i, int j, int left, int width,
                                                            int bottom, int height) {
    const auto k = index(left, width, bottom, height);
    if (n_o_[k] != 0 || n_x_[k] != 0) return;
    const PackedState vi = static_cast<PackedState>(x[i]);
    const PackedState vj = static_cast<PackedState>(x[j]);
    const int si = shift_base - 4 * i;
    const int sj = shift_base - 4 * j;
    const PackedState y = packed ^ ((vi ^ vj) << si) ^ ((vi ^ vj) << sj);
    // Both rectangles of a pair reach the same target: they cancel mod 2.
    if (!out.empty() && out.back() == y) {
      out.pop_back();
    } else {
      out.push_back(y);
    }
  });
}

std::vector<Rectangle> GridComplex::empty_rectangles(const GridState& x) const {
  std::vector<Rectangle> rects;
  for_each_empty_rectangle(x.perm, [&](int i, int j, int left, int width, int bottom, int height) {
    Rectangle r;
    r.from = x;
    r.to = x;
    std::swap(r.to.perm[i], r.to.perm[j]);
    r.left = left;
    r.right = (left + width) % n_;
    r.bottom = bottom;
    r.top = (bottom + height) % n_;
    r.n_o = count_o(left, width, bottom, height);
    r.n_x = count_x(left, width, bottom, height);
    r.empty = true;
    for (int dc = 0; dc < width; ++dc) {
      const int c = (left + dc) % n_;
      if ((grid_.o_row(c) - bottom + n_) % n_ < height) r.o_columns.push_back(c);
    }
    rects.push_back(std::move(r));
  });
  return rects;
}

std::vector<GridState> GridComplex::differential_tilde(const GridState& x) const {
  std::vector<PackedState> targets;
  tilde_targets(pack(x.perm), targets);
  std::sort(targets.begin(), targets.end());
  std::vector<GridState> out;
  for (PackedState t : targets) out.push_back(unpack(t, n_));
  return out;
}

std::vector<MinusTerm> GridComplex::differential_minus0(const GridState& x) const {
  std::map<MinusTerm, int> sum;
  for (const Rectangle& r : empty_rectangles(x)) {
    if (r.n_x != 0) continue;
    MinusTerm t{r.to, std::vector<int>(n_, 0)};
    for (int c : r.o_columns) t.u_powers[c] += 1;
    sum[t] ^= 1;
  }
  std::vector<MinusTerm> out;
  for (auto& [term, coeff] : sum) {
    if (coeff) out.push_back(term);
  }
  return out;
}

std::pair<int, int> GridComplex::alexander_bounds() const {
  int lo = 0, hi = 0;
  for (int i = 0; i < n_; ++i) {
    const auto row = std::span<const int>(alex_w_).subspan(static_cast<std::size_t>(i) * n_, n_);
    lo += *std::min_element(row.begin(), row.end());
    hi += *std::max_element(row.begin(), row.end());
  }
  const int constant = j_oo_ - j_xx_ - (n_ - 1);
  // Twice the grading is even, so round inward.
  auto floor_half = [](int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
  return {-floor_half(-(lo + constant)), floor_half(hi + constant)};
}

void GridComplex::for_each_state(const std::function<void(PackedState, Bigrading)>& visit,
                                 const int* alexander) const {
  const int n = n_;
  // Alexander grading is a sum of per-column weights; bound the remainder by
  // per-column extremes to prune when a single grading is requested.
  const int constant = j_oo_ - j_xx_ - (n - 1);
  std::vector<int> rest_min(n + 1, 0), rest_max(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    int lo = alex_w_[i * n], hi = alex_w_[i * n];
    for (int p = 1; p < n; ++p) {
      lo = std::min(lo, alex_w_[i * n + p]);
      hi = std::max(hi, alex_w_[i * n + p]);
    }
    rest_min[i] = rest_min[i + 1] + lo;
    rest_max[i] = rest_max[i + 1] + hi;
  }
  const int target_twice = alexander ? 2 * *alexander - constant : 0;

  // Depth-first over columns carrying partial sums.
  auto recurse = [&](auto&& self, int col, std::uint32_t used, int alex_sum, int w_sum, int j_xx,
                     PackedState packed) -> void {
    if (col == n) {
      if (alexander && alex_sum != target_twice) return;
      const Bigrading g{j_xx - w_sum + j_oo_ + 1, (alex_sum + constant) / 2};
      visit(packed, g);
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (used & (1u << p)) continue;
      const int a = alex_sum + alex_w_[col * n + p];
      if (alexander && (a + rest_min[col + 1] > target_twice || a + rest_max[col + 1] < target_twice)) {
        continue;
      }
      const int below = std::popcount(used & ((1u << p) - 1));
      self(self, col + 1, used | (1u << p), a, w_sum + w_o_[col * n + p], j_xx + below,
           (packed << 4) | static_cast<PackedState>(p));
    }
  };
  recurse(recurse, 0, 0u, 0, 0, 0, 0);
}

}  // namespace gridhfk
