#include "gridhfk/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "gridhfk/error.hpp"
#include "json.hpp"

namespace gridhfk {

std::size_t EngineConfig::default_max_slice() {
  if (const char* env = std::getenv("GRIDHFK_MAX_SLICE")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 5'000'000;
}

unsigned EngineConfig::default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::size_t BigradedComplex::generator_count() const {
  std::size_t total = 0;
  for (const auto& [g, gens] : slices) total += gens.size();
  return total;
}

RankTable BigradedComplex::slice_sizes() const {
  RankTable t;
  for (const auto& [g, gens] : slices) t[g] = static_cast<long long>(gens.size());
  return t;
}

std::int64_t slice_index(const std::vector<PackedState>& slice, PackedState state) {
  auto it = std::lower_bound(slice.begin(), slice.end(), state);
  if (it == slice.end() || *it != state) return -1;
  return it - slice.begin();
}

namespace {

constexpr double kExactEnumerationLimit = 4e6;
constexpr int kSamples = 1 << 16;

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_knot(const GridDiagram& grid) {
  if (component_count(grid) != 1) {
    throw GridError(ErrorKind::MultiComponent, "grid has " + std::to_string(component_count(grid)) +
                                                   " components");
  }
}

// Generators of one Alexander grading, grouped by Maslov grading; each group
// is sorted because enumeration is lexicographic.
std::map<int, std::vector<PackedState>> fiber(const GridComplex& cx, int alexander) {
  std::map<int, std::vector<PackedState>> by_m;
  cx.for_each_state([&](PackedState x, Bigrading g) { by_m[g.maslov].push_back(x); }, &alexander);
  return by_m;
}

F2Column boundary_column(const GridComplex& cx, PackedState x, const std::vector<PackedState>& target,
                         std::vector<PackedState>& scratch) {
  cx.tilde_targets(x, scratch);
  F2Column col;
  col.reserve(scratch.size());
  for (PackedState y : scratch) {
    const auto idx = slice_index(target, y);
    if (idx < 0) throw std::logic_error("tilde differential left its bigrading");
    col.push_back(static_cast<std::uint32_t>(idx));
  }
  std::sort(col.begin(), col.end());
  return col;
}

// Ranks of the tilde homology in one Alexander grading, Maslov descending,
// with clearing: a column whose index is a pivot row of the previous block
// reduces to zero and is skipped.
RankTable fiber_homology(const GridComplex& cx, int alexander, RankTable& counts) {
  RankTable ranks;
  const auto by_m = fiber(cx, alexander);
  if (by_m.empty()) return ranks;
  std::vector<PackedState> scratch;
  std::vector<bool> cleared;
  std::size_t rank_above = 0;
  for (auto it = by_m.rbegin(); it != by_m.rend(); ++it) {
    const int m = it->first;
    const auto& gens = it->second;
    counts[{m, alexander}] = static_cast<long long>(gens.size());
    std::size_t rank_here = 0;
    std::vector<bool> next_cleared;
    auto below = by_m.find(m - 1);
    if (below != by_m.end()) {
      const auto& target = below->second;
      F2ColumnReducer reducer(static_cast<std::uint32_t>(target.size()), false);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!cleared.empty() && cleared[j]) continue;
        reducer.add_column(boundary_column(cx, gens[j], target, scratch), static_cast<std::uint32_t>(j));
      }
      rank_here = reducer.rank();
      next_cleared.assign(target.size(), false);
      for (std::size_t r = 0; r < target.size(); ++r) {
        next_cleared[r] = reducer.is_pivot_row(static_cast<std::uint32_t>(r));
      }
    }
    const long long h = static_cast<long long>(gens.size()) - static_cast<long long>(rank_here) -
                        static_cast<long long>(rank_above);
    if (h != 0) ranks[{m, alexander}] = h;
    rank_above = rank_here;
    // Non-adjacent Maslov gradings have no differential between them.
    if (std::next(it) != by_m.rend() && std::next(it)->first == m - 1) {
      cleared = std::move(next_cleared);
    } else {
      cleared.clear();
      rank_above = 0;
    }
  }
  return ranks;
}

}  // namespace

BigradedComplex build_tilde_complex(const GridComplex& cx, std::optional<int> alexander) {
  BigradedComplex out;
  out.grid_size = cx.size();
  if (alexander) {
    for (auto& [m, gens] : fiber(cx, *alexander)) out.slices[{m, *alexander}] = std::move(gens);
  } else {
    cx.for_each_state([&](PackedState x, Bigrading g) { out.slices[g].push_back(x); });
  }
  std::vector<PackedState> scratch;
  for (const auto& [g, gens] : out.slices) {
    static const std::vector<PackedState> kEmpty;
    auto below = out.slices.find({g.maslov - 1, g.alexander});
    const auto& target = below == out.slices.end() ? kEmpty : below->second;
    SparseF2Matrix m(static_cast<std::uint32_t>(target.size()), static_cast<std::uint32_t>(gens.size()));
    if (!target.empty()) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        m.set_column(static_cast<std::uint32_t>(j), boundary_column(cx, gens[j], target, scratch));
      }
    }
    out.boundaries.emplace(g, std::move(m));
  }
  return out;
}

RankTable estimate_slice_sizes(const GridComplex& cx, std::optional<int> alexander) {
  RankTable sizes;
  const int n = cx.size();
  const double total = factorial(n);
  if (total <= kExactEnumerationLimit) {
    const int* a = alexander ? &*alexander : nullptr;
    cx.for_each_state([&](PackedState, Bigrading g) { ++sizes[g]; }, a);
    return sizes;
  }
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<int> perm(n);
  RankTable hits;
  for (int s = 0; s < kSamples; ++s) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Bigrading g = cx.bigrading(perm);
    if (alexander && g.alexander != *alexander) continue;
    ++hits[g];
  }
  for (const auto& [g, c] : hits) sizes[g] = static_cast<long long>(c * (total / kSamples));
  return sizes;
}

void check_budget(const GridComplex& cx, const EngineConfig& config, std::optional<int> alexander) {
  if (config.force) return;
  const auto sizes = estimate_slice_sizes(cx, alexander);
  for (const auto& [g, count] : sizes) {
    if (static_cast<std::size_t>(count) > config.max_slice) {
      throw GridError(ErrorKind::BudgetExceeded,
                      "slice (" + std::to_string(g.maslov) + "," + std::to_string(g.alexander) + ") has ~" +
                          std::to_string(count) + " generators, cap " + std::to_string(config.max_slice) +
                          " (use --force or GRIDHFK_MAX_SLICE)");
    }
  }
}

HomologyReport tilde_homology(const GridDiagram& grid, const EngineConfig& config) {
  require_knot(grid);
  const GridComplex cx(grid);
  check_budget(cx, config);

  const auto [a_lo, a_hi] = cx.alexander_bounds();
  const int fibers = a_hi - a_lo + 1;
  std::vector<RankTable> ranks(fibers), counts(fibers);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k < fibers; k = next++) ranks[k] = fiber_homology(cx, a_lo + k, counts[k]);
  };
  const unsigned threads = std::clamp<unsigned>(config.threads, 1u, static_cast<unsigned>(fibers));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  HomologyReport report;
  report.grid_size = grid.size();
  for (int k = 0; k < fibers; ++k) {
    report.tilde_ranks.insert(ranks[k].begin(), ranks[k].end());
    report.generator_counts.insert(counts[k].begin(), counts[k].end());
  }
  report.hat_ranks = divide_by_v(report.tilde_ranks, grid.size() - 1);

  LaurentF2 gen;
  for (const auto& [g, c] : report.generator_counts) {
    if (c % 2) gen.toggle(g.alexander);
  }
  auto delta = gen.divide_by_one_plus_inverse(grid.size() - 1);
  if (!delta) throw GridError(ErrorKind::DivisionInexact, "generator polynomial not divisible");
  if (!delta->is_symmetric()) throw GridError(ErrorKind::AsymmetricResult, delta->to_string());
  report.alexander_mod2 = *delta;
  return report;
}

std::string to_json(const HomologyReport& report, bool hat_flavor) {
  const RankTable& table = hat_flavor ? report.hat_ranks : report.tilde_ranks;
  nlohmann::json ranks = nlohmann::json::array();
  for (const auto& [g, r] : table) ranks.push_back({g.maslov, g.alexander, r});
  nlohmann::json j;
  j["ranks"] = ranks;
  j["poincare"] = format_poincare(table);
  j["alexander_mod2"] = report.alexander_mod2.to_string();
  j["hat_poincare"] = report.hat_poincare();
  return j.dump();
}

LaurentF2 generator_polynomial_mod2(const GridComplex& cx) {
  std::map<int, bool> odd;
  cx.for_each_state([&](PackedState, Bigrading g) { odd[g.alexander] = !odd[g.alexander]; });
  LaurentF2 p;
  for (const auto& [a, o] : odd) {
    if (o) p.toggle(a);
  }
  return p;
}

LaurentF2 alexander_polynomial(const GridDiagram& grid) {
  const GridComplex cx(grid);
  auto delta = generator_polynomial_mod2(cx).divide_by_one_plus_inverse(grid.size() - 1);
  if (!delta) throw GridError(ErrorKind::DivisionInexact, "generator polynomial not divisible");
  if (!delta->is_symmetric()) throw GridError(ErrorKind::AsymmetricResult, delta->to_string());
  return *delta;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Vanishes:
      return "Vanishes";
    case Verdict::Survives:
      return "Survives";
    case Verdict::NoPreimageUpToCap:
      return "NoPreimageUpToCap";
    case Verdict::NotRun:
      return "NotRun";
  }
  return "?";
}

namespace {

// Generators of the chain, each once (pairs cancel), sorted.
std::vector<PackedState> reduce_chain(const GridComplex& cx, const std::vector<GridState>& chain) {
  std::vector<PackedState> packed;
  for (const auto& x : chain) {
    if (static_cast<int>(x.perm.size()) != cx.size()) {
      throw GridError(ErrorKind::DimensionMismatch, "state size differs from grid size");
    }
    packed.push_back(pack(x.perm));
  }
  std::sort(packed.begin(), packed.end());
  std::vector<PackedState> out;
  for (std::size_t i = 0; i < packed.size();) {
    std::size_t j = i;
    while (j < packed.size() && packed[j] == packed[i]) ++j;
    if ((j - i) % 2) out.push_back(packed[i]);
    i = j;
  }
  return out;
}

std::vector<PackedState> tilde_boundary(const GridComplex& cx, const std::vector<PackedState>& chain) {
  std::vector<PackedState> all, scratch;
  for (PackedState x : chain) {
    cx.tilde_targets(x, scratch);
    all.insert(all.end(), scratch.begin(), scratch.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<PackedState> out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if ((j - i) % 2) out.push_back(all[i]);
    i = j;
  }
  return out;
}

Bigrading homogeneous_grading(const GridComplex& cx, const std::vector<PackedState>& chain) {
  const Bigrading g = cx.bigrading(chain.front());
  for (PackedState x : chain) {
    if (cx.bigrading(x) != g) throw GridError(ErrorKind::NotACycle, "chain is not homogeneous");
  }
  return g;
}

VanishingResult tilde_vanishes(const GridComplex& cx, const std::vector<PackedState>& chain,
                               const EngineConfig& config) {
  VanishingResult result;
  result.flavor = Flavor::Tilde;
  if (!tilde_boundary(cx, chain).empty()) throw GridError(ErrorKind::NotACycle, "tilde boundary is nonzero");
  if (chain.empty()) {
    result.verdict = Verdict::Vanishes;
    return result;
  }
  const Bigrading g = homogeneous_grading(cx, chain);
  check_budget(cx, config, g.alexander);
  auto by_m = fiber(cx, g.alexander);
  const auto& here = by_m[g.maslov];
  const auto& above = by_m[g.maslov + 1];

  F2ColumnReducer reducer(static_cast<std::uint32_t>(here.size()), true);
  std::vector<PackedState> scratch;
  for (std::size_t j = 0; j < above.size(); ++j) {
    reducer.add_column(boundary_column(cx, above[j], here, scratch), static_cast<std::uint32_t>(j));
  }
  F2Column v;
  for (PackedState x : chain) v.push_back(static_cast<std::uint32_t>(slice_index(here, x)));
  std::sort(v.begin(), v.end());
  F2Column combination;
  if (!reducer.reduce(v, &combination)) {
    result.verdict = Verdict::Survives;
    return result;
  }
  std::vector<PackedState> pre;
  for (auto id : combination) pre.push_back(above[id]);
  std::sort(pre.begin(), pre.end());
  if (tilde_boundary(cx, pre) != chain) throw std::logic_error("preimage check failed");
  for (PackedState y : pre) result.preimage.push_back(unpack(y, cx.size()));
  result.verdict = Verdict::Vanishes;
  return result;
}

using Monomial = std::uint64_t;  // four bits per U variable, U_0 least significant

void monomials_of_degree(int n, int degree, int var, Monomial current, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(current);
    return;
  }
  if (var == n) return;
  for (int e = degree; e >= 0; --e) {
    monomials_of_degree(n, degree - e, var + 1, current + (static_cast<Monomial>(e) << (4 * var)), out);
  }
}

double binomial(int n, int k) {
  double b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

struct PairHash {
  std::size_t operator()(const std::pair<PackedState, Monomial>& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
  }
};

VanishingResult minus_vanishes(const GridComplex& cx, const std::vector<PackedState>& chain,
                               const EngineConfig& config) {
  VanishingResult result;
  result.flavor = Flavor::Minus0;
  const int n = cx.size();
  {
    std::map<MinusTerm, int> sum;
    for (PackedState x : chain) {
      for (auto& t : cx.differential_minus0(unpack(x, n))) sum[t] ^= 1;
    }
    for (const auto& [t, c] : sum) {
      if (c) throw GridError(ErrorKind::NotACycle, "minus boundary is nonzero");
    }
  }
  if (chain.empty()) {
    result.verdict = Verdict::Vanishes;
    result.exhaustive = true;
    return result;
  }
  const Bigrading g = homogeneous_grading(cx, chain);
  const int needed = cx.alexander_bounds().second - g.alexander;
  int cap = std::clamp(config.minus_degree_cap, 0, 14);
  cap = std::min(cap, std::max(needed, 0));

  // Unknowns U^a y with M(y) = M + 1 + 2|a| and A(y) = A + |a|.
  std::vector<std::vector<PackedState>> sources;
  std::size_t unknowns = 0;
  int used_cap = -1;
  for (int d = 0; d <= cap; ++d) {
    check_budget(cx, config, g.alexander + d);
    auto by_m = fiber(cx, g.alexander + d);
    auto& gens = by_m[g.maslov + 1 + 2 * d];
    const double count = static_cast<double>(gens.size()) * binomial(n + d - 1, d);
    if (static_cast<double>(unknowns) + count > static_cast<double>(config.minus_unknown_cap)) break;
    unknowns += static_cast<std::size_t>(count);
    sources.push_back(std::move(gens));
    used_cap = d;
  }
  result.degree_cap = std::max(used_cap, 0);
  result.unknowns = unknowns;
  result.exhaustive = used_cap >= needed;

  std::unordered_map<std::pair<PackedState, Monomial>, std::uint32_t, PairHash> rows;
  auto row_of = [&](PackedState z, Monomial b) {
    auto [it, inserted] = rows.try_emplace({z, b}, static_cast<std::uint32_t>(rows.size()));
    return it->second;
  };
  std::vector<F2Column> columns;
  for (int d = 0; d <= used_cap; ++d) {
    std::vector<Monomial> monos;
    monomials_of_degree(n, d, 0, 0, monos);
    for (PackedState y : sources[d]) {
      const auto terms = cx.differential_minus0(unpack(y, n));
      for (Monomial a : monos) {
        F2Column col;
        for (const auto& t : terms) {
          Monomial b = a;
          for (int v = 0; v < n; ++v) b += static_cast<Monomial>(t.u_powers[v]) << (4 * v);
          col.push_back(row_of(pack(t.target.perm), b));
        }
        std::sort(col.begin(), col.end());
        columns.push_back(std::move(col));
      }
    }
  }
  F2Column target;
  for (PackedState x : chain) target.push_back(row_of(x, 0));
  std::sort(target.begin(), target.end());

  F2ColumnReducer reducer(static_cast<std::uint32_t>(rows.size()), false);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    reducer.add_column(std::move(columns[j]), static_cast<std::uint32_t>(j));
  }
  if (reducer.reduce(target, nullptr)) {
    result.verdict = Verdict::Vanishes;
  } else {
    result.verdict = result.exhaustive ? Verdict::Survives : Verdict::NoPreimageUpToCap;
  }
  return result;
}

}  // namespace

VanishingResult class_vanishes(const GridComplex& cx, const std::vector<GridState>& cycle, Flavor flavor,
                               const EngineConfig& config) {
  const auto chain = reduce_chain(cx, cycle);
  return flavor == Flavor::Tilde ? tilde_vanishes(cx, chain, config) : minus_vanishes(cx, chain, config);
}

}  // namespace gridhfk
