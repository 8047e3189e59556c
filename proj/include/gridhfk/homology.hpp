#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/f2.hpp"
#include "gridhfk/poly.hpp"

namespace gridhfk {

struct EngineConfig {
  std::size_t max_slice = default_max_slice();
  bool force = false;
  unsigned threads = default_threads();
  // Total U-degree searched by the bounded minus-flavor oracle, and the
  // largest number of (generator, monomial) unknowns it may set up.
  int minus_degree_cap = 2;
  std::size_t minus_unknown_cap = 2'000'000;

  // GRIDHFK_MAX_SLICE when set, else 5e6 generators.
  static std::size_t default_max_slice();
  static unsigned default_threads();
};

// Generators bucketed by bigrading, with tilde boundary blocks from (M, A)
// to (M - 1, A). Row/column order is the sorted order of each slice.
struct BigradedComplex {
  int grid_size = 0;
  std::map<Bigrading, std::vector<PackedState>> slices;
  std::map<Bigrading, SparseF2Matrix> boundaries;

  std::size_t generator_count() const;
  RankTable slice_sizes() const;
};

// Builds the full tilde complex, or only the slices of one Alexander grading.
BigradedComplex build_tilde_complex(const GridComplex& cx, std::optional<int> alexander = {});

// Index of `state` in a sorted slice, or -1.
std::int64_t slice_index(const std::vector<PackedState>& slice, PackedState state);

// Generator counts per bigrading: exact when n! is small, otherwise a
// sampled estimate scaled to n!. With `alexander` set, only that fiber.
RankTable estimate_slice_sizes(const GridComplex& cx, std::optional<int> alexander = {});

// Throws BudgetExceeded when a slice (estimated) exceeds the configured cap,
// unless `force` is set.
void check_budget(const GridComplex& cx, const EngineConfig& config, std::optional<int> alexander = {});

struct HomologyReport {
  int grid_size = 0;
  RankTable generator_counts;
  RankTable tilde_ranks;
  RankTable hat_ranks;
  LaurentF2 alexander_mod2;

  std::string poincare() const { return format_poincare(tilde_ranks); }
  std::string hat_poincare() const { return format_poincare(hat_ranks); }
};

HomologyReport tilde_homology(const GridDiagram& grid, const EngineConfig& config = {});

// {"alexander_mod2", "hat_poincare", "poincare", "ranks"}; ranks and
// poincare follow the requested flavor.
std::string to_json(const HomologyReport& report, bool hat_flavor);

// Sum over generators of T^A (mod 2), divided exactly by (1 + T^-1)^(n-1).
LaurentF2 alexander_polynomial(const GridDiagram& grid);
LaurentF2 generator_polynomial_mod2(const GridComplex& cx);

enum class Verdict { Vanishes, Survives, NoPreimageUpToCap, NotRun };
const char* to_string(Verdict verdict);

struct VanishingResult {
  Verdict verdict = Verdict::NotRun;
  Flavor flavor = Flavor::Tilde;
  // Tilde flavor: a chain whose boundary is the cycle, when it vanishes.
  std::vector<GridState> preimage;
  // Minus flavor bookkeeping.
  int degree_cap = 0;
  bool exhaustive = false;
  std::size_t unknowns = 0;
};

// Decides whether the F2 cycle `cycle` (generators of a single bigrading) is
// a boundary. Tilde is exact; minus0 searches preimages up to a U-degree cap.
VanishingResult class_vanishes(const GridComplex& cx, const std::vector<GridState>& cycle, Flavor flavor,
                               const EngineConfig& config = {});

}  // namespace gridhfk
