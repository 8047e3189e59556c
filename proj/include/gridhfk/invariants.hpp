#pragma once

#include <optional>
#include <string>

#include "gridhfk/homology.hpp"
#include "gridhfk/moves.hpp"

namespace gridhfk {

// Upper-right (x_plus) and lower-left (x_minus) corners of the X cells.
GridState x_plus(const GridDiagram& grid);
GridState x_minus(const GridDiagram& grid);

enum class Sign { Plus, Minus };

struct InvariantStatus {
  Sign sign = Sign::Plus;
  bool transverse = false;  // reported as theta
  GridState cycle;
  Bigrading bigrading;
  Verdict tilde_verdict = Verdict::NotRun;
  Verdict minus_corroboration = Verdict::NotRun;
  int minus_degree_cap = 0;
};

// Hat-level verdicts are read from the fully blocked complex.
inline constexpr const char* kFlavorNote = "via fully blocked complex";

InvariantStatus lambda_status(const GridDiagram& grid, Sign sign, const EngineConfig& config = {},
                              bool corroborate = false);
InvariantStatus theta_status(const GridDiagram& grid, const EngineConfig& config = {}, bool corroborate = false);

// {"bigrading", "flavor_note", "sign", "verdict"} plus "minus_corroboration"
// (and "theta": true) when applicable.
std::string to_json(const InvariantStatus& status);

// Cyclically aligns the corners, then patches; a Legendrian connected sum.
GridDiagram aligned_connect_sum(const GridDiagram& g1, const GridDiagram& g2);

struct KunnethReport {
  GridDiagram sum;
  RankTable hat_first;
  RankTable hat_second;
  RankTable hat_sum;
  RankTable tensor;
  Bigrading x_first;
  Bigrading x_second;
  Bigrading x_sum;
  Verdict verdict_first = Verdict::NotRun;
  Verdict verdict_second = Verdict::NotRun;
  Verdict verdict_sum = Verdict::NotRun;

  bool ranks_match() const { return hat_sum == tensor; }
  bool bigradings_add() const { return x_sum == x_first + x_second; }
  bool product_rule() const;
  bool ok() const { return ranks_match() && bigradings_add() && product_rule(); }
};

// The grids must already satisfy the corner conditions of connect_sum.
KunnethReport kunneth_check(const GridDiagram& g1, const GridDiagram& g2, const EngineConfig& config = {});

struct NonsimplicityReport {
  int repetitions = 1;
  int sl_single = 0;     // sl_plus of each input
  int sl_expected = 0;   // n sl + (n - 1)
  int sl_b = 0;          // sl_plus of #^n GB
  int sl_a = 0;          // sl_plus of GA # (#^(n-1) GB)
  int size_b = 0;
  int size_a = 0;
  std::optional<Verdict> verdict_a;
  std::optional<Verdict> verdict_b;
  std::string note;
  std::string conclusion;

  bool sl_consistent() const { return sl_a == sl_expected && sl_b == sl_expected; }
};

inline constexpr const char* kCertified = "transversely non-simple pair certified";
inline constexpr const char* kNotDistinguished = "not distinguished";

// Compares theta of #^n GB and GA # (#^(n-1) GB). Throws SlMismatch when the
// inputs have different sl_plus; budget failures leave verdicts unset.
NonsimplicityReport nonsimplicity_pipeline(const GridDiagram& ga, const GridDiagram& gb, int repetitions,
                                           const EngineConfig& config = {});

}  // namespace gridhfk
