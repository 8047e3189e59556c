#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridhfk/homology.hpp"

namespace gridhfk {

struct CheckResult {
  std::string battery;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct BatteryOptions {
  std::uint64_t seed = 20261019;
  int sequences = 200;           // random Legendrian sequences per corpus grid
  int max_length = 8;            // moves per sequence
  int transverse_walk = 100;     // random transverse moves per corpus grid
  EngineConfig engine;
  // Optional user-transcribed pair (Vanishes, Survives expected).
  std::optional<std::pair<GridDiagram, GridDiagram>> user_pair;
  // When set, receives the grids the moves and kunneth batteries examine.
  std::vector<GridDiagram>* produced = nullptr;
};

inline constexpr std::string_view kBatteries[] = {"moves", "kunneth", "nonsimple"};

// Runs "moves", "kunneth", "nonsimple" or "all"; throws std::invalid_argument
// for other names.
std::vector<CheckResult> run_battery(std::string_view name, const BatteryOptions& options = {});

std::string format_table(const std::vector<CheckResult>& results);

}  // namespace gridhfk
