#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

struct CorpusEntry {
  std::string name;
  GridDiagram grid;
  std::string provenance;
};

// O = id, X in column i at row i + k (mod n).
GridDiagram shift_grid(int n, int k);

// unknot, trefoil, t25, figure8. Each validates on construction.
const std::vector<CorpusEntry>& builtin_corpus();
std::optional<CorpusEntry> find_corpus_entry(std::string_view name);

// Name of the empty slot for a user-transcribed Legendrian pair of m(10_132).
inline constexpr std::string_view kUserPairSlot = "m10_132-pair";

// Reads and validates a grid file; the provenance records the path.
CorpusEntry load_corpus_file(const std::string& path);

// Either a corpus name or a path to a grid file.
GridDiagram load_grid(const std::string& name_or_path);

std::string read_text_file(const std::string& path);

}  // namespace gridhfk
