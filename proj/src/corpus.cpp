#include "gridhfk/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

GridDiagram shift_grid(int n, int k) {
  std::vector<int> o(n), x(n);
  for (int c = 0; c < n; ++c) {
    o[c] = c;
    x[c] = (c + k) % n;
  }
  return GridDiagram(std::move(o), std::move(x));
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    c.push_back({"unknot", parse_grid("n=2\nO=1,2\nX=2,1\n"), "2x2 grid, the maximal-tb unknot"});
    c.push_back({"trefoil", shift_grid(5, 2), "shift grid n=5, k=2"});
    c.push_back({"t25", shift_grid(7, 2), "shift grid n=7, k=2 (torus knot T(2,5))"});
    // Found by searching 6x6 grids for hat rank 5 with Alexander polynomial
    // T + 1 + T^-1 mod 2.
    c.push_back({"figure8", parse_grid("n=6\nO=1,2,4,3,6,5\nX=3,6,1,5,4,2\n"),
                 "6x6 grid certified by hat rank 5 and Alexander polynomial mod 2"});
    return c;
  }();
  return corpus;
}

std::optional<CorpusEntry> find_corpus_entry(std::string_view name) {
  for (const auto& e : builtin_corpus()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GridError(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CorpusEntry load_corpus_file(const std::string& path) {
  return {path, parse_grid(read_text_file(path)), "file " + path};
}

GridDiagram load_grid(const std::string& name_or_path) {
  if (!std::filesystem::exists(name_or_path)) {
    if (auto e = find_corpus_entry(name_or_path)) return e->grid;
  }
  return parse_grid(read_text_file(name_or_path));
}

}  // namespace gridhfk
