// gridhfk: grid diagrams, knot Floer homology and the Legendrian invariants.
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gridhfk/corpus.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/moves.hpp"
#include "gridhfk/verify.hpp"
#include "json.hpp"

using namespace gridhfk;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw GridError(ErrorKind::Parse, "cannot write " + path);
  out << text;
}

// A script argument is a file when one exists at that path; otherwise the
// text itself, with "\n" escapes and ';' as line breaks.
std::string script_text(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return read_text_file(arg);
  std::string out;
  for (std::size_t i = 0; i < arg.size(); ++i) {
    if (arg[i] == '\\' && i + 1 < arg.size() && arg[i + 1] == 'n') {
      out += '\n';
      ++i;
    } else if (arg[i] == ';') {
      out += '\n';
    } else {
      out += arg[i];
    }
  }
  return out;
}

int cmd_info(const std::string& file, bool json) {
  const GridDiagram g = load_grid(file);
  const int components = component_count(g);
  nlohmann::json j;
  j["n"] = g.size();
  j["components"] = components;
  if (components == 1) {
    const auto front = front_projection(g);
    const auto ci = classical_invariants(g);
    j["tb"] = ci.tb;
    j["r"] = ci.r;
    j["sl_plus"] = ci.sl_plus;
    j["sl_minus"] = ci.sl_minus;
    j["crossings"] = front.crossings.size();
    j["writhe"] = front.writhe();
    j["cusps"] = front.cusps.size();
    j["up_cusps"] = front.up_cusps();
    j["down_cusps"] = front.down_cusps();
  }
  if (json) {
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "n = " << g.size() << "\ncomponents = " << components << '\n';
  if (components == 1) {
    std::cout << "front of m(K): " << j["crossings"] << " crossings (writhe " << j["writhe"] << "), "
              << j["cusps"] << " cusps (" << j["up_cusps"] << " up, " << j["down_cusps"] << " down)\n"
              << "tb = " << j["tb"] << ", r = " << j["r"] << ", sl+ = " << j["sl_plus"] << ", sl- = "
              << j["sl_minus"] << '\n';
  }
  return 0;
}

int cmd_homology(const std::string& file, const std::string& flavor, bool json, const EngineConfig& cfg) {
  const auto report = tilde_homology(load_grid(file), cfg);
  const bool hat = flavor == "hat";
  if (json) {
    std::cout << to_json(report, hat) << '\n';
    return 0;
  }
  const RankTable& table = hat ? report.hat_ranks : report.tilde_ranks;
  std::cout << (hat ? "hat" : "tilde") << " knot Floer homology of m(K), n = " << report.grid_size << '\n'
            << "poincare: " << format_poincare(table) << '\n'
            << "total rank: " << total_rank(table) << '\n'
            << "alexander (mod 2): " << report.alexander_mod2.to_string() << '\n';
  std::cout << "   M    A  rank\n";
  for (const auto& [g, r] : table) {
    std::cout << std::setw(4) << g.maslov << std::setw(5) << g.alexander << std::setw(6) << r << '\n';
  }
  return 0;
}

int cmd_slice(const std::string& file, int maslov, int alexander, const EngineConfig& cfg) {
  const GridDiagram g = load_grid(file);
  const GridComplex cx(g);
  check_budget(cx, cfg, alexander);
  const auto complex = build_tilde_complex(cx, alexander);
  auto it = complex.boundaries.find({maslov, alexander});
  if (it == complex.boundaries.end()) {
    std::cout << "# empty slice\n";
    return 0;
  }
  std::cout << "# boundary (" << maslov << "," << alexander << ") -> (" << maslov - 1 << "," << alexander
            << "): " << it->second.rows() << " x " << it->second.cols() << '\n'
            << it->second.to_coordinate_text();
  return 0;
}

int cmd_invariant(const std::string& file, const std::string& sign, bool theta, bool minus,
                  const EngineConfig& cfg) {
  const GridDiagram g = load_grid(file);
  if (component_count(g) != 1) throw GridError(ErrorKind::MultiComponent, "invariants need a knot");
  InvariantStatus s;
  if (theta) {
    s = theta_status(g, cfg, minus);
  } else {
    s = lambda_status(g, sign == "-" ? Sign::Minus : Sign::Plus, cfg, minus);
  }
  std::cout << to_json(s) << '\n';
  return 0;
}

int cmd_moves(const std::string& file, const std::string& script, const std::string& out) {
  GridDiagram g = load_grid(file);
  const auto moves = parse_move_script(script_text(script));
  for (const auto& m : moves) {
    g = apply_move(g, m);
    std::cerr << format_move(m) << "  [" << to_string(classify_move(m)) << "]  n=" << g.size() << '\n';
  }
  write_output(out, format_grid(g));
  return 0;
}

int cmd_connsum(const std::string& a, const std::string& b, const std::string& out, bool stabilize) {
  const GridDiagram g1 = load_grid(a);
  const GridDiagram g2 = load_grid(b);
  GridDiagram sum = stabilize ? connect_sum(normalize_corners(g1), normalize_corners(g2)) : aligned_connect_sum(g1, g2);
  write_output(out, format_grid(sum));
  return 0;
}

int cmd_alex(const std::string& file) {
  std::cout << alexander_polynomial(load_grid(file)).to_string() << '\n';
  return 0;
}

int cmd_verify(const std::string& battery, const std::vector<std::string>& pair, std::uint64_t seed,
               const EngineConfig& cfg) {
  BatteryOptions opt;
  opt.seed = seed;
  opt.engine = cfg;
  if (pair.size() == 2) opt.user_pair = std::make_pair(load_grid(pair[0]), load_grid(pair[1]));
  std::vector<CheckResult> results;
  try {
    results = run_battery(battery, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cout << format_table(results);
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed;
  std::cout << results.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : kExitValidation;
}

int cmd_corpus(const std::string& action, const std::string& name, const std::string& dir) {
  if (action == "list") {
    for (const auto& e : builtin_corpus()) {
      std::cout << e.name << "  n=" << e.grid.size() << "  " << e.provenance << '\n';
    }
    std::cout << kUserPairSlot << "  (empty; pass two grid files with verify --pair)\n";
    return 0;
  }
  std::filesystem::create_directories(dir);
  for (const auto& e : builtin_corpus()) {
    if (!name.empty() && e.name != name) continue;
    const auto path = std::filesystem::path(dir) / (e.name + ".grid");
    write_output(path.string(), "# " + e.name + ": " + e.provenance + "\n" + format_grid(e.grid));
    std::cout << path.string() << '\n';
  }
  if (!name.empty() && !find_corpus_entry(name)) {
    std::cerr << "error: no corpus entry '" << name << "'\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid diagrams, knot Floer homology and Legendrian/transverse invariants"};
  app.require_subcommand(1);
  EngineConfig cfg;
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--force", cfg.force, "ignore the slice budget");

  std::string file, file_b, flavor = "tilde", sign = "+", script, out, battery = "all", action, name,
                             dir = "corpus";
  bool json = false, theta = false, minus = false, stabilize = false;
  int maslov = 0, alexander = 0;
  std::uint64_t seed = BatteryOptions{}.seed;
  std::vector<std::string> pair;

  auto* info = app.add_subcommand("info", "size, components, front statistics, classical invariants");
  info->add_option("grid", file, "grid file or corpus name")->required();
  info->add_flag("--json", json);

  auto* show = app.add_subcommand("show", "ASCII rendering, top row first");
  show->add_option("grid", file)->required();

  auto* homology = app.add_subcommand("homology", "bigraded homology of the fully blocked complex");
  homology->add_option("grid", file)->required();
  homology->add_option("--flavor", flavor)->check(CLI::IsMember({"tilde", "hat"}));
  homology->add_flag("--json", json);
  homology->add_flag("--force", cfg.force, "ignore the slice budget");

  auto* slice = app.add_subcommand("slice", "dump one tilde boundary block as 1-based coordinates");
  slice->add_option("grid", file)->required();
  slice->add_option("maslov", maslov)->required();
  slice->add_option("alexander", alexander)->required();

  auto* invariant = app.add_subcommand("invariant", "lambda+/lambda- or theta status as JSON");
  invariant->add_option("grid", file)->required();
  invariant->add_option("--sign", sign)->check(CLI::IsMember({"+", "-"}));
  invariant->add_flag("--theta", theta);
  invariant->add_flag("--minus", minus, "run the bounded minus-flavor search as well");

  auto* moves = app.add_subcommand("moves", "apply a move script");
  moves->add_option("grid", file)->required();
  moves->add_option("script", script, "script file or inline text")->required();
  moves->add_option("--out", out);

  auto* connsum = app.add_subcommand("connsum", "grid connected sum");
  connsum->add_option("first", file)->required();
  connsum->add_option("second", file_b)->required();
  connsum->add_option("--out", out);
  connsum->add_flag("--stabilize", stabilize, "normalize corners by stabilization instead of cyclic permutation");

  auto* alex = app.add_subcommand("alex", "Alexander polynomial mod 2");
  alex->add_option("grid", file)->required();

  auto* verify = app.add_subcommand("verify", "run verification batteries");
  verify->add_option("--battery", battery)->check(CLI::IsMember({"moves", "kunneth", "nonsimple", "all"}));
  verify->add_option("--pair", pair, "grid files of a Legendrian pair expected to give (Vanishes, Survives)")
      ->expected(2);
  verify->add_option("--seed", seed);

  auto* corpus = app.add_subcommand("corpus", "built-in grids");
  corpus->add_option("action", action)->required()->check(CLI::IsMember({"list", "export"}));
  corpus->add_option("name", name);
  corpus->add_option("--dir", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) return cmd_info(file, json);
    if (*show) {
      std::cout << render_ascii(load_grid(file));
      return 0;
    }
    if (*homology) return cmd_homology(file, flavor, json, cfg);
    if (*slice) return cmd_slice(file, maslov, alexander, cfg);
    if (*invariant) return cmd_invariant(file, sign, theta, minus, cfg);
    if (*moves) return cmd_moves(file, script, out);
    if (*connsum) return cmd_connsum(file, file_b, out, stabilize);
    if (*alex) return cmd_alex(file);
    if (*verify) return cmd_verify(battery, pair, seed, cfg);
    if (*corpus) return cmd_corpus(action, name, dir);
  } catch (const GridError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitValidation;
  }
  return kExitUsage;
}
