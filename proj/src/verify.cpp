#include "gridhfk/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gridhfk/corpus.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/invariants.hpp"
#include "gridhfk/moves.hpp"

namespace gridhfk {

namespace {

std::string inline_grid(const GridDiagram& g) {
  std::string s = format_grid(g);
  std::replace(s.begin(), s.end(), '\n', ' ');
  if (!s.empty()) s.pop_back();
  return s;
}

std::string show(Bigrading g) { return "(" + std::to_string(g.maslov) + "," + std::to_string(g.alexander) + ")"; }

bool is_cycle_both(const GridDiagram& grid, const GridState& x) {
  const GridComplex cx(grid);
  return cx.differential_tilde(x).empty() && cx.differential_minus0(x).empty();
}

class Recorder {
 public:
  explicit Recorder(std::string battery) : battery_(std::move(battery)) {}
  void add(std::string name, bool passed, std::string detail = {}) {
    out_.push_back({battery_, std::move(name), passed, std::move(detail)});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string battery_;
  std::vector<CheckResult> out_;
};

void moves_battery(const BatteryOptions& opt, Recorder& rec) {
  std::mt19937_64 rng(opt.seed);
  constexpr std::array legendrian{MoveClass::Legendrian};
  constexpr std::array transverse{MoveClass::Legendrian, MoveClass::TransverseOnly};
  int law_checked = 0;
  std::string law_failure;
  auto check_law = [&](const GridDiagram& g, Bigrading xg) {
    ++law_checked;
    const int sl = classical_invariants(g).sl_plus;
    if (2 * xg.alexander != sl + 1 && law_failure.empty()) {
      law_failure = inline_grid(g) + " A=" + std::to_string(xg.alexander) + " sl=" + std::to_string(sl);
    }
  };

  for (const auto& entry : builtin_corpus()) {
    const GridDiagram& g = entry.grid;
    const auto base = lambda_status(g, Sign::Plus, opt.engine);
    const auto base_ci = classical_invariants(g);
    const auto base_alex = alexander_polynomial(g);
    check_law(g, base.bigrading);
    const int max_size = g.size() + 2;

    int cycle_bad = 0, grading_bad = 0, verdict_bad = 0, classical_bad = 0, alex_bad = 0, steps = 0;
    std::uniform_int_distribution<int> length(1, opt.max_length);
    for (int s = 0; s < opt.sequences; ++s) {
      GridDiagram cur = g;
      const int len = length(rng);
      for (int k = 0; k < len; ++k) {
        auto m = random_move(cur, legendrian, max_size, rng);
        if (!m) break;
        cur = apply_move(cur, *m);
        ++steps;
        if (!is_cycle_both(cur, x_plus(cur))) ++cycle_bad;
      }
      if (opt.produced) opt.produced->push_back(cur);
      const auto st = lambda_status(cur, Sign::Plus, opt.engine);
      check_law(cur, st.bigrading);
      if (st.bigrading != base.bigrading) ++grading_bad;
      if (st.tilde_verdict != base.tilde_verdict) ++verdict_bad;
      if (classical_invariants(cur) != base_ci) ++classical_bad;
      try {
        if (alexander_polynomial(cur) != base_alex) ++alex_bad;
      } catch (const GridError&) {
        ++alex_bad;
      }
    }
    const std::string runs = std::to_string(opt.sequences) + " sequences, " + std::to_string(steps) + " moves";
    rec.add(entry.name + ": x+ stays a cycle under Legendrian moves", cycle_bad == 0,
            runs + ", failures " + std::to_string(cycle_bad));
    rec.add(entry.name + ": x+ bigrading invariant under Legendrian moves", grading_bad == 0,
            "base " + show(base.bigrading) + ", mismatches " + std::to_string(grading_bad));
    rec.add(entry.name + ": tilde verdict invariant under Legendrian moves", verdict_bad == 0,
            std::string("base ") + to_string(base.tilde_verdict) + ", mismatches " + std::to_string(verdict_bad));
    rec.add(entry.name + ": classical invariants fixed by Legendrian moves", classical_bad == 0,
            "mismatches " + std::to_string(classical_bad));
    rec.add(entry.name + ": Alexander identity exact on moved grids", alex_bad == 0,
            "Delta = " + base_alex.to_string() + ", mismatches " + std::to_string(alex_bad));

    // Single stabilizations at every marker of the given kind.
    struct Expect {
      StabType type;
      Bigrading shift;
      int dtb;
      int dr;
    };
    const Expect expects[] = {
        {{Marker::X, Corner::NE}, {-2, -1}, -1, -1},
        {{Marker::O, Corner::SW}, {-2, -1}, -1, -1},
        {{Marker::X, Corner::SW}, {0, 0}, -1, +1},
        {{Marker::O, Corner::NE}, {0, 0}, -1, +1},
    };
    for (const auto& e : expects) {
      std::set<std::pair<int, int>> shifts;
      bool deltas_ok = true;
      for (int c = 0; c < g.size(); ++c) {
        const int r = e.type.marker == Marker::X ? g.x_row(c) : g.o_row(c);
        const GridDiagram st = apply_move(g, Stabilize{{c + 1, r + 1}, e.type});
        if (opt.produced) opt.produced->push_back(st);
        const auto ci = classical_invariants(st);
        if (ci.tb != base_ci.tb + e.dtb || ci.r != base_ci.r + e.dr) deltas_ok = false;
        const Bigrading xg = GridComplex(st).bigrading(x_plus(st).perm);
        check_law(st, xg);
        const Bigrading d = xg - base.bigrading;
        shifts.insert({d.maslov, d.alexander});
      }
      std::string seen;
      for (const auto& [m, a] : shifts) seen += (seen.empty() ? "" : " ") + show({m, a});
      const bool ok = shifts.size() == 1 && *shifts.begin() == std::pair{e.shift.maslov, e.shift.alexander};
      rec.add(entry.name + ": " + to_string(e.type) + " shifts x+ by " + show(e.shift), ok, "observed " + seen);
      rec.add(entry.name + ": " + to_string(e.type) + " changes (tb, r) by (" + std::to_string(e.dtb) + "," +
                  std::to_string(e.dr) + ")",
              deltas_ok);
    }

    // Random transverse walk: sl and theta verdict are preserved.
    GridDiagram cur = g;
    int walked = 0;
    for (int k = 0; k < opt.transverse_walk; ++k) {
      auto m = random_move(cur, transverse, max_size, rng);
      if (!m) break;
      cur = apply_move(cur, *m);
      ++walked;
    }
    if (opt.produced) opt.produced->push_back(cur);
    const auto theta = theta_status(cur, opt.engine);
    const auto theta0 = theta_status(g, opt.engine);
    check_law(cur, theta.bigrading);
    rec.add(entry.name + ": theta verdict and sl after transverse walk",
            theta.tilde_verdict == theta0.tilde_verdict &&
                classical_invariants(cur).sl_plus == base_ci.sl_plus,
            std::to_string(walked) + " moves, verdict " + to_string(theta.tilde_verdict));
  }
  rec.add("A(x+) = (sl+1)/2 on every grid visited", law_failure.empty(),
          law_failure.empty() ? std::to_string(law_checked) + " grids" : law_failure);
}

void kunneth_battery(const BatteryOptions& opt, Recorder& rec) {
  {
    const GridDiagram u = find_corpus_entry("unknot")->grid;
    const GridDiagram expected = parse_grid("n=3\nO=2,1,3\nX=1,3,2\n");
    const GridDiagram got = aligned_connect_sum(u, u);
    rec.add("unknot # unknot matches the worked 3x3 grid", got == expected, inline_grid(got));
  }
  const std::pair<const char*, const char*> pairs[] = {
      {"unknot", "unknot"}, {"trefoil", "unknot"}, {"unknot", "trefoil"}, {"figure8", "unknot"}, {"trefoil", "trefoil"}};
  for (const auto& [a, b] : pairs) {
    const GridDiagram g1 = align_x_upper_right(find_corpus_entry(a)->grid);
    const GridDiagram g2 = align_o_lower_left(find_corpus_entry(b)->grid);
    const std::string label = std::string(a) + " # " + b;
    try {
      const auto r = kunneth_check(g1, g2, opt.engine);
      if (opt.produced) opt.produced->push_back(r.sum);
      rec.add(label + ": hat ranks equal tensor product", r.ranks_match(),
              "n=" + std::to_string(r.sum.size()) + ", hat " + format_poincare(r.hat_sum));
      rec.add(label + ": x+ bigradings add", r.bigradings_add(),
              show(r.x_first) + " + " + show(r.x_second) + " vs " + show(r.x_sum));
      rec.add(label + ": vanishing product rule", r.product_rule(),
              std::string(to_string(r.verdict_first)) + ", " + to_string(r.verdict_second) + " -> " +
                  to_string(r.verdict_sum));
      const auto d1 = alexander_polynomial(g1);
      const auto d2 = alexander_polynomial(g2);
      const auto ds = alexander_polynomial(r.sum);
      rec.add(label + ": Alexander polynomial multiplies", ds == d1 * d2, ds.to_string());
    } catch (const GridError& e) {
      rec.add(label + ": within budget", false, e.what());
    }
  }
  // sl additivity over all ordered corpus pairs.
  int pairs_checked = 0;
  std::string failure;
  for (const auto& e1 : builtin_corpus()) {
    for (const auto& e2 : builtin_corpus()) {
      const auto c1 = classical_invariants(e1.grid);
      const auto c2 = classical_invariants(e2.grid);
      const GridDiagram sum = aligned_connect_sum(e1.grid, e2.grid);
      if (opt.produced) opt.produced->push_back(sum);
      const auto cs = classical_invariants(sum);
      ++pairs_checked;
      if (cs.sl_plus != c1.sl_plus + c2.sl_plus + 1 && failure.empty()) {
        failure = e1.name + " # " + e2.name;
      }
    }
  }
  rec.add("sl(G1#G2) = sl(G1) + sl(G2) + 1 on corpus pairs", failure.empty(),
          failure.empty() ? std::to_string(pairs_checked) + " pairs" : "fails on " + failure);
}

std::string verdict_text(const std::optional<Verdict>& v) { return v ? to_string(*v) : "n/a"; }

void nonsimple_battery(const BatteryOptions& opt, Recorder& rec) {
  const GridDiagram unknot = find_corpus_entry("unknot")->grid;
  const GridDiagram trefoil = find_corpus_entry("trefoil")->grid;
  {
    const auto r = nonsimplicity_pipeline(unknot, unknot, 1, opt.engine);
    rec.add("identical unknots: not distinguished", r.conclusion == kNotDistinguished, r.conclusion);
  }
  {
    const auto r = nonsimplicity_pipeline(trefoil, trefoil, 2, opt.engine);
    rec.add("identical trefoils, n=2: not distinguished", r.conclusion == kNotDistinguished && r.sl_consistent(),
            r.conclusion + ", sl " + std::to_string(r.sl_a));
  }
  {
    bool threw = false;
    try {
      nonsimplicity_pipeline(trefoil, unknot, 1, opt.engine);
    } catch (const GridError& e) {
      threw = e.kind() == ErrorKind::SlMismatch;
    }
    rec.add("trefoil vs unknot: SlMismatch", threw);
  }
  // A positive stabilization of the trefoil has the unknot's sl and a
  // vanishing theta; the unknot's survives.
  const GridDiagram ga = apply_move(trefoil, Stabilize{{1, trefoil.x_row(0) + 1}, {Marker::X, Corner::SW}});
  for (int n : {1, 2}) {
    const auto r = nonsimplicity_pipeline(ga, unknot, n, opt.engine);
    rec.add("synthetic pair, n=" + std::to_string(n) + ": certified",
            r.conclusion == kCertified && r.sl_consistent(),
            "verdicts (" + verdict_text(r.verdict_a) + ", " + verdict_text(r.verdict_b) + "), sl " +
                std::to_string(r.sl_a) + " = " + std::to_string(r.sl_expected));
  }
  if (opt.user_pair) {
    const auto r = nonsimplicity_pipeline(opt.user_pair->first, opt.user_pair->second, 1, opt.engine);
    rec.add("user pair: verdicts (Vanishes, Survives)",
            r.verdict_a == Verdict::Vanishes && r.verdict_b == Verdict::Survives,
            "verdicts (" + verdict_text(r.verdict_a) + ", " + verdict_text(r.verdict_b) + ") " + r.note);
  }
}

}  // namespace

std::vector<CheckResult> run_battery(std::string_view name, const BatteryOptions& options) {
  std::vector<CheckResult> out;
  auto run = [&](std::string_view b) {
    Recorder rec{std::string(b)};
    if (b == "moves") moves_battery(options, rec);
    if (b == "kunneth") kunneth_battery(options, rec);
    if (b == "nonsimple") nonsimple_battery(options, rec);
    auto part = rec.take();
    out.insert(out.end(), part.begin(), part.end());
  };
  if (name == "all") {
    for (auto b : kBatteries) run(b);
  } else if (std::find(std::begin(kBatteries), std::end(kBatteries), name) != std::end(kBatteries)) {
    run(name);
  } else {
    throw std::invalid_argument("unknown battery '" + std::string(name) + "'");
  }
  return out;
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.battery << std::string(10 - std::min<std::size_t>(r.battery.size(), 9), ' ')
        << r.name << std::string(width - r.name.size() + 2, ' ') << r.detail << '\n';
  }
  return out.str();
}

}  // namespace gridhfk
