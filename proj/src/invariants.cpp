#include "gridhfk/invariants.hpp"

#include "gridhfk/error.hpp"
#include "json.hpp"

namespace gridhfk {

GridState x_plus(const GridDiagram& grid) {
  const int n = grid.size();
  GridState x;
  x.perm.resize(n);
  for (int c = 0; c < n; ++c) x.perm[(c + 1) % n] = (grid.x_row(c) + 1) % n;
  return x;
}

GridState x_minus(const GridDiagram& grid) {
  GridState x;
  x.perm.assign(grid.x_rows().begin(), grid.x_rows().end());
  return x;
}

InvariantStatus lambda_status(const GridDiagram& grid, Sign sign, const EngineConfig& config, bool corroborate) {
  const GridComplex cx(grid);
  InvariantStatus s;
  s.sign = sign;
  s.cycle = sign == Sign::Plus ? x_plus(grid) : x_minus(grid);
  s.bigrading = cx.bigrading(s.cycle.perm);
  s.tilde_verdict = class_vanishes(cx, {s.cycle}, Flavor::Tilde, config).verdict;
  if (corroborate) {
    const auto minus = class_vanishes(cx, {s.cycle}, Flavor::Minus0, config);
    s.minus_corroboration = minus.verdict;
    s.minus_degree_cap = minus.degree_cap;
  }
  return s;
}

InvariantStatus theta_status(const GridDiagram& grid, const EngineConfig& config, bool corroborate) {
  auto s = lambda_status(grid, Sign::Plus, config, corroborate);
  s.transverse = true;
  return s;
}

std::string to_json(const InvariantStatus& status) {
  nlohmann::json j;
  j["sign"] = status.sign == Sign::Plus ? "+" : "-";
  j["bigrading"] = {status.bigrading.maslov, status.bigrading.alexander};
  j["verdict"] = to_string(status.tilde_verdict);
  j["flavor_note"] = kFlavorNote;
  if (status.transverse) j["theta"] = true;
  if (status.minus_corroboration != Verdict::NotRun) {
    j["minus_corroboration"] = to_string(status.minus_corroboration);
    j["minus_degree_cap"] = status.minus_degree_cap;
  }
  return j.dump();
}

GridDiagram aligned_connect_sum(const GridDiagram& g1, const GridDiagram& g2) {
  return connect_sum(align_x_upper_right(g1), align_o_lower_left(g2));
}

bool KunnethReport::product_rule() const {
  const bool both_survive = verdict_first == Verdict::Survives && verdict_second == Verdict::Survives;
  return (verdict_sum == Verdict::Survives) == both_survive;
}

KunnethReport kunneth_check(const GridDiagram& g1, const GridDiagram& g2, const EngineConfig& config) {
  KunnethReport r{connect_sum(g1, g2), {}, {}, {}, {}, {}, {}, {}};
  r.hat_first = tilde_homology(g1, config).hat_ranks;
  r.hat_second = tilde_homology(g2, config).hat_ranks;
  r.hat_sum = tilde_homology(r.sum, config).hat_ranks;
  r.tensor = tensor(r.hat_first, r.hat_second);
  const auto s1 = lambda_status(g1, Sign::Plus, config);
  const auto s2 = lambda_status(g2, Sign::Plus, config);
  const auto s = lambda_status(r.sum, Sign::Plus, config);
  r.x_first = s1.bigrading;
  r.x_second = s2.bigrading;
  r.x_sum = s.bigrading;
  r.verdict_first = s1.tilde_verdict;
  r.verdict_second = s2.tilde_verdict;
  r.verdict_sum = s.tilde_verdict;
  return r;
}

NonsimplicityReport nonsimplicity_pipeline(const GridDiagram& ga, const GridDiagram& gb, int repetitions,
                                           const EngineConfig& config) {
  if (repetitions < 1) throw GridError(ErrorKind::OutOfRange, "repetitions must be at least 1");
  const int sa = classical_invariants(ga).sl_plus;
  const int sb = classical_invariants(gb).sl_plus;
  if (sa != sb) {
    throw GridError(ErrorKind::SlMismatch, "sl_plus " + std::to_string(sa) + " vs " + std::to_string(sb));
  }
  NonsimplicityReport r;
  r.repetitions = repetitions;
  r.sl_single = sb;
  r.sl_expected = repetitions * sb + (repetitions - 1);

  GridDiagram lb = gb;
  GridDiagram la = ga;
  for (int k = 1; k < repetitions; ++k) {
    lb = aligned_connect_sum(lb, gb);
    la = aligned_connect_sum(la, gb);
  }
  r.sl_b = classical_invariants(lb).sl_plus;
  r.sl_a = classical_invariants(la).sl_plus;
  r.size_b = lb.size();
  r.size_a = la.size();

  try {
    r.verdict_a = theta_status(la, config).tilde_verdict;
    r.verdict_b = theta_status(lb, config).tilde_verdict;
  } catch (const GridError& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    r.note = e.what();
  }
  if (r.verdict_a && r.verdict_b && *r.verdict_a != *r.verdict_b) {
    r.conclusion = kCertified;
  } else {
    r.conclusion = kNotDistinguished;
  }
  return r;
}

}  // namespace gridhfk
