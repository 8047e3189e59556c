#include "doctest.h"

#include <array>

#include "gridhfk/corpus.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/invariants.hpp"
#include "support.hpp"

using namespace gridhfk;

namespace {

const GridDiagram kUnknot = parse_grid("n=2; O=1,2; X=2,1");

GridDiagram corpus(const char* name) { return find_corpus_entry(name)->grid; }

// tb and r read off the Maslov gradings of the two corner generators:
// M(x+) = tb - r + 1 and M(x-) = tb + r + 1.
std::pair<int, int> tb_r_from_gradings(const GridDiagram& g) {
  const GridComplex cx(g);
  const int mp = cx.maslov(x_plus(g).perm);
  const int mm = cx.maslov(x_minus(g).perm);
  return {(mp + mm) / 2 - 1, (mm - mp) / 2};
}

GridDiagram synthetic_a() {
  const auto t = corpus("trefoil");
  return apply_move(t, Stabilize{{1, t.x_row(0) + 1}, {Marker::X, Corner::SW}});
}

}  // namespace

TEST_CASE("corner generators of the unknot") {
  CHECK(x_plus(kUnknot).perm == std::vector<int>{1, 0});
  CHECK(x_minus(kUnknot).perm == std::vector<int>{1, 0});
  const auto t = shift_grid(5, 2);
  // x+ sits one step up and right of each X.
  for (int c = 0; c < 5; ++c) {
    CHECK(x_plus(t).perm[(c + 1) % 5] == (t.x_row(c) + 1) % 5);
    CHECK(x_minus(t).perm[c] == t.x_row(c));
  }
}

TEST_CASE("lambda examples") {
  const auto u = lambda_status(kUnknot, Sign::Plus);
  CHECK(u.bigrading == Bigrading{0, 0});
  CHECK(u.tilde_verdict == Verdict::Survives);
  CHECK(to_json(u) ==
        R"({"bigrading":[0,0],"flavor_note":"via fully blocked complex","sign":"+","verdict":"Survives"})");

  const auto t = lambda_status(corpus("trefoil"), Sign::Plus);
  CHECK(t.bigrading == Bigrading{2, 1});
  CHECK(t.tilde_verdict == Verdict::Survives);

  const auto f = lambda_status(corpus("figure8"), Sign::Plus);
  CHECK(f.bigrading == Bigrading{-2, -1});
  CHECK(f.tilde_verdict == Verdict::Vanishes);

  const auto th = theta_status(corpus("trefoil"), {}, true);
  CHECK(th.transverse);
  CHECK(th.minus_corroboration != Verdict::NotRun);
  CHECK(to_json(th).find("\"theta\":true") != std::string::npos);
}

TEST_CASE("property: gradings of x+ and x- match tb and r") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 200; ++t) {
    const auto g = testing_support::random_knot_grid(2 + static_cast<int>(rng() % 8), rng);
    const auto ci = classical_invariants(g);
    CHECK(tb_r_from_gradings(g) == std::pair{ci.tb, ci.r});
    const GridComplex cx(g);
    CHECK(2 * cx.alexander(x_plus(g).perm) == ci.sl_plus + 1);
    CHECK(2 * cx.alexander(x_minus(g).perm) == ci.sl_minus + 1);
  }
}

TEST_CASE("property: Legendrian moves keep the bigrading and verdict of lambda+") {
  std::mt19937_64 rng(109);
  constexpr std::array legendrian{MoveClass::Legendrian};
  for (const char* name : {"unknot", "trefoil", "figure8"}) {
    const auto g = corpus(name);
    const auto base = lambda_status(g, Sign::Plus);
    for (int s = 0; s < 8; ++s) {
      GridDiagram cur = g;
      for (int k = 0; k < 5; ++k) {
        auto m = random_move(cur, legendrian, g.size() + 2, rng);
        if (!m) break;
        cur = apply_move(cur, *m);
      }
      const auto st = lambda_status(cur, Sign::Plus);
      CHECK(st.bigrading == base.bigrading);
      CHECK(st.tilde_verdict == base.tilde_verdict);
    }
  }
}

TEST_CASE("Kunneth examples") {
  for (auto [a, b] : {std::pair{"unknot", "unknot"}, {"trefoil", "unknot"}, {"unknot", "figure8"}}) {
    const auto r = kunneth_check(align_x_upper_right(corpus(a)), align_o_lower_left(corpus(b)));
    CHECK(r.ranks_match());
    CHECK(r.bigradings_add());
    CHECK(r.product_rule());
    CHECK(r.sum.size() == corpus(a).size() + corpus(b).size() - 1);
  }
}

TEST_CASE("property: connected sums add sl, with tb1 + tb2 and r1 + r2 - 1") {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 60; ++t) {
    const auto g1 = testing_support::random_knot_grid(2 + static_cast<int>(rng() % 5), rng);
    const auto g2 = testing_support::random_knot_grid(2 + static_cast<int>(rng() % 5), rng);
    const auto sum = aligned_connect_sum(g1, g2);
    const auto a = classical_invariants(g1);
    const auto b = classical_invariants(g2);
    const auto s = classical_invariants(sum);
    CHECK(s.sl_plus == a.sl_plus + b.sl_plus + 1);
    CHECK(s.tb == a.tb + b.tb);
    CHECK(s.r == a.r + b.r - 1);
    CHECK(tb_r_from_gradings(sum) == std::pair{s.tb, s.r});
  }
}

// The grid patch carries a negative stabilization, so tb does not gain one.
TEST_CASE("unknot # unknot has tb = tb1 + tb2 + 1" * doctest::should_fail()) {
  const auto s = classical_invariants(aligned_connect_sum(kUnknot, kUnknot));
  CHECK(s.tb == -1);
}

TEST_CASE("nonsimplicity pipeline") {
  const auto same = nonsimplicity_pipeline(kUnknot, kUnknot, 1);
  CHECK(same.conclusion == kNotDistinguished);
  CHECK(same.sl_consistent());

  try {
    nonsimplicity_pipeline(corpus("trefoil"), kUnknot, 1);
    FAIL("no throw");
  } catch (const GridError& e) {
    CHECK(e.kind() == ErrorKind::SlMismatch);
  }
  CHECK_THROWS_AS(nonsimplicity_pipeline(kUnknot, kUnknot, 0), GridError);

  const auto ga = synthetic_a();
  CHECK(classical_invariants(ga).sl_plus == classical_invariants(kUnknot).sl_plus);
  for (int n : {1, 2}) {
    const auto r = nonsimplicity_pipeline(ga, kUnknot, n);
    CHECK(r.sl_consistent());
    REQUIRE(r.verdict_a);
    REQUIRE(r.verdict_b);
    CHECK(*r.verdict_a == Verdict::Vanishes);
    CHECK(*r.verdict_b == Verdict::Survives);
    CHECK(r.conclusion == kCertified);
  }
}

TEST_CASE("nonsimplicity pipeline reports budget failures in the note") {
  EngineConfig tight;
  tight.max_slice = 0;
  const auto r = nonsimplicity_pipeline(corpus("trefoil"), corpus("trefoil"), 2, tight);
  CHECK_FALSE(r.verdict_a);
  CHECK(r.note.find("BudgetExceeded") != std::string::npos);
  CHECK(r.conclusion == kNotDistinguished);
}
