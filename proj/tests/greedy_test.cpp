#include "domset/greedy.hpp"

#include <doctest.h>

#include "domset/generators.hpp"
#include "domset/oracle.hpp"
#include "test_support.hpp"

using namespace domset;
using domset::test::petersen;
using domset::test::reference_potential;

namespace {

CoefficientSet coeffs5() { return solve_coefficients(5); }

}  // namespace

TEST_CASE("initial state is all white with potential n*a") {
  const Graph k6 = complete_graph(6);
  DominatorState state(k6, coeffs5());
  CHECK(state.potential() == Rational(6L * 2671));
  CHECK(state.potential_from_scratch() == Rational(16026));
  for (int v = 0; v < 6; ++v) {
    CHECK(state.color(v) == Color::White);
    CHECK(state.white_degree(v) == 5);
    CHECK(state.white_cover(v) == 6);
  }
  CHECK_FALSE(state.dominated());
}

TEST_CASE("phase is d+2 minus the best white cover") {
  DominatorState k6(complete_graph(6), coeffs5());
  CHECK(k6.current_phase() == 1);  // cover 6 = d+1

  DominatorState k8(complete_graph(8), coeffs5());
  CHECK(k8.current_phase() == 0);  // cover 8 >= d+2
}

TEST_CASE("one selection dominates a complete graph") {
  DominatorState state(complete_graph(6), coeffs5());
  CHECK(state.select_vertex(Strategy::PhasePreference) == 0);
  const StepRecord record = state.apply_selection(0);
  CHECK(record.index == 1);
  CHECK(record.phase == 1);
  CHECK(record.vertex == 0);
  CHECK(record.prior_color == Color::White);
  CHECK(record.gain == Rational(16026));
  CHECK(record.potential_after == Rational(0));
  CHECK(state.dominated());
  for (int v = 0; v < 6; ++v) CHECK(state.color(v) == Color::Red);
  CHECK(format_step(record) == "step=1 phase=1 vertex=0 prior=W gain=16026/1 potential=0/1");
  CHECK_THROWS_AS(state.current_phase(), std::logic_error);
  CHECK_THROWS_AS(state.select_vertex(Strategy::PhasePreference), std::logic_error);
  CHECK_THROWS_AS(state.apply_selection(1), std::invalid_argument);
}

TEST_CASE("max gain on a complete graph is 6a for every vertex") {
  DominatorState state(complete_graph(6), coeffs5());
  for (int v = 0; v < 6; ++v) CHECK(state.evaluate_gain(v) == Rational(16026));
  CHECK(state.select_vertex(Strategy::MaxGain) == 0);
}

TEST_CASE("hand-checked two-step trace on K_{5,5}") {
  const Graph g = complete_bipartite(5, 5);
  DominatorState state(g, coeffs5());

  CHECK(state.select_vertex(Strategy::PhasePreference) == 0);
  const StepRecord first = state.apply_selection(0);
  // 6a - 5 b_4 = 16026 - 8260 = s exactly
  CHECK(first.gain == Rational(7766));
  CHECK(first.phase == 1);

  // whites: the other four side-A vertices, each only covering itself;
  // blues: all of side B with white cover 4
  for (int v = 1; v <= 4; ++v) {
    CHECK(state.color(v) == Color::White);
    CHECK(state.white_cover(v) == 1);
  }
  for (int v = 5; v <= 9; ++v) {
    CHECK(state.color(v) == Color::Blue);
    CHECK(state.white_cover(v) == 4);
  }
  CHECK(state.current_phase() == 3);
  CHECK(state.select_vertex(Strategy::PhasePreference) == 5);

  const StepRecord second = state.apply_selection(5);
  CHECK(second.prior_color == Color::Blue);
  // b_4 + 4a + 4 b_4 = 5*1652 + 4*2671
  CHECK(second.gain == Rational(18944));
  CHECK(state.dominated());
  CHECK(state.potential() == Rational(0));
  CHECK(state.chosen() == std::vector<int>{0, 5});
}

TEST_CASE("forced run reaches the last phase on a small cycle") {
  const Graph c4 = cycle_graph(4);
  const CoefficientSet c = solve_coefficients(3);
  DominatorState state(c4, c, /*force=*/true);
  state.apply_selection(0);
  // only vertex 2 stays white, its neighbors are blue: best cover is 1
  CHECK(state.color(2) == Color::White);
  CHECK(state.white_cover(2) == 1);
  CHECK(state.current_phase() == c.d + 1);
}

TEST_CASE("degree precondition is enforced unless forced") {
  const Graph p3 = domset::test::path_graph(3);
  CHECK_THROWS_AS(DominatorState(p3, coeffs5()), std::invalid_argument);
  const RunResult result = run_greedy(p3, coeffs5(), Strategy::PhasePreference,
                                      /*audit=*/true, /*force=*/true);
  CHECK_FALSE(result.audited);
  CHECK(is_dominating(p3, result.dominating_set));
  CHECK(result.dominating_set == std::vector<int>{1});
}

TEST_CASE("isolated vertices are selectable under force") {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const RunResult result = run_greedy(g, solve_coefficients(3), Strategy::PhasePreference,
                                      /*audit=*/true, /*force=*/true);
  CHECK(is_dominating(g, result.dominating_set));
  CHECK(result.final_potential == Rational(0));
}

TEST_CASE("empty graphs are rejected") {
  CHECK_THROWS_AS(DominatorState(Graph(), coeffs5()), std::invalid_argument);
}

TEST_CASE("audit rejects a coefficient set whose s is inflated") {
  CoefficientSet tampered = coeffs5();
  tampered.s = tampered.s * Rational(10);
  try {
    run_greedy(complete_graph(6), tampered, Strategy::PhasePreference);
    FAIL("expected AuditError");
  } catch (const AuditError& error) {
    CHECK(error.step().index == 1);
    CHECK(error.step().gain == Rational(16026));
    CHECK(std::string(error.what()).find("below s") != std::string::npos);
  }
}

TEST_CASE("step cap values") {
  CHECK(step_cap(solve_coefficients(5), 100) == 34);
  CHECK(step_cap(solve_coefficients(6), 40) == 12);
  CHECK(step_cap(solve_coefficients(5), 6) == 2);
  CHECK(step_cap(solve_coefficients(3), 10) == 4);
}

TEST_CASE("runs are deterministic") {
  const Graph g = random_regular_graph(40, 5, 21);
  for (Strategy strategy : {Strategy::PhasePreference, Strategy::MaxGain}) {
    const RunResult r1 = run_greedy(g, coeffs5(), strategy);
    const RunResult r2 = run_greedy(g, coeffs5(), strategy);
    REQUIRE(r1.log.size() == r2.log.size());
    for (size_t i = 0; i < r1.log.size(); ++i) {
      CHECK(r1.log[i].vertex == r2.log[i].vertex);
      CHECK(r1.log[i].gain == r2.log[i].gain);
    }
  }
}

TEST_CASE("color and white-degree monotonicity along a run") {
  const Graph g = random_min_degree_graph(36, 5, 6, 5);
  for (Strategy strategy : {Strategy::PhasePreference, Strategy::MaxGain}) {
    DominatorState state(g, coeffs5());
    std::vector<Color> colors;
    std::vector<int> degs;
    for (int v = 0; v < g.vertex_count(); ++v) {
      colors.push_back(state.color(v));
      degs.push_back(state.white_degree(v));
    }
    while (!state.dominated()) {
      state.apply_selection(state.select_vertex(strategy));
      for (int v = 0; v < g.vertex_count(); ++v) {
        const Color before = colors[static_cast<size_t>(v)];
        const Color after = state.color(v);
        // allowed: W->B, W->R, B->R, no change
        CHECK(static_cast<int>(after) >= static_cast<int>(before));
        CHECK(state.white_degree(v) <= degs[static_cast<size_t>(v)]);
        colors[static_cast<size_t>(v)] = after;
        degs[static_cast<size_t>(v)] = state.white_degree(v);
      }
    }
  }
}

TEST_CASE("incremental potential matches the first-principles recomputation") {
  const Graph g = random_regular_graph(30, 6, 9);
  const CoefficientSet c = solve_coefficients(6);
  for (Strategy strategy : {Strategy::PhasePreference, Strategy::MaxGain}) {
    DominatorState state(g, c);
    Rational previous = state.potential();
    CHECK(previous == reference_potential(g, c, {}));
    while (!state.dominated()) {
      const StepRecord record = state.apply_selection(state.select_vertex(strategy));
      const Rational expected = reference_potential(g, c, state.chosen());
      CHECK(state.potential() == expected);
      CHECK(state.potential_from_scratch() == expected);
      CHECK(state.potential_consistent());
      CHECK(record.gain == previous - expected);
      CHECK(record.gain.is_positive());
      previous = expected;
    }
    CHECK(previous == Rational(0));
  }
}

TEST_CASE("every blue vertex keeps a white neighbor") {
  const Graph g = random_min_degree_graph(40, 5, 0, 13);
  DominatorState state(g, coeffs5());
  while (!state.dominated()) {
    state.apply_selection(state.select_vertex(Strategy::PhasePreference));
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (state.color(v) == Color::Blue) CHECK(state.white_degree(v) >= 1);
      if (state.color(v) == Color::White) {
        // no white vertex has a red neighbor when min degree >= d
        int blue_neighbors = 0;
        for (int w : g.neighbors(v)) {
          CHECK(state.color(w) != Color::Red);
          if (state.color(w) == Color::Blue) ++blue_neighbors;
        }
        CHECK(blue_neighbors >= coeffs5().d - state.white_degree(v));
      }
    }
  }
}

TEST_CASE("audited runs satisfy the gain and size guarantees") {
  domset::test::XorShift rng(2024);
  for (int d : {5, 6, 7}) {
    const CoefficientSet c = solve_coefficients(d);
    for (int trial = 0; trial < 4; ++trial) {
      const int n = 2 * (30 + rng.below(20));  // even so n*d stays even
      const Graph g = trial % 2 == 0 ? random_regular_graph(n, d, rng.next())
                                     : random_min_degree_graph(n, d, trial, rng.next());
      for (Strategy strategy : {Strategy::PhasePreference, Strategy::MaxGain}) {
        const RunResult result = run_greedy(g, c, strategy);
        CHECK(result.audited);
        CHECK(result.final_potential == Rational(0));
        CHECK(is_dominating(g, result.dominating_set));
        CHECK(mpz_class(static_cast<long>(result.dominating_set.size())) <= step_cap(c, n));
        for (const StepRecord& record : result.log) CHECK(record.gain >= c.s);
      }
    }
  }
}

TEST_CASE("greedy result stays above the exact optimum") {
  domset::test::XorShift rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_min_degree_graph(12 + rng.below(5), 5, rng.below(3), rng.next());
    const OracleResult exact = exact_domination_number(g);
    const RunResult greedy = run_greedy(g, coeffs5(), Strategy::PhasePreference);
    CHECK(exact.gamma <= static_cast<int>(greedy.dominating_set.size()));
  }
}

TEST_CASE("six-regular circulant stays under its cap") {
  const Graph g = circulant_graph(40, {1, 2, 3});
  REQUIRE(g.min_degree() == 6);
  const RunResult result = run_greedy(g, solve_coefficients(6), Strategy::PhasePreference);
  CHECK(result.audited);
  CHECK(static_cast<int>(result.dominating_set.size()) <= 12);  // floor(40 * 1702/5389)
}

TEST_CASE("five-regular random graph stays under its cap") {
  const Graph g = random_regular_graph(100, 5, 1);
  const RunResult result = run_greedy(g, coeffs5(), Strategy::PhasePreference);
  CHECK(result.audited);
  CHECK(static_cast<int>(result.dominating_set.size()) <= 34);  // floor(100 * 2671/7766)
}

TEST_CASE("petersen graph under the d=3 system") {
  const Graph p = petersen();
  const CoefficientSet c = solve_coefficients(3);
  const RunResult result = run_greedy(p, c, Strategy::PhasePreference);
  CHECK(result.audited);
  CHECK(is_dominating(p, result.dominating_set));
  CHECK(static_cast<int>(result.dominating_set.size()) <= 4);  // floor(10 * 11/26)
}
