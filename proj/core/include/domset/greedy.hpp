#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/coefficients.hpp"
#include "domset/graph.hpp"
#include "domset/rational.hpp"

namespace domset {

enum class Color : std::uint8_t { White, Blue, Red };

char color_letter(Color c);

enum class Strategy {
  PhasePreference,  // highest white cover, white vertices first
  MaxGain,          // largest exact potential drop
};

// One greedy step: which vertex was taken, in which phase, and the exact
// drop of the potential it caused.
struct StepRecord {
  int index = 0;  // 1-based
  int phase = 0;  // 0..d+1, evaluated before the step
  int vertex = -1;
  Color prior_color = Color::White;
  Rational gain;
  Rational potential_after;
};

// Raised when an audited run violates the guarantees the coefficient
// system promises (a step gain below s, nonzero final potential, or a
// dominating set larger than floor(a*n/s)).
class AuditError : public std::runtime_error {
 public:
  AuditError(std::string what, StepRecord offending)
      : std::runtime_error(std::move(what)), step_(std::move(offending)) {}
  const StepRecord& step() const { return step_; }

 private:
  StepRecord step_;
};

// Evolving vertex coloring for the potential-function greedy.
//
// White vertices are undominated and carry value a; blue vertices are
// dominated but have a white neighbor and carry b_min(deg_W, d); red
// vertices have their whole closed neighborhood dominated and carry 0.
// The total potential starts at n*a and reaches exactly 0 when the chosen
// set dominates the graph.
//
// Internally every value is scaled by the least common denominator of the
// coefficient set, so all bookkeeping runs in exact integers.
//
// Single-owner mutable: one state per thread. Distinct states never share
// anything, so runs on different graphs can proceed concurrently.
class DominatorState {
 public:
  // Requires min_degree(g) >= c.d unless force is set (forcing voids the
  // per-step gain guarantee, not correctness of the dominating set).
  DominatorState(const Graph& g, const CoefficientSet& c, bool force = false);

  const Graph& graph() const { return graph_; }
  const CoefficientSet& coefficients() const { return coeffs_; }

  bool dominated() const { return white_count_ == 0; }

  Color color(int v) const { return color_.at(static_cast<size_t>(v)); }
  int white_degree(int v) const { return white_deg_.at(static_cast<size_t>(v)); }
  int white_cover(int v) const { return white_cover_.at(static_cast<size_t>(v)); }
  const std::vector<int>& chosen() const { return chosen_; }

  Rational potential() const;
  // Sums vertex values from the maintained coloring; must equal the
  // incrementally tracked potential at all times.
  Rational potential_from_scratch() const;
  bool potential_consistent() const;

  // Phase i means the best white cover over all vertices equals d-i+2
  // (phase 0 once it is d+2 or more). Throws std::logic_error when the
  // graph is already dominated.
  int current_phase() const;

  // Next vertex under the given strategy; ties break to the smallest id.
  int select_vertex(Strategy strategy) const;

  // Exact potential drop that selecting v would cause right now.
  Rational evaluate_gain(int v) const;

  // Puts v into the chosen set and reruns the coloring rules. Requires
  // white_cover(v) >= 1.
  StepRecord apply_selection(int v);

 private:
  mpz_class scaled_value(int v) const;
  mpz_class scaled_gain(int v) const;
  template <typename Int>
  Int gain_impl(int v, const Int& wa, const std::vector<Int>& wb) const;
  Rational unscale(const mpz_class& value) const;

  Graph graph_;  // held by value so the state owns everything it reads
  CoefficientSet coeffs_;
  mpz_class weight_a_;
  mpz_class weight_s_;
  std::vector<mpz_class> weight_b_;  // weight_b_[k-1] = scaled b_k
  mpz_class scale_;                  // common denominator
  bool fits_int64_ = false;          // fast path for gain scans

  std::vector<Color> color_;
  std::vector<int> white_deg_;
  std::vector<int> white_cover_;
  std::vector<int> chosen_;
  mpz_class potential_;  // scaled by scale_
  int white_count_ = 0;
  int steps_ = 0;

  // scratch buffers for gain evaluation / application
  mutable std::vector<int> closed_white_;
  mutable std::vector<int> touch_count_;
  mutable std::vector<int> touched_;
  mutable std::vector<char> in_set_;
};

struct RunResult {
  std::vector<int> dominating_set;
  std::vector<StepRecord> log;
  Rational final_potential;
  bool audited = false;             // gain guarantee was checked
  bool phases_nondecreasing = true;  // observed, never asserted
};

// Runs the greedy to completion. With audit set and min_degree(g) >= c.d,
// enforces gain >= s on every step, a zero final potential, and
// |D| <= floor(a*n/s); violations raise AuditError.
RunResult run_greedy(const Graph& g, const CoefficientSet& c, Strategy strategy,
                     bool audit = true, bool force = false);

// Cap floor(a*n/s) on the number of greedy steps for an n-vertex graph.
mpz_class step_cap(const CoefficientSet& c, int n);

// One "step=... phase=... vertex=... prior=... gain=... potential=..." line.
std::string format_step(const StepRecord& record);

}  // namespace domset
