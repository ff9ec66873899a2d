#include "domset/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace domset {

namespace {

constexpr int kNoVertex = -1;

}  // namespace

char color_letter(Color c) {
  switch (c) {
    case Color::White: return 'W';
    case Color::Blue: return 'B';
    case Color::Red: return 'R';
  }
  return '?';
}

DominatorState::DominatorState(const Graph& g, const CoefficientSet& c, bool force)
    : graph_(g), coeffs_(c) {
  const int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("DominatorState: empty graph");
  if (c.d < 3) throw std::invalid_argument("DominatorState: coefficient set needs d >= 3");
  if (static_cast<int>(c.b.size()) != c.d) {
    throw std::invalid_argument("DominatorState: malformed coefficient set");
  }
  if (!force && g.min_degree() < c.d) {
    throw std::invalid_argument(
        "DominatorState: graph min degree " + std::to_string(g.min_degree()) +
        " is below d=" + std::to_string(c.d) + " (pass force to run anyway)");
  }

  // Rescale every coefficient to an integer so all updates stay in mpz.
  scale_ = c.s.denominator();
  auto fold = [this](const Rational& r) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), scale_.get_mpz_t(), r.denominator().get_mpz_t());
    scale_ = l;
  };
  fold(c.a);
  for (const Rational& value : c.b) fold(value);

  auto scaled = [this](const Rational& r) -> mpz_class {
    return r.numerator() * (scale_ / r.denominator());
  };
  weight_a_ = scaled(c.a);
  weight_s_ = scaled(c.s);
  weight_b_.reserve(c.b.size());
  for (const Rational& value : c.b) weight_b_.push_back(scaled(value));

  // int64 fast path applies when no gain can overflow
  mpz_class max_weight = weight_a_;
  for (const mpz_class& w : weight_b_) max_weight = std::max(max_weight, w);
  max_weight = std::max(max_weight, weight_s_);
  mpz_class headroom = (mpz_class(1) << 62) / (2 * n + 4);
  fits_int64_ = max_weight <= headroom;

  color_.assign(static_cast<size_t>(n), Color::White);
  white_deg_.resize(static_cast<size_t>(n));
  white_cover_.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    white_deg_[static_cast<size_t>(v)] = g.degree(v);
    white_cover_[static_cast<size_t>(v)] = g.degree(v) + 1;
  }
  white_count_ = n;
  potential_ = mpz_class(n) * weight_a_;

  touch_count_.assign(static_cast<size_t>(n), 0);
  in_set_.assign(static_cast<size_t>(n), 0);
}

Rational DominatorState::unscale(const mpz_class& value) const {
  return Rational(value, scale_);
}

Rational DominatorState::potential() const { return unscale(potential_); }

mpz_class DominatorState::scaled_value(int v) const {
  switch (color_[static_cast<size_t>(v)]) {
    case Color::White:
      return weight_a_;
    case Color::Blue: {
      const int k = std::min(white_deg_[static_cast<size_t>(v)], coeffs_.d);
      assert(k >= 1);
      return weight_b_[static_cast<size_t>(k) - 1];
    }
    case Color::Red:
      return 0;
  }
  return 0;
}

Rational DominatorState::potential_from_scratch() const {
  mpz_class sum = 0;
  for (int v = 0; v < graph_.vertex_count(); ++v) sum += scaled_value(v);
  return unscale(sum);
}

int DominatorState::current_phase() const {
  if (dominated()) throw std::logic_error("current_phase: graph is already dominated");
  int best_cover = 0;
  for (int cover : white_cover_) best_cover = std::max(best_cover, cover);
  assert(best_cover >= 1);
  const int d = coeffs_.d;
  return best_cover >= d + 2 ? 0 : d + 2 - best_cover;
}

template <typename Int>
Int DominatorState::gain_impl(int v, const Int& wa, const std::vector<Int>& wb) const {
  const int d = coeffs_.d;
  auto blue_weight = [&](int k) -> Int {
    return k >= 1 ? wb[static_cast<size_t>(std::min(k, d)) - 1] : Int(0);
  };

  // S = closed white neighborhood of v: exactly the vertices that become
  // dominated by this selection.
  closed_white_.clear();
  touched_.clear();
  auto consider = [this](int u) {
    if (color_[static_cast<size_t>(u)] == Color::White) {
      closed_white_.push_back(u);
      in_set_[static_cast<size_t>(u)] = 1;
    }
  };
  consider(v);
  for (int u : graph_.neighbors(v)) consider(u);

  for (int u : closed_white_) {
    for (int w : graph_.neighbors(u)) {
      if (touch_count_[static_cast<size_t>(w)]++ == 0) touched_.push_back(w);
    }
  }

  Int gain(0);
  for (int u : closed_white_) {
    // u leaves White: blue when a white neighbor survives, else red
    const int new_deg = white_deg_[static_cast<size_t>(u)] - touch_count_[static_cast<size_t>(u)];
    assert(new_deg >= 0);
    gain += wa - blue_weight(new_deg);
  }
  for (int w : touched_) {
    if (in_set_[static_cast<size_t>(w)]) continue;
    if (color_[static_cast<size_t>(w)] != Color::Blue) continue;  // white: value unchanged
    const int old_deg = white_deg_[static_cast<size_t>(w)];
    const int new_deg = old_deg - touch_count_[static_cast<size_t>(w)];
    assert(new_deg >= 0);
    gain += blue_weight(old_deg) - blue_weight(new_deg);
  }
  return gain;
}

mpz_class DominatorState::scaled_gain(int v) const {
  const mpz_class gain = gain_impl<mpz_class>(v, weight_a_, weight_b_);
  // reset scratch state
  for (int u : closed_white_) in_set_[static_cast<size_t>(u)] = 0;
  for (int w : touched_) touch_count_[static_cast<size_t>(w)] = 0;
  return gain;
}

Rational DominatorState::evaluate_gain(int v) const {
  if (v < 0 || v >= graph_.vertex_count()) {
    throw std::out_of_range("evaluate_gain: vertex id out of range");
  }
  return unscale(scaled_gain(v));
}

int DominatorState::select_vertex(Strategy strategy) const {
  if (dominated()) throw std::logic_error("select_vertex: graph is already dominated");
  const int n = graph_.vertex_count();

  if (strategy == Strategy::PhasePreference) {
    int best_cover = 0;
    int best_white = kNoVertex;
    int best_any = kNoVertex;
    for (int v = 0; v < n; ++v) {
      const int cover = white_cover_[static_cast<size_t>(v)];
      if (cover > best_cover) {
        best_cover = cover;
        best_any = v;
        best_white = color_[static_cast<size_t>(v)] == Color::White ? v : kNoVertex;
      } else if (cover == best_cover && best_white == kNoVertex &&
                 color_[static_cast<size_t>(v)] == Color::White) {
        best_white = v;
      }
    }
    assert(best_any != kNoVertex);
    return best_white != kNoVertex ? best_white : best_any;
  }

  // MaxGain: exact argmax of the potential drop.
  int best = kNoVertex;
  if (fits_int64_) {
    long long weight_a = static_cast<long long>(weight_a_.get_si());
    std::vector<long long> weight_b(weight_b_.size());
    for (size_t k = 0; k < weight_b_.size(); ++k) {
      weight_b[k] = static_cast<long long>(weight_b_[k].get_si());
    }
    long long best_gain = std::numeric_limits<long long>::min();
    for (int v = 0; v < n; ++v) {
      if (white_cover_[static_cast<size_t>(v)] < 1) continue;
      const long long gain = gain_impl<long long>(v, weight_a, weight_b);
      for (int u : closed_white_) in_set_[static_cast<size_t>(u)] = 0;
      for (int w : touched_) touch_count_[static_cast<size_t>(w)] = 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
  } else {
    mpz_class best_gain(-1);
    for (int v = 0; v < n; ++v) {
      if (white_cover_[static_cast<size_t>(v)] < 1) continue;
      const mpz_class gain = scaled_gain(v);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
  }
  assert(best != kNoVertex);
  return best;
}

StepRecord DominatorState::apply_selection(int v) {
  if (v < 0 || v >= graph_.vertex_count()) {
    throw std::out_of_range("apply_selection: vertex id out of range");
  }
  if (white_cover_[static_cast<size_t>(v)] < 1) {
    throw std::invalid_argument("apply_selection: vertex " + std::to_string(v) +
                                " dominates nothing new");
  }
  const int phase = current_phase();
  const Color prior = color_[static_cast<size_t>(v)];

  const mpz_class gain = gain_impl<mpz_class>(v, weight_a_, weight_b_);
  if (sgn(gain) <= 0) {
    throw std::logic_error("apply_selection: nonpositive gain; coefficient set "
                           "violates value monotonicity");
  }

  // Commit. Scratch buffers still hold S (closed_white_/in_set_) and the
  // touch counts from the gain pass.
  for (int w : touched_) {
    white_deg_[static_cast<size_t>(w)] -= touch_count_[static_cast<size_t>(w)];
  }
  for (int u : closed_white_) {
    color_[static_cast<size_t>(u)] =
        white_deg_[static_cast<size_t>(u)] >= 1 ? Color::Blue : Color::Red;
  }
  white_count_ -= static_cast<int>(closed_white_.size());
  for (int w : touched_) {
    if (color_[static_cast<size_t>(w)] == Color::Blue &&
        white_deg_[static_cast<size_t>(w)] == 0) {
      color_[static_cast<size_t>(w)] = Color::Red;
    }
  }
  auto refresh_cover = [this](int x) {
    white_cover_[static_cast<size_t>(x)] =
        white_deg_[static_cast<size_t>(x)] +
        (color_[static_cast<size_t>(x)] == Color::White ? 1 : 0);
  };
  for (int u : closed_white_) refresh_cover(u);
  for (int w : touched_) refresh_cover(w);

  potential_ -= gain;
  chosen_.push_back(v);
  ++steps_;

  // reset scratch state
  for (int u : closed_white_) in_set_[static_cast<size_t>(u)] = 0;
  for (int w : touched_) touch_count_[static_cast<size_t>(w)] = 0;

  StepRecord record;
  record.index = steps_;
  record.phase = phase;
  record.vertex = v;
  record.prior_color = prior;
  record.gain = unscale(gain);
  record.potential_after = unscale(potential_);
  return record;
}

bool DominatorState::potential_consistent() const {
  mpz_class sum = 0;
  for (int v = 0; v < graph_.vertex_count(); ++v) sum += scaled_value(v);
  return sum == potential_;
}

mpz_class step_cap(const CoefficientSet& c, int n) {
  return (c.a * Rational(n) / c.s).floor();
}

RunResult run_greedy(const Graph& g, const CoefficientSet& c, Strategy strategy,
                     bool audit, bool force) {
  DominatorState state(g, c, force);
  const bool audit_applicable = audit && g.min_degree() >= c.d;

  RunResult result;
  int previous_phase = -1;
  while (!state.dominated()) {
    const int v = state.select_vertex(strategy);
    StepRecord record = state.apply_selection(v);
    if (record.phase < previous_phase) result.phases_nondecreasing = false;
    previous_phase = record.phase;
    if (audit_applicable) {
      if (record.gain < c.s) {
        throw AuditError("audit: step " + std::to_string(record.index) + " gain " +
                             record.gain.str() + " is below s=" + c.s.str(),
                         record);
      }
      if (!state.potential_consistent()) {
        throw std::logic_error("audit: incremental potential diverged from recomputation");
      }
    }
    result.log.push_back(std::move(record));
  }

  result.dominating_set = state.chosen();
  result.final_potential = state.potential();
  result.audited = audit_applicable;

  if (!is_dominating(g, result.dominating_set)) {
    throw std::logic_error("run_greedy: produced set is not dominating");
  }
  if (audit_applicable) {
    if (!result.final_potential.is_zero()) {
      throw AuditError("audit: final potential " + result.final_potential.str() + " is not zero",
                       result.log.back());
    }
    const mpz_class cap = step_cap(c, g.vertex_count());
    if (mpz_class(static_cast<long>(result.dominating_set.size())) > cap) {
      throw AuditError("audit: dominating set size " +
                           std::to_string(result.dominating_set.size()) +
                           " exceeds floor(a*n/s)=" + cap.get_str(),
                       result.log.back());
    }
  }
  return result;
}

std::string format_step(const StepRecord& record) {
  std::string out = "step=" + std::to_string(record.index);
  out += " phase=" + std::to_string(record.phase);
  out += " vertex=" + std::to_string(record.vertex);
  out += " prior=";
  out += color_letter(record.prior_color);
  out += " gain=" + record.gain.str();
  out += " potential=" + record.potential_after.str();
  return out;
}

}  // namespace domset
