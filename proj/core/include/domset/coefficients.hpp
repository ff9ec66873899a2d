#pragma once

#include <array>
#include <vector>

#include "domset/rational.hpp"

namespace domset {

// Weight system (a, s, b_1..b_d) for the minimum-degree-d domination bound
// gamma <= (a/s) * n. Produced by solve_coefficients; all entries positive.
struct CoefficientSet {
  int d = 0;
  Rational a;
  Rational s;
  std::vector<Rational> b;  // b[j-1] holds b_j

  const Rational& b_at(int j) const { return b.at(static_cast<size_t>(j) - 1); }

  // a/s in lowest terms.
  Rational bound() const { return a / s; }

  // Same system rescaled so that s equals new_s.
  CoefficientSet scaled_to(const Rational& new_s) const;

  // Rescaled by the least factor that makes every entry an integer.
  CoefficientSet integer_scaled() const;
};

// Outcome of checking the six feasibility conditions on a coefficient set.
// Condition indices follow the usual roman-numeral naming (i)..(vi):
//   (i)   0 <= b_d-b_{d-1} <= ... <= b_2-b_1 <= b_1, and b_d <= a
//   (ii)  (d+2)a - (d+1)b_d >= s
//   (iii) (d+1)a - d b_{d-1} >= s
//   (iv)  for 2<=i<=d-1:
//         (d-i+2)a + (d-i+2)(i-1)(b_{d-i+2}-b_{d-i+1}) - (d-i+1)b_{d-i} >= s
//   (v)   2a + 2(d-1)(b_2-b_1) >= s
//   (vi)  a + d b_1 >= s
struct ConditionReport {
  int d = 0;
  std::array<bool, 6> passed{};  // [0] = (i), ..., [5] = (vi)
  Rational slack_ii;             // (d+2)a - (d+1)b_d - s

  bool condition(int index) const { return passed.at(static_cast<size_t>(index) - 1); }
  bool all_passed() const;
};

// Roman numeral "i".."vi" for a 1-based condition index.
const char* condition_name(int index);

// Solves the d+1 equations obtained from conditions (iii)-(vi) taken with
// equality. Back-substitution with s = 1: b_1 from (vi), b_2 from (v),
// b_3..b_d from (iv), then a from (iii); the result is rescaled so that
// (a, s) is the reduced integer pair of the bound ratio.
// Throws std::invalid_argument for d < 3.
CoefficientSet solve_coefficients(int d);

// Evaluates all six conditions with exact comparisons.
ConditionReport verify_conditions(const CoefficientSet& c);

Rational bound_ratio(const CoefficientSet& c);

}  // namespace domset
