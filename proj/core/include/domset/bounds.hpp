#pragma once

#include <string>
#include <vector>

#include "domset/rational.hpp"

namespace domset {

// The harmonic-sum bound exists in two variants: the classical statement
// sums 1/j up to delta+1, while the published comparison tables reproduce
// only with the sum up to delta. Both are provided; callers choose.
enum class ArnautovVariant { AsPrinted, AsTabulated };

// (1/(delta+1)) * sum_{j<=delta+1} 1/j, or sum_{j<=delta} for AsTabulated.
double arnautov_bound(int delta, ArnautovVariant variant);

// (1 + ln(delta+1)) / (delta+1).
double alon_bound(int delta);

// delta / (3 delta - 1), exact.
Rational simple_bound(int delta);

// 1 - prod_{j=1}^{delta+1} (j delta)/(j delta + 1).
double clark_bound(int delta);

// 1 - (delta^2-delta+1) / (1 + delta * prod_{j=1}^{delta-1} (1 + (delta+1)/(j delta))).
double biro_bound(int delta);

// One comparison row; display strings use 6 decimals, half away from zero.
struct BoundsRow {
  int delta = 0;
  double arnautov = 0.0;  // variant chosen by comparison_table
  double alon = 0.0;
  double clark = 0.0;
  double biro = 0.0;
  Rational simple;
  Rational theorem;  // a/s from solve_coefficients(delta)
};

// Rows for delta in [d_min, d_max]; requires 5 <= d_min <= d_max.
// AsTabulated is the variant that reproduces the published table.
std::vector<BoundsRow> comparison_table(int d_min, int d_max,
                                        ArnautovVariant variant = ArnautovVariant::AsTabulated);

// Aligned text table with columns delta, arnautov, simple, biro, theorem.
std::string format_comparison_table(const std::vector<BoundsRow>& rows,
                                    ArnautovVariant variant = ArnautovVariant::AsTabulated);

// CSV with header "delta,arnautov,simple,biro,theorem".
std::string comparison_table_csv(const std::vector<BoundsRow>& rows);

}  // namespace domset
