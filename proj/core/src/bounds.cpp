#include "domset/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "domset/coefficients.hpp"

namespace domset {

namespace {

void require_delta(int delta, int least) {
  if (delta < least) {
    throw std::invalid_argument("bound requires delta >= " + std::to_string(least));
  }
}

}  // namespace

double arnautov_bound(int delta, ArnautovVariant variant) {
  require_delta(delta, 1);
  const int top = variant == ArnautovVariant::AsPrinted ? delta + 1 : delta;
  double harmonic = 0.0;
  for (int j = 1; j <= top; ++j) harmonic += 1.0 / j;
  return harmonic / (delta + 1);
}

double alon_bound(int delta) {
  require_delta(delta, 1);
  return (1.0 + std::log(delta + 1.0)) / (delta + 1.0);
}

Rational simple_bound(int delta) {
  require_delta(delta, 1);
  return Rational(delta, 3L * delta - 1);
}

double clark_bound(int delta) {
  require_delta(delta, 1);
  double product = 1.0;
  for (int j = 1; j <= delta + 1; ++j) {
    const double jd = static_cast<double>(j) * delta;
    product *= jd / (jd + 1.0);
  }
  return 1.0 - product;
}

double biro_bound(int delta) {
  require_delta(delta, 2);
  double product = 1.0;
  for (int j = 1; j <= delta - 1; ++j) {
    product *= 1.0 + (delta + 1.0) / (static_cast<double>(j) * delta);
  }
  const double numerator = static_cast<double>(delta) * delta - delta + 1.0;
  return 1.0 - numerator / (1.0 + delta * product);
}

std::vector<BoundsRow> comparison_table(int d_min, int d_max, ArnautovVariant variant) {
  if (d_min < 5 || d_min > d_max) {
    throw std::invalid_argument("comparison_table: requires 5 <= d_min <= d_max");
  }
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<size_t>(d_max - d_min) + 1);
  for (int delta = d_min; delta <= d_max; ++delta) {
    BoundsRow row;
    row.delta = delta;
    row.arnautov = arnautov_bound(delta, variant);
    row.alon = alon_bound(delta);
    row.clark = clark_bound(delta);
    row.biro = biro_bound(delta);
    row.simple = simple_bound(delta);
    row.theorem = solve_coefficients(delta).bound();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_comparison_table(const std::vector<BoundsRow>& rows, ArnautovVariant variant) {
  std::string out = "arnautov variant: ";
  out += variant == ArnautovVariant::AsPrinted ? "printed" : "tabulated";
  out += '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%5s  %10s  %10s  %10s  %10s\n",
                "delta", "arnautov", "simple", "biro", "theorem");
  out += line;
  for (const BoundsRow& row : rows) {
    std::snprintf(line, sizeof line, "%5d  %10s  %10s  %10s  %10s\n",
                  row.delta,
                  format_real(row.arnautov, 6).c_str(),
                  row.simple.decimal(6).c_str(),
                  format_real(row.biro, 6).c_str(),
                  row.theorem.decimal(6).c_str());
    out += line;
  }
  return out;
}

std::string comparison_table_csv(const std::vector<BoundsRow>& rows) {
  std::string out = "delta,arnautov,simple,biro,theorem\n";
  for (const BoundsRow& row : rows) {
    out += std::to_string(row.delta);
    out += ',';
    out += format_real(row.arnautov, 6);
    out += ',';
    out += row.simple.decimal(6);
    out += ',';
    out += format_real(row.biro, 6);
    out += ',';
    out += row.theorem.decimal(6);
    out += '\n';
  }
  return out;
}

}  // namespace domset
